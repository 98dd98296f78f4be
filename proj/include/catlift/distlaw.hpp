#pragma once

#include "catlift/action.hpp"

namespace catlift {

// Distributive law between a monad T on M and an action of C on M: a family
//   l^Q_m : T(m act Q) -> T(m) act Q
// binatural in m and Q, compatible with mu (D1), psi (D2), eta (D3) and the
// action unit (D4). Components may be absent (kNoMor) so instances where no
// well-typed choice exists are still representable; check_distlaw reports
// those slots as nonexistent.
struct DistributiveLaw {
  ActionPtr action;
  Monad monad;
  std::vector<MorId> components;  // [m * n_C_obj + q]

  MorId at(ObjId m, ObjId q) const {
    return components[m * action->C->base->n_obj() + q];
  }
};

bool operator==(const DistributiveLaw& a, const DistributiveLaw& b);

DistributiveLaw make_distlaw(ActionPtr action, Monad monad,
                             std::vector<MorId> components);

// Typing, binaturality in both slots, and
//   D1: (mu_m act Q) . l^Q_{Tm} . T(l^Q_m) = l^Q_m . mu_{m act Q}
//   D2: psi^{Q,Q'}_{Tm} . l^{Q(x)Q'}_m
//         = (l^Q_m act Q') . l^{Q'}_{m act Q} . T(psi^{Q,Q'}_m)
//   D3: l^Q_m . eta_{m act Q} = eta_m act Q
//   D4: l^I_m . T(u_m) = u_{Tm}
Report check_distlaw(const DistributiveLaw& l);

// An action of C on the Eilenberg-Moore category of T that strictly lifts
// the lower action through the forgetful functor.
struct LiftedAction {
  MonoidalAction tilde;  // action on em->base
  EMPtr em;
  ActionPtr lower;       // the action being lifted
};

bool operator==(const LiftedAction& a, const LiftedAction& b);

// The four strictness equalities against the forgetful functor, as table
// identities: U(X act~ Q) = U(X) act Q on objects and on morphisms,
// U(u~) = u, U(psi~) = psi.
Report check_strict_lift(const MonoidalAction& tilde, const EMCategory& em,
                         const MonoidalAction& lower);

// Law -> lifted action: X act~ Q has carrier U(X) act Q and module structure
// (nu act Q) . l^Q_m; morphisms, psi~ and u~ are the unique EM morphisms over
// their images downstairs. Throws LawInvalid unless check_distlaw passes.
// Pass a prebuilt EM category to keep object identity across calls.
LiftedAction lift_from_law(const DistributiveLaw& l, EMPtr em = nullptr);

// Lifted action -> law: l^Q_m = U(eps at F(m) act~ Q) . T(eta_m act Q).
DistributiveLaw law_from_lift(const LiftedAction& L);

struct EnumCaps {
  int index_cap = 16;  // max |Ob M| * |Ob C| slots
  int hom_cap = 8;     // max candidates per slot
  int em_cap = 32;     // max Eilenberg-Moore objects
  int em_mor_cap = 64; // max |Mor M| for module enumeration
};

// Exhaustive list of component families passing check_distlaw, in
// lexicographic order of (slot index, morphism id). Backtracking with
// D3/D4 slot prefilters and incremental constraint checks; every leaf is
// re-verified with check_distlaw.
std::vector<DistributiveLaw> enumerate_laws(ActionPtr A, const Monad& T,
                                            EnumCaps caps = {});

// Independent enumeration of strict lifts, built from the strictness
// equalities directly: searches all assignments of a module structure on
// U(X) act Q to each (X, Q), with forced morphism/psi~/u~ tables, and keeps
// candidates passing check_action and check_strict_lift. Does not consult
// lift_from_law.
std::vector<LiftedAction> enumerate_strict_lifts(ActionPtr A, const Monad& T,
                                                 EnumCaps caps = {});

// Runs both enumerations and validates the bijection: equal counts, both
// round trips are identities, and lift_from_law maps the law list exactly
// onto the lift list.
struct BijectionOutcome {
  size_t law_count = 0;
  size_t lift_count = 0;
  bool counts_equal = false;
  bool law_roundtrip_ok = false;
  bool lift_roundtrip_ok = false;
  bool cross_match_ok = false;
  bool ok() const {
    return counts_equal && law_roundtrip_ok && lift_roundtrip_ok &&
           cross_match_ok;
  }
};

BijectionOutcome run_bijection(ActionPtr A, const Monad& T, EnumCaps caps = {});

}  // namespace catlift
