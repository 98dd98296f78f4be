#pragma once

#include "catlift/monad.hpp"
#include "catlift/monoidal.hpp"

namespace catlift {

// Right action of a monoidal category C on a category M: a bifunctor
// act: M x C -> M with invertible coherence
//   psi^{X,Y}_m : m act (X (x) Y) -> (m act X) act Y
//   u_m         : m -> m act I
// satisfying the action pentagon against C's associator and two unit
// triangles against C's unitors.
struct MonoidalAction {
  MonoidalPtr C;
  CatPtr M;
  Bifunctor act;              // M x C -> M
  std::vector<MorId> psi;     // [(m * n + x) * n + y], n = C objects
  std::vector<MorId> unit_u;  // [m]: m -> m act I
  bool strict = false;

  ObjId ao(ObjId m, ObjId q) const { return act.on_obj(m, q); }
  MorId am(MorId f, MorId g) const { return act.on_mor(f, g); }
  MorId psi_at(ObjId m, ObjId x, ObjId y) const {
    int n = C->base->n_obj();
    return psi[(m * n + x) * n + y];
  }
  // f act id_q and id_m act g.
  MorId am_mo(MorId f, ObjId q) const {
    return act.on_mor(f, C->base->identity[q]);
  }
  MorId am_om(ObjId m, MorId g) const { return act.on_mor(M->identity[m], g); }
};

using ActionPtr = std::shared_ptr<const MonoidalAction>;

bool operator==(const MonoidalAction& a, const MonoidalAction& b);

MonoidalAction make_action(MonoidalPtr C, CatPtr M, Bifunctor act,
                           std::vector<MorId> psi, std::vector<MorId> unit_u,
                           bool strict = false);

// Strictly associative/unital action: coherence filled with identities.
MonoidalAction make_strict_action(MonoidalPtr C, CatPtr M, Bifunctor act);

// Bifunctor checks, psi/u typing + invertibility + naturality, the pentagon
//   psi^{Y,Z}_{m act X} . psi^{X,Y(x)Z}_m
//     = (psi^{X,Y}_m act Z) . psi^{X(x)Y,Z}_m . (m act a_{X,Y,Z}),
// and the unit triangles
//   psi^{I,Q}_m . (m act lunit_Q) = u_m act Q
//   psi^{Q,I}_m . (m act runit_Q) = u_{m act Q}.
Report check_action(const MonoidalAction& A);

// C acting on itself: act = tensor, psi = assoc, u = runit.
MonoidalAction self_action(MonoidalPtr C);

// The endofunctor L_Q = (- act Q) on M.
Functor curry_action(const MonoidalAction& A, ObjId q);

// psi^{Q,Q'} as a natural isomorphism L_{Q(x)Q'} => L_{Q'} . L_Q.
NatTrans curry_compose_iso(const ActionPtr& A, ObjId q, ObjId q2);

// Monad induced by a monoid object B acting through A:
//   T = L_B,  mu_m = (m act mult) . psi^{B,B}_m^{-1},  eta_m = (m act unit) . u_m.
// Requires psi components at (m, B, B) to be invertible; check_monoid(C, B)
// and check_action(A) are assumed to pass.
Monad monad_from_monoid(const ActionPtr& A, const MonoidObject& B);

// Functor between categories acted on by the same C, with coherence
//   zeta_{m,Q}: F(m) act Q -> F(m act~ Q)
// (dom_action is the source/tilde side). Strict when all components are
// identities.
struct CFunctor {
  ActionPtr dom_action;
  ActionPtr cod_action;
  Functor F;
  std::vector<MorId> zeta;  // [m * n_C_obj + q]

  MorId zeta_at(ObjId m, ObjId q) const {
    return zeta[m * dom_action->C->base->n_obj() + q];
  }
};

// Typing/invertibility/binaturality of zeta plus the unit triangle
// zeta_{m,I} . u_{F m} = F(u~_m) and the psi compatibility hexagon.
Report check_c_functor(const CFunctor& G);

bool is_strict(const CFunctor& G);

// The zeta = identity filling; components are only well-typed when
// F(m) act Q == F(m act~ Q), which check_c_functor reports otherwise.
CFunctor make_identity_zeta_cfunctor(ActionPtr dom_action, ActionPtr cod_action,
                                     Functor F);

}  // namespace catlift
