#include "doctest.h"

#include "catlift/distlaw.hpp"
#include "catlift/instances.hpp"

using namespace catlift;

namespace {

DistributiveLaw identity_components_law(const InstanceBundle& b) {
  const FinCategory& m = *b.action->M;
  const int nc = b.action->C->base->n_obj();
  std::vector<MorId> comp(static_cast<size_t>(m.n_obj()) * nc);
  for (ObjId i = 0; i < m.n_obj(); ++i)
    for (ObjId q = 0; q < nc; ++q)
      comp[static_cast<size_t>(i) * nc + q] =
          m.identity[b.monad.t_obj(b.action->ao(i, q))];
  return make_distlaw(b.action, b.monad, comp);
}

}  // namespace

TEST_CASE("constant closure against the max action distributes") {
  InstanceBundle b = bundle_closure_chain3();
  DistributiveLaw l = identity_components_law(b);
  CHECK(check_distlaw(l).ok());
}

TEST_CASE("identity monad distributes with identity components") {
  InstanceBundle b = bundle_idmonad_chain3();
  CHECK(check_distlaw(identity_components_law(b)).ok());
}

TEST_CASE("translation against negation needs a twisted component") {
  InstanceBundle b = bundle_z4_translation();
  DistributiveLaw good = make_distlaw(b.action, b.monad, {0, 2});
  CHECK(check_distlaw(good).ok());
  DistributiveLaw bad = make_distlaw(b.action, b.monad, {0, 1});
  Report r = check_distlaw(bad);
  CHECK_FALSE(r.ok());
  CHECK(r.has("distlaw.D1"));
  DistributiveLaw untwisted = identity_components_law(b);
  CHECK_FALSE(check_distlaw(untwisted).ok());
}

TEST_CASE("missing components are reported as nonexistent") {
  InstanceBundle b = bundle_min_chain2();
  const int slots = b.action->M->n_obj() * b.action->C->base->n_obj();
  DistributiveLaw l =
      make_distlaw(b.action, b.monad, std::vector<MorId>(slots, kNoMor));
  Report r = check_distlaw(l);
  CHECK_FALSE(r.ok());
  CHECK(r.has("distlaw.component.nonexistent"));
}

TEST_CASE("enumeration finds exactly the known laws") {
  CHECK(enumerate_laws(bundle_closure_chain2().action,
                       bundle_closure_chain2().monad)
            .size() == 1);
  CHECK(enumerate_laws(bundle_min_chain2().action, bundle_min_chain2().monad)
            .empty());
  auto z4 = bundle_z4_translation();
  auto laws = enumerate_laws(z4.action, z4.monad);
  REQUIRE(laws.size() == 1);
  CHECK(laws[0].components == std::vector<MorId>{0, 2});
}

TEST_CASE("enumeration respects caps") {
  InstanceBundle b = bundle_closure_chain3();
  EnumCaps tight;
  tight.index_cap = 2;  // 9 slots here
  CHECK_THROWS_AS(enumerate_laws(b.action, b.monad, tight), CapExceeded);
  EnumCaps homs;
  homs.hom_cap = 0;
  CHECK_THROWS_AS(enumerate_laws(bundle_finset_conj().action,
                                 bundle_finset_conj().monad, homs),
                  CapExceeded);
}

TEST_CASE("lift of the closure law acts on the one-point module category") {
  InstanceBundle b = bundle_closure_chain3();
  DistributiveLaw l = identity_components_law(b);
  LiftedAction up = lift_from_law(l);
  CHECK(check_action(up.tilde).ok());
  CHECK(check_strict_lift(up.tilde, *up.em, *up.lower).ok());
  CHECK(law_from_lift(up) == l);
}

TEST_CASE("lift of the twisted group law round-trips") {
  InstanceBundle b = bundle_z4_translation();
  DistributiveLaw l = make_distlaw(b.action, b.monad, {0, 2});
  LiftedAction up = lift_from_law(l);
  CHECK(check_action(up.tilde).ok());
  CHECK(check_strict_lift(up.tilde, *up.em, *up.lower).ok());
  CHECK(law_from_lift(up) == l);
}

TEST_CASE("lifting an invalid law throws") {
  InstanceBundle b = bundle_z4_translation();
  DistributiveLaw bad = make_distlaw(b.action, b.monad, {0, 1});
  CHECK_THROWS_AS(lift_from_law(bad), LawInvalid);
}

TEST_CASE("independent lift enumeration agrees everywhere") {
  for (const InstanceBundle& b : all_bundles()) {
    CAPTURE(b.name);
    auto laws = enumerate_laws(b.action, b.monad);
    auto lifts = enumerate_strict_lifts(b.action, b.monad);
    CHECK(laws.size() == lifts.size());
    BijectionOutcome out = run_bijection(b.action, b.monad);
    CHECK(out.ok());
    CHECK(out.law_count == laws.size());
  }
}

TEST_CASE("frozen law counts for the shipped instances") {
  std::vector<std::pair<std::string, size_t>> expected = {
      {"poset_max2", 1}, {"poset_max3", 1}, {"poset_min2", 0},
      {"idmonad3", 1},   {"finset2", 1},    {"bz4", 1},
  };
  auto bundles = all_bundles();
  REQUIRE(bundles.size() == expected.size());
  for (size_t i = 0; i < bundles.size(); ++i) {
    CAPTURE(bundles[i].name);
    CHECK(bundles[i].name == expected[i].first);
    CHECK(enumerate_laws(bundles[i].action, bundles[i].monad).size() ==
          expected[i].second);
  }
}

TEST_CASE("a strict lift found by search verifies as a lift") {
  InstanceBundle b = bundle_finset_conj();
  auto lifts = enumerate_strict_lifts(b.action, b.monad);
  REQUIRE(lifts.size() == 1);
  CHECK(check_action(lifts[0].tilde).ok());
  CHECK(check_strict_lift(lifts[0].tilde, *lifts[0].em, *lifts[0].lower).ok());
  DistributiveLaw down = law_from_lift(lifts[0]);
  CHECK(check_distlaw(down).ok());
}
