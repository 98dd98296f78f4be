#include "doctest.h"

#include "catlift/fincat.hpp"
#include "catlift/instances.hpp"

using namespace catlift;

TEST_CASE("chain categories satisfy the axioms") {
  for (int n = 1; n <= 5; ++n) {
    CatPtr c = chain_category(n);
    CHECK(c->n_obj() == n);
    CHECK(c->n_mor() == n * (n + 1) / 2);
    CHECK(check_category(*c).ok());
  }
}

TEST_CASE("chain composition is the unique arrow") {
  CatPtr c = chain_category(4);
  MorId f = chain_mor(*c, 0, 2);
  MorId g = chain_mor(*c, 2, 3);
  CHECK(compose(*c, g, f) == chain_mor(*c, 0, 3));
  // not composable the other way
  CHECK(try_compose(*c, f, g) == kNoMor);
  CHECK_THROWS_AS(compose(*c, f, g), CompositionUndefined);
}

TEST_CASE("compose chain helper") {
  CatPtr c = chain_category(4);
  MorId m = try_compose_chain(
      *c, {chain_mor(*c, 0, 1), chain_mor(*c, 1, 3), chain_mor(*c, 3, 3)});
  CHECK(m == chain_mor(*c, 0, 3));
  CHECK(try_compose_chain(*c, {chain_mor(*c, 1, 2), chain_mor(*c, 1, 2)}) ==
        kNoMor);
}

TEST_CASE("make_category validates shape only") {
  // mismatched identity table size
  CHECK_THROWS_AS(make_category({"a"}, {"f"}, {0}, {0}, {0, 0}, {0}),
                  MalformedInput);
  // out-of-range morphism endpoint
  CHECK_THROWS_AS(make_category({"a"}, {"f"}, {1}, {0}, {0}, {0}),
                  MalformedInput);
  // a broken composition table is loadable, the checker reports it
  FinCategory bad = make_category({"a"}, {"f", "g"}, {0, 0}, {0, 0}, {0},
                                  {1, 1, 1, 1});
  Report r = check_category(bad);
  CHECK_FALSE(r.ok());
}

TEST_CASE("identity with wrong endpoints is caught") {
  CatPtr c = chain_category(2);
  FinCategory bad = *c;
  bad.identity[0] = chain_mor(*c, 0, 1);
  CHECK_FALSE(check_category(bad).ok());
}

TEST_CASE("unit law violation is caught") {
  CatPtr c = chain_category(2);
  FinCategory bad = *c;
  // id1 . c0_1 rewritten to a wrong (ill-typed) value
  bad.set_comp(bad.identity[1], chain_mor(*c, 0, 1), bad.identity[0]);
  CHECK_FALSE(check_category(bad).ok());
}

TEST_CASE("hom sets in the finite-set skeleton") {
  CatPtr s = finset_category({1, 2});
  CHECK(s->n_obj() == 2);
  CHECK(check_category(*s).ok());
  CHECK(hom(*s, 0, 0).size() == 1);
  CHECK(hom(*s, 0, 1).size() == 2);
  CHECK(hom(*s, 1, 0).size() == 1);
  CHECK(hom(*s, 1, 1).size() == 4);
}

TEST_CASE("finset composition associates on a spot check") {
  CatPtr s = finset_category({2, 3});
  CHECK(check_category(*s).ok());
  for (MorId f = 0; f < s->n_mor(); ++f)
    for (MorId g = 0; g < s->n_mor(); ++g)
      for (MorId h = 0; h < s->n_mor(); ++h) {
        if (!s->composable(g, f) || !s->composable(h, g)) continue;
        CHECK(compose(*s, h, compose(*s, g, f)) ==
              compose(*s, compose(*s, h, g), f));
      }
}

TEST_CASE("cyclic group category") {
  CatPtr z = cyclic_group_category(4);
  CHECK(z->n_obj() == 1);
  CHECK(z->n_mor() == 4);
  CHECK(check_category(*z).ok());
  // every element invertible; g1 inverse g3
  CHECK(inverse_of(*z, 1) == 3);
  CHECK(inverse_of(*z, 0) == 0);
}

TEST_CASE("inverses in a poset exist only for identities") {
  CatPtr c = chain_category(3);
  CHECK(inverse_of(*c, c->identity[1]) == c->identity[1]);
  CHECK_FALSE(inverse_of(*c, chain_mor(*c, 0, 1)).has_value());
}

TEST_CASE("opposite is an involution and preserves validity") {
  for (CatPtr c : {chain_category(3), finset_category({1, 2}),
                   cyclic_group_category(3)}) {
    FinCategory op = opposite(*c);
    CHECK(check_category(op).ok());
    CHECK(opposite(op) == *c);
    // hom sets transpose
    CHECK(hom(op, 1, 0).size() == hom(*c, 0, 1).size());
  }
}

TEST_CASE("discrete category has only identities") {
  CatPtr d = discrete_category({"e", "s"});
  CHECK(d->n_mor() == 2);
  CHECK(check_category(*d).ok());
  CHECK(hom(*d, 0, 1).empty());
}
