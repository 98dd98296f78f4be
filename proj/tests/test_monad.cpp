#include "doctest.h"

#include "catlift/instances.hpp"
#include "catlift/monad.hpp"

using namespace catlift;

TEST_CASE("closure operators on chains are monads") {
  CatPtr c = chain_category(3);
  for (const auto& img : all_closure_operators(3)) {
    Monad t = closure_monad(c, img);
    CHECK(check_monad(t).ok());
  }
  CHECK(check_monad(identity_monad(c)).ok());
  CHECK(check_monad(const_top_monad(c)).ok());
}

TEST_CASE("closure operator count on small chains") {
  // monotone inflationary idempotent self-maps
  CHECK(all_closure_operators(1).size() == 1);
  CHECK(all_closure_operators(2).size() == 2);
  CHECK(all_closure_operators(3).size() == 4);
  CHECK(all_closure_operators(4).size() == 8);
}

TEST_CASE("non-closure images are rejected") {
  CatPtr c = chain_category(3);
  // not idempotent: 0 -> 1 -> 2
  CHECK_THROWS_AS(closure_monad(c, {1, 2, 2}), MalformedInput);
  // not inflationary
  CHECK_THROWS_AS(closure_monad(c, {0, 0, 2}), MalformedInput);
}

TEST_CASE("translation monads on the group category") {
  CatPtr z4 = cyclic_group_category(4);
  for (int k = 0; k < 4; ++k) CHECK(check_monad(translation_monad(z4, k)).ok());
  Monad t = translation_monad(z4, 1);
  CHECK(t.mu.at(0) == 1);
  CHECK(t.eta.at(0) == 3);
}

TEST_CASE("terminal monad on the set skeleton") {
  CatPtr s = finset_category({1, 2});
  Monad t = terminal_monad(s, 0);
  CHECK(check_monad(t).ok());
  // no terminal structure at a two-element object
  CHECK_THROWS_AS(terminal_monad(s, 1), MalformedInput);
}

TEST_CASE("broken multiplication is caught") {
  CatPtr z4 = cyclic_group_category(4);
  Monad t = translation_monad(z4, 1);
  Monad bad = t;
  bad.mu.component[0] = 2;  // unit law now fails: 2 + 3 != 0
  CHECK_FALSE(check_monad(bad).ok());
}

TEST_CASE("modules over the constant closure") {
  CatPtr c = chain_category(3);
  Monad t = const_top_monad(c);
  // only the top with identity structure is a module
  CHECK(check_tmodule(t, TModule{2, c->identity[2]}).ok());
  CHECK_FALSE(check_tmodule(t, TModule{1, chain_mor(*c, 1, 2)}).ok());
  CHECK_FALSE(check_tmodule(t, TModule{2, chain_mor(*c, 1, 2)}).ok());
}

TEST_CASE("free modules are modules") {
  CatPtr c = chain_category(3);
  for (const auto& img : all_closure_operators(3)) {
    Monad t = closure_monad(c, img);
    for (ObjId m = 0; m < 3; ++m)
      CHECK(check_tmodule(t, free_module(t, m)).ok());
  }
}

TEST_CASE("module morphisms over the identity monad are all morphisms") {
  CatPtr c = chain_category(2);
  Monad t = identity_monad(c);
  TModule a{0, c->identity[0]}, b{1, c->identity[1]};
  CHECK(is_module_morphism(t, a, b, chain_mor(*c, 0, 1)));
}

TEST_CASE("eilenberg-moore of the identity monad is the base") {
  CatPtr c = chain_category(3);
  EMPtr em = em_category(identity_monad(c));
  CHECK(em->base->n_obj() == 3);
  CHECK(em->base->n_mor() == c->n_mor());
  CHECK(check_category(*em->base).ok());
  CHECK(check_functor(em->U).ok());
  CHECK(check_functor(em->F).ok());
  CHECK(check_nat_trans(em->eps).ok());
}

TEST_CASE("eilenberg-moore of the constant closure is a point") {
  CatPtr c = chain_category(3);
  EMPtr em = em_category(const_top_monad(c));
  CHECK(em->base->n_obj() == 1);
  CHECK(em->base->n_mor() == 1);
  CHECK(em->modules[0].carrier == 2);
}

TEST_CASE("eilenberg-moore of the translation monad") {
  CatPtr z4 = cyclic_group_category(4);
  EMPtr em = em_category(translation_monad(z4, 1));
  // unique module structure g1; every endomorphism intertwines
  CHECK(em->base->n_obj() == 1);
  CHECK(em->base->n_mor() == 4);
  CHECK(em->modules[0].nu == 1);
}

TEST_CASE("free functor lands in free modules and U F = T") {
  CatPtr c = chain_category(3);
  Monad t = closure_monad(c, {1, 1, 2});
  EMPtr em = em_category(t);
  Functor uf = compose_functors(em->U, em->F);
  CHECK(uf == t.T);
  for (ObjId m = 0; m < 3; ++m) {
    int x = em->F.on_obj(m);
    CHECK(em->modules[x] == free_module(t, m));
  }
}

TEST_CASE("em construction rejects nonunital monads") {
  CatPtr z4 = cyclic_group_category(4);
  Functor id = identity_functor(z4);
  Monad nu = make_nonunital_monad(id, make_nat_trans(id, id, {0}));
  CHECK(check_monad(nu).ok());
  CHECK_THROWS_AS(em_category(nu), LawInvalid);
}

TEST_CASE("em construction respects the morphism cap") {
  CatPtr s = finset_category({1, 2});
  CHECK_THROWS_AS(em_category(terminal_monad(s, 0), 4), CapExceeded);
}
