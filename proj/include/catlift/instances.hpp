#pragma once

#include "catlift/action.hpp"
#include "catlift/distlaw.hpp"

namespace catlift {

// Builders for the small structured instances the tests and shipped fixture
// files are made of. All of them produce fully tabulated data; validity is
// still established by the checkers, not assumed.

// Total order 0 < 1 < ... < n-1 as a category: one morphism c{i}_{j} per
// i <= j.
CatPtr chain_category(int n);

// Morphism id for i <= j in a chain built above.
MorId chain_mor(const FinCategory& chain, int i, int j);

// (x, y) -> max(x, y), unit 0, strict. Dually min with unit n-1.
MonoidalPtr max_monoidal(CatPtr chain);
MonoidalPtr min_monoidal(CatPtr chain);

// m act q = max(m, q) where C is a max-chain of length <= length of M.
ActionPtr max_action(MonoidalPtr C, CatPtr M);
// m act q = min(m, q); requires equal lengths so the unit stays strict.
ActionPtr min_action(MonoidalPtr C, CatPtr M);

Monad identity_monad(CatPtr M);

// Monotone map on a chain given by images; mu/eta are the unique chain
// morphisms, so this throws unless the map is increasing and idempotent.
Monad closure_monad(CatPtr chain, const std::vector<int>& image);
Monad const_top_monad(CatPtr chain);

// All closure operators on an n-chain (image vectors), lexicographic.
std::vector<std::vector<int>> all_closure_operators(int n);

// Skeleton of finite sets with the given cardinalities: objects o0, o1, ...
// and every function between them as a morphism.
CatPtr finset_category(const std::vector<int>& sizes);

// One object pt with Z/n as endomorphisms, composition = addition.
CatPtr cyclic_group_category(int n);

CatPtr discrete_category(const std::vector<std::string>& names);

// A finite monoid as a discrete strict monoidal category: tensor on objects
// is the monoid table.
MonoidalPtr discrete_monoid_monoidal(CatPtr discrete,
                                     const std::vector<ObjId>& mult,
                                     ObjId unit);

// Strict action of a discrete monoid through endofunctors of M: one
// (obj_map, mor_map) pair per monoid element. Element products must act as
// composites (checked on objects at construction, on morphisms by
// check_action).
ActionPtr endo_action(MonoidalPtr C, CatPtr M,
                      const std::vector<std::vector<ObjId>>& obj_maps,
                      const std::vector<std::vector<MorId>>& mor_maps);

// T = const at a terminal object: requires every hom(x, term) a singleton.
Monad terminal_monad(CatPtr M, ObjId term);

// On the one-object Z/n category: T = Id, mu = g^k, eta = g^{-k}.
Monad translation_monad(CatPtr bz, int k);

// Prebuilt bundles used as fixtures: an action, a monad, plus a name.
struct InstanceBundle {
  std::string name;
  ActionPtr action;
  Monad monad;
};

// The six shipped instances exercised by the bijection suite.
InstanceBundle bundle_idmonad_chain3();    // identity monad, max action of a 2-chain
InstanceBundle bundle_closure_chain2();    // const-top closure on the 2-chain
InstanceBundle bundle_closure_chain3();    // const-top closure on the 3-chain
InstanceBundle bundle_min_chain2();        // min action, const-top: no law exists
InstanceBundle bundle_finset_conj();       // sets {1,2}, swap-conjugation action
InstanceBundle bundle_z4_translation();    // Z/4, negation action, translation monad

std::vector<InstanceBundle> all_bundles();

}  // namespace catlift
