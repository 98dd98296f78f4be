#pragma once

#include "catlift/fincat.hpp"

namespace catlift {

// Categories are held by shared pointer so structures can be layered without
// copying tables. "Same category" means pointer equality or table equality.
bool same_cat(const CatPtr& a, const CatPtr& b);

struct Functor {
  CatPtr dom;
  CatPtr cod;
  std::vector<ObjId> obj_map;  // indexed by dom object
  std::vector<MorId> mor_map;  // indexed by dom morphism

  ObjId on_obj(ObjId x) const { return obj_map[x]; }
  MorId on_mor(MorId f) const { return mor_map[f]; }
};

bool operator==(const Functor& a, const Functor& b);

Functor make_functor(CatPtr dom, CatPtr cod, std::vector<ObjId> obj_map,
                     std::vector<MorId> mor_map);
Functor identity_functor(CatPtr cat);

// g after f; throws IncompatibleFunctors when f.cod and g.dom differ.
Functor compose_functors(const Functor& g, const Functor& f);

Report check_functor(const Functor& F);

struct NatTrans {
  Functor src;
  Functor tgt;
  std::vector<MorId> component;  // indexed by dom object, morphisms of cod

  MorId at(ObjId x) const { return component[x]; }
};

bool operator==(const NatTrans& a, const NatTrans& b);

NatTrans make_nat_trans(Functor src, Functor tgt, std::vector<MorId> component);
NatTrans identity_nat_trans(const Functor& F);

Report check_nat_trans(const NatTrans& alpha);

// Horizontal (Godement) product of G: g => g' with F: f => f', where the
// F side is applied first. Both defining formulas
//   g'(F_M) . G_{f(M)}   and   G_{f'(M)} . g(F_M)
// are evaluated and must agree; a mismatch means an input was not natural.
NatTrans godement_product(const NatTrans& G, const NatTrans& F);

// Componentwise composition of alpha: F => G with beta: G => H.
NatTrans vertical_compose(const NatTrans& beta, const NatTrans& alpha);

struct Bifunctor {
  CatPtr dom1;
  CatPtr dom2;
  CatPtr cod;
  std::vector<ObjId> obj_map;  // [x * dom2.n_obj + y]
  std::vector<MorId> mor_map;  // [f * dom2.n_mor + g]

  ObjId on_obj(ObjId x, ObjId y) const { return obj_map[x * dom2->n_obj() + y]; }
  MorId on_mor(MorId f, MorId g) const { return mor_map[f * dom2->n_mor() + g]; }
};

bool operator==(const Bifunctor& a, const Bifunctor& b);

Bifunctor make_bifunctor(CatPtr dom1, CatPtr dom2, CatPtr cod,
                         std::vector<ObjId> obj_map, std::vector<MorId> mor_map);

// Endpoints, identity pairs, and functoriality on composable pairs of pairs;
// the latter subsumes the interchange law for the two partial applications.
Report check_bifunctor(const Bifunctor& B);

// Partial applications B(x, -) and B(-, y) as ordinary functors.
Functor fix_first(const Bifunctor& B, ObjId x);
Functor fix_second(const Bifunctor& B, ObjId y);

}  // namespace catlift
