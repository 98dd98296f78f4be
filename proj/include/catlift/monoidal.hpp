#pragma once

#include "catlift/functor.hpp"

namespace catlift {

// Monoidal category with explicitly tabulated coherence components. The
// associator points X (x) (Y (x) Z) -> (X (x) Y) (x) Z and the unitors point
// away from the bare object: runit X -> X (x) I, lunit X -> I (x) X. All
// three must be isomorphisms.
struct MonoidalCategory {
  CatPtr base;
  Bifunctor tensor;  // base x base -> base
  ObjId unit = 0;
  std::vector<MorId> assoc;  // [((x * n + y) * n) + z], n = n_obj
  std::vector<MorId> runit;  // [x]: x -> x (x) unit
  std::vector<MorId> lunit;  // [x]: x -> unit (x) x
  bool strict = false;       // declared strict: all components identities

  ObjId ten(ObjId x, ObjId y) const { return tensor.on_obj(x, y); }
  MorId ten_m(MorId f, MorId g) const { return tensor.on_mor(f, g); }
  MorId assoc_at(ObjId x, ObjId y, ObjId z) const {
    int n = base->n_obj();
    return assoc[(x * n + y) * n + z];
  }
  // f (x) id_y and id_x (x) g, the workhorses of every diagram below.
  MorId ten_mo(MorId f, ObjId y) const {
    return tensor.on_mor(f, base->identity[y]);
  }
  MorId ten_om(ObjId x, MorId g) const {
    return tensor.on_mor(base->identity[x], g);
  }
};

using MonoidalPtr = std::shared_ptr<const MonoidalCategory>;

bool operator==(const MonoidalCategory& a, const MonoidalCategory& b);

MonoidalCategory make_monoidal(CatPtr base, Bifunctor tensor, ObjId unit,
                               std::vector<MorId> assoc, std::vector<MorId> runit,
                               std::vector<MorId> lunit, bool strict = false);

// Convenience for strict structures: fills assoc/runit/lunit with identities.
// Requires the tensor to be strictly associative/unital on objects.
MonoidalCategory make_strict_monoidal(CatPtr base, Bifunctor tensor, ObjId unit);

// Naturality and invertibility of assoc/runit/lunit, the pentagon
//   a_{X(x)Y,Z,W} . a_{X,Y,Z(x)W}
//     = (a_{X,Y,Z} (x) W) . a_{X,Y(x)Z,W} . (X (x) a_{Y,Z,W}),
// and the unit triangle, which with outward-pointing unitors reads
//   a_{X,I,Y} . (X (x) lunit_Y) = runit_X (x) Y.
// Expects check_category(base) and check_bifunctor(tensor) to pass; the
// tensor check is re-run here so a single call gives a complete verdict.
Report check_monoidal(const MonoidalCategory& C);

// Monoid object (carrier B, mult: B (x) B -> B, unit morphism I -> B).
struct MonoidObject {
  ObjId carrier = 0;
  MorId mult = kNoMor;
  MorId unit_mor = kNoMor;
};

// Typing, associativity mult.(mult (x) B).a = mult.(B (x) mult) as maps from
// B (x) (B (x) B), and both unit laws routed through the unitors.
Report check_monoid(const MonoidalCategory& C, const MonoidObject& B);

}  // namespace catlift
