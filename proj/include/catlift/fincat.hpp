#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catlift/errors.hpp"
#include "catlift/report.hpp"

namespace catlift {

using ObjId = int;
using MorId = int;

inline constexpr MorId kNoMor = -1;

// A finite category given entirely by tables: named objects, named morphisms
// with endpoints, a total identity assignment and a partial composition
// table. Morphism equality is id equality, so every diagram check is a table
// lookup. The composition table is stored rather than derived; check_category
// validates it, which keeps deliberately broken instances representable.
struct FinCategory {
  std::vector<std::string> obj_names;
  std::vector<std::string> mor_names;
  std::vector<ObjId> mor_src;
  std::vector<ObjId> mor_tgt;
  std::vector<MorId> identity;  // indexed by object
  std::vector<MorId> comp;      // comp[g * n_mor + f] = g after f, or kNoMor

  int n_obj() const { return static_cast<int>(obj_names.size()); }
  int n_mor() const { return static_cast<int>(mor_names.size()); }

  MorId comp_at(MorId g, MorId f) const { return comp[g * n_mor() + f]; }
  void set_comp(MorId g, MorId f, MorId gf) { comp[g * n_mor() + f] = gf; }

  bool composable(MorId g, MorId f) const { return mor_tgt[f] == mor_src[g]; }

  const std::string& obj_name(ObjId x) const { return obj_names[x]; }
  const std::string& mor_name(MorId f) const { return mor_names[f]; }
};

using CatPtr = std::shared_ptr<const FinCategory>;

bool operator==(const FinCategory& a, const FinCategory& b);

// Shape validation only (sizes and id ranges); axiom violations are left for
// check_category so that broken tables can be loaded and reported on.
FinCategory make_category(std::vector<std::string> obj_names,
                          std::vector<std::string> mor_names,
                          std::vector<ObjId> mor_src, std::vector<ObjId> mor_tgt,
                          std::vector<MorId> identity, std::vector<MorId> comp);

// Composition with endpoint and table validation; throws CompositionUndefined.
MorId compose(const FinCategory& cat, MorId g, MorId f);

// Non-throwing variant for checkers: kNoMor when undefined.
MorId try_compose(const FinCategory& cat, MorId g, MorId f);

// Composes a pipeline, first element applied first; kNoMor if any step fails.
MorId try_compose_chain(const FinCategory& cat, std::initializer_list<MorId> fs);

std::vector<MorId> hom(const FinCategory& cat, ObjId x, ObjId y);

// Two-sided inverse if one exists.
std::optional<MorId> inverse_of(const FinCategory& cat, MorId f);

// Identity endpoints and unit laws, composition defined exactly on
// composable pairs with correct endpoints, associativity.
Report check_category(const FinCategory& cat);

// Swaps sources and targets and transposes the composition table. Involution:
// opposite(opposite(cat)) == cat including names.
FinCategory opposite(const FinCategory& cat);

}  // namespace catlift
