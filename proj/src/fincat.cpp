#include "catlift/fincat.hpp"

#include <sstream>

namespace catlift {

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& v : items) {
    os << "FAIL " << v.check;
    if (!v.where.empty()) {
      os << " at (";
      bool first = true;
      for (const auto& [role, val] : v.where) {
        if (!first) os << ", ";
        os << role << "=" << val;
        first = false;
      }
      os << ")";
    }
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  return a.obj_names == b.obj_names && a.mor_names == b.mor_names &&
         a.mor_src == b.mor_src && a.mor_tgt == b.mor_tgt &&
         a.identity == b.identity && a.comp == b.comp;
}

FinCategory make_category(std::vector<std::string> obj_names,
                          std::vector<std::string> mor_names,
                          std::vector<ObjId> mor_src, std::vector<ObjId> mor_tgt,
                          std::vector<MorId> identity, std::vector<MorId> comp) {
  const int no = static_cast<int>(obj_names.size());
  const int nm = static_cast<int>(mor_names.size());
  if (static_cast<int>(mor_src.size()) != nm ||
      static_cast<int>(mor_tgt.size()) != nm)
    throw MalformedInput("make_category: endpoint vectors must match morphism count");
  if (static_cast<int>(identity.size()) != no)
    throw MalformedInput("make_category: identity vector must match object count");
  if (static_cast<int>(comp.size()) != nm * nm)
    throw MalformedInput("make_category: composition table must be n_mor^2");
  for (int f = 0; f < nm; ++f) {
    if (mor_src[f] < 0 || mor_src[f] >= no || mor_tgt[f] < 0 || mor_tgt[f] >= no)
      throw MalformedInput("make_category: morphism endpoint out of range: " +
                           mor_names[f]);
  }
  for (int x = 0; x < no; ++x) {
    if (identity[x] < 0 || identity[x] >= nm)
      throw MalformedInput("make_category: identity out of range: " + obj_names[x]);
  }
  for (MorId e : comp) {
    if (e != kNoMor && (e < 0 || e >= nm))
      throw MalformedInput("make_category: composition entry out of range");
  }
  FinCategory cat;
  cat.obj_names = std::move(obj_names);
  cat.mor_names = std::move(mor_names);
  cat.mor_src = std::move(mor_src);
  cat.mor_tgt = std::move(mor_tgt);
  cat.identity = std::move(identity);
  cat.comp = std::move(comp);
  return cat;
}

MorId compose(const FinCategory& cat, MorId g, MorId f) {
  if (f < 0 || f >= cat.n_mor() || g < 0 || g >= cat.n_mor())
    throw CompositionUndefined("compose: morphism id out of range");
  if (!cat.composable(g, f))
    throw CompositionUndefined("compose: endpoints mismatch: " + cat.mor_name(g) +
                               " after " + cat.mor_name(f));
  MorId gf = cat.comp_at(g, f);
  if (gf == kNoMor)
    throw CompositionUndefined("compose: table entry missing: " + cat.mor_name(g) +
                               " after " + cat.mor_name(f));
  return gf;
}

MorId try_compose(const FinCategory& cat, MorId g, MorId f) {
  if (f < 0 || f >= cat.n_mor() || g < 0 || g >= cat.n_mor()) return kNoMor;
  if (!cat.composable(g, f)) return kNoMor;
  return cat.comp_at(g, f);
}

MorId try_compose_chain(const FinCategory& cat, std::initializer_list<MorId> fs) {
  MorId acc = kNoMor;
  bool first = true;
  for (MorId f : fs) {
    if (first) {
      acc = f;
      first = false;
      if (acc < 0 || acc >= cat.n_mor()) return kNoMor;
    } else {
      acc = try_compose(cat, f, acc);
      if (acc == kNoMor) return kNoMor;
    }
  }
  return acc;
}

std::vector<MorId> hom(const FinCategory& cat, ObjId x, ObjId y) {
  std::vector<MorId> out;
  for (MorId f = 0; f < cat.n_mor(); ++f)
    if (cat.mor_src[f] == x && cat.mor_tgt[f] == y) out.push_back(f);
  return out;
}

std::optional<MorId> inverse_of(const FinCategory& cat, MorId f) {
  ObjId x = cat.mor_src[f], y = cat.mor_tgt[f];
  for (MorId w : hom(cat, y, x)) {
    if (try_compose(cat, w, f) == cat.identity[x] &&
        try_compose(cat, f, w) == cat.identity[y])
      return w;
  }
  return std::nullopt;
}

Report check_category(const FinCategory& cat) {
  Report rep;
  const int nm = cat.n_mor();

  for (ObjId x = 0; x < cat.n_obj(); ++x) {
    MorId i = cat.identity[x];
    if (cat.mor_src[i] != x || cat.mor_tgt[i] != x)
      rep.add("category.identity.endpoints", {{"object", cat.obj_name(x)}},
              "identity " + cat.mor_name(i) + " is not an endomorphism of " +
                  cat.obj_name(x));
  }

  for (MorId g = 0; g < nm; ++g) {
    for (MorId f = 0; f < nm; ++f) {
      MorId gf = cat.comp_at(g, f);
      bool ok_pair = cat.composable(g, f);
      if (ok_pair && gf == kNoMor) {
        rep.add("category.comp.missing",
                {{"g", cat.mor_name(g)}, {"f", cat.mor_name(f)}},
                "composable pair has no composite");
      } else if (!ok_pair && gf != kNoMor) {
        rep.add("category.comp.spurious",
                {{"g", cat.mor_name(g)}, {"f", cat.mor_name(f)}},
                "composite defined for non-composable pair");
      } else if (gf != kNoMor) {
        if (cat.mor_src[gf] != cat.mor_src[f] || cat.mor_tgt[gf] != cat.mor_tgt[g])
          rep.add("category.comp.endpoints",
                  {{"g", cat.mor_name(g)}, {"f", cat.mor_name(f)},
                   {"gf", cat.mor_name(gf)}},
                  "composite has wrong endpoints");
      }
    }
  }

  for (MorId f = 0; f < nm; ++f) {
    MorId r = try_compose(cat, f, cat.identity[cat.mor_src[f]]);
    if (r != f)
      rep.add("category.unit.right", {{"f", cat.mor_name(f)}},
              "f after id differs from f");
    MorId l = try_compose(cat, cat.identity[cat.mor_tgt[f]], f);
    if (l != f)
      rep.add("category.unit.left", {{"f", cat.mor_name(f)}},
              "id after f differs from f");
  }

  // Associativity over all composable triples; witnesses carry all three ids.
  for (MorId h = 0; h < nm; ++h) {
    for (MorId g = 0; g < nm; ++g) {
      if (!cat.composable(h, g)) continue;
      for (MorId f = 0; f < nm; ++f) {
        if (!cat.composable(g, f)) continue;
        MorId left = try_compose(cat, try_compose(cat, h, g), f);
        MorId right = try_compose(cat, h, try_compose(cat, g, f));
        if (left != right || left == kNoMor)
          rep.add("category.assoc",
                  {{"h", cat.mor_name(h)}, {"g", cat.mor_name(g)},
                   {"f", cat.mor_name(f)}},
                  "(h g) f != h (g f)");
      }
    }
  }
  return rep;
}

FinCategory opposite(const FinCategory& cat) {
  FinCategory op = cat;
  std::swap(op.mor_src, op.mor_tgt);
  const int nm = cat.n_mor();
  for (MorId g = 0; g < nm; ++g)
    for (MorId f = 0; f < nm; ++f) op.comp[g * nm + f] = cat.comp_at(f, g);
  return op;
}

}  // namespace catlift
