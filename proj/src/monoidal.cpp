#include "catlift/monoidal.hpp"

namespace catlift {

bool operator==(const MonoidalCategory& a, const MonoidalCategory& b) {
  return same_cat(a.base, b.base) && a.tensor == b.tensor && a.unit == b.unit &&
         a.assoc == b.assoc && a.runit == b.runit && a.lunit == b.lunit;
}

MonoidalCategory make_monoidal(CatPtr base, Bifunctor tensor, ObjId unit,
                               std::vector<MorId> assoc, std::vector<MorId> runit,
                               std::vector<MorId> lunit, bool strict) {
  const int n = base->n_obj();
  if (unit < 0 || unit >= n) throw MalformedInput("make_monoidal: unit out of range");
  if (!same_cat(tensor.dom1, base) || !same_cat(tensor.dom2, base) ||
      !same_cat(tensor.cod, base))
    throw MalformedInput("make_monoidal: tensor must be base x base -> base");
  if (static_cast<int>(assoc.size()) != n * n * n)
    throw MalformedInput("make_monoidal: assoc table must be n_obj^3");
  if (static_cast<int>(runit.size()) != n || static_cast<int>(lunit.size()) != n)
    throw MalformedInput("make_monoidal: unitor tables must be n_obj");
  for (MorId m : assoc)
    if (m < 0 || m >= base->n_mor())
      throw MalformedInput("make_monoidal: assoc entry out of range");
  for (MorId m : runit)
    if (m < 0 || m >= base->n_mor())
      throw MalformedInput("make_monoidal: runit entry out of range");
  for (MorId m : lunit)
    if (m < 0 || m >= base->n_mor())
      throw MalformedInput("make_monoidal: lunit entry out of range");
  MonoidalCategory C;
  C.base = std::move(base);
  C.tensor = std::move(tensor);
  C.unit = unit;
  C.assoc = std::move(assoc);
  C.runit = std::move(runit);
  C.lunit = std::move(lunit);
  C.strict = strict;
  return C;
}

MonoidalCategory make_strict_monoidal(CatPtr base, Bifunctor tensor, ObjId unit) {
  const int n = base->n_obj();
  std::vector<MorId> assoc(n * n * n), runit(n), lunit(n);
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      for (ObjId z = 0; z < n; ++z) {
        ObjId l = tensor.on_obj(x, tensor.on_obj(y, z));
        ObjId r = tensor.on_obj(tensor.on_obj(x, y), z);
        if (l != r)
          throw MalformedInput(
              "make_strict_monoidal: tensor not associative on objects");
        assoc[(x * n + y) * n + z] = base->identity[l];
      }
    }
    if (tensor.on_obj(x, unit) != x || tensor.on_obj(unit, x) != x)
      throw MalformedInput("make_strict_monoidal: unit not strict on objects");
    runit[x] = base->identity[x];
    lunit[x] = base->identity[x];
  }
  return make_monoidal(std::move(base), std::move(tensor), unit, std::move(assoc),
                       std::move(runit), std::move(lunit), true);
}

namespace {

void check_iso(const FinCategory& cat, MorId f, const char* check,
               std::vector<std::pair<std::string, std::string>> where,
               Report& rep) {
  if (!inverse_of(cat, f))
    rep.add(check, std::move(where), cat.mor_name(f) + " is not invertible");
}

}  // namespace

Report check_monoidal(const MonoidalCategory& C) {
  Report rep = check_bifunctor(C.tensor);
  const FinCategory& B = *C.base;
  const int n = B.n_obj();

  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      for (ObjId z = 0; z < n; ++z) {
        MorId a = C.assoc_at(x, y, z);
        if (B.mor_src[a] != C.ten(x, C.ten(y, z)) ||
            B.mor_tgt[a] != C.ten(C.ten(x, y), z)) {
          rep.add("monoidal.assoc.endpoints",
                  {{"X", B.obj_name(x)}, {"Y", B.obj_name(y)}, {"Z", B.obj_name(z)}},
                  "associator component has wrong endpoints");
          continue;
        }
        check_iso(B, a, "monoidal.assoc.iso",
                  {{"X", B.obj_name(x)}, {"Y", B.obj_name(y)}, {"Z", B.obj_name(z)}},
                  rep);
        if (C.strict && a != B.identity[B.mor_src[a]])
          rep.add("monoidal.strict",
                  {{"X", B.obj_name(x)}, {"Y", B.obj_name(y)}, {"Z", B.obj_name(z)}},
                  "declared strict but associator is not an identity");
      }
    }
  }

  for (ObjId x = 0; x < n; ++x) {
    MorId r = C.runit[x];
    if (B.mor_src[r] != x || B.mor_tgt[r] != C.ten(x, C.unit))
      rep.add("monoidal.runit.endpoints", {{"X", B.obj_name(x)}},
              "right unitor component has wrong endpoints");
    else
      check_iso(B, r, "monoidal.runit.iso", {{"X", B.obj_name(x)}}, rep);
    MorId l = C.lunit[x];
    if (B.mor_src[l] != x || B.mor_tgt[l] != C.ten(C.unit, x))
      rep.add("monoidal.lunit.endpoints", {{"X", B.obj_name(x)}},
              "left unitor component has wrong endpoints");
    else
      check_iso(B, l, "monoidal.lunit.iso", {{"X", B.obj_name(x)}}, rep);
    if (C.strict && (r != B.identity[x] || l != B.identity[x]))
      rep.add("monoidal.strict", {{"X", B.obj_name(x)}},
              "declared strict but a unitor is not an identity");
  }

  // Naturality of the associator in all three slots at once.
  for (MorId f = 0; f < B.n_mor(); ++f) {
    for (MorId g = 0; g < B.n_mor(); ++g) {
      for (MorId h = 0; h < B.n_mor(); ++h) {
        ObjId x = B.mor_src[f], x2 = B.mor_tgt[f];
        ObjId y = B.mor_src[g], y2 = B.mor_tgt[g];
        ObjId z = B.mor_src[h], z2 = B.mor_tgt[h];
        MorId lhs = try_compose(B, C.assoc_at(x2, y2, z2),
                                C.ten_m(f, C.ten_m(g, h)));
        MorId rhs = try_compose(B, C.ten_m(C.ten_m(f, g), h), C.assoc_at(x, y, z));
        if (lhs != rhs || lhs == kNoMor)
          rep.add("monoidal.assoc.natural",
                  {{"f", B.mor_name(f)}, {"g", B.mor_name(g)}, {"h", B.mor_name(h)}},
                  "associator naturality square does not commute");
      }
    }
  }
  for (MorId f = 0; f < B.n_mor(); ++f) {
    ObjId x = B.mor_src[f], y = B.mor_tgt[f];
    MorId lhs = try_compose(B, C.runit[y], f);
    MorId rhs = try_compose(B, C.ten_mo(f, C.unit), C.runit[x]);
    if (lhs != rhs || lhs == kNoMor)
      rep.add("monoidal.runit.natural", {{"f", B.mor_name(f)}},
              "right unitor naturality square does not commute");
    lhs = try_compose(B, C.lunit[y], f);
    rhs = try_compose(B, C.ten_om(C.unit, f), C.lunit[x]);
    if (lhs != rhs || lhs == kNoMor)
      rep.add("monoidal.lunit.natural", {{"f", B.mor_name(f)}},
              "left unitor naturality square does not commute");
  }

  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      for (ObjId z = 0; z < n; ++z) {
        for (ObjId w = 0; w < n; ++w) {
          MorId lhs = try_compose_chain(
              B, {C.assoc_at(x, y, C.ten(z, w)), C.assoc_at(C.ten(x, y), z, w)});
          MorId rhs = try_compose_chain(
              B, {C.ten_om(x, C.assoc_at(y, z, w)), C.assoc_at(x, C.ten(y, z), w),
                  C.ten_mo(C.assoc_at(x, y, z), w)});
          if (lhs != rhs || lhs == kNoMor)
            rep.add("monoidal.pentagon",
                    {{"X", B.obj_name(x)}, {"Y", B.obj_name(y)},
                     {"Z", B.obj_name(z)}, {"W", B.obj_name(w)}},
                    "pentagon does not commute");
        }
      }
    }
  }

  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      MorId lhs = try_compose_chain(
          B, {C.ten_om(x, C.lunit[y]), C.assoc_at(x, C.unit, y)});
      MorId rhs = C.ten_mo(C.runit[x], y);
      if (lhs != rhs || lhs == kNoMor)
        rep.add("monoidal.triangle", {{"X", B.obj_name(x)}, {"Y", B.obj_name(y)}},
                "unit triangle does not commute");
    }
  }
  return rep;
}

Report check_monoid(const MonoidalCategory& C, const MonoidObject& Bo) {
  Report rep;
  const FinCategory& B = *C.base;
  ObjId b = Bo.carrier;
  if (b < 0 || b >= B.n_obj()) {
    rep.add("monoid.carrier", {}, "carrier out of range");
    return rep;
  }
  bool mult_ok = Bo.mult >= 0 && Bo.mult < B.n_mor() &&
                 B.mor_src[Bo.mult] == C.ten(b, b) && B.mor_tgt[Bo.mult] == b;
  if (!mult_ok)
    rep.add("monoid.mult.endpoints", {{"B", B.obj_name(b)}},
            "mult is not a morphism B (x) B -> B");
  bool unit_ok = Bo.unit_mor >= 0 && Bo.unit_mor < B.n_mor() &&
                 B.mor_src[Bo.unit_mor] == C.unit && B.mor_tgt[Bo.unit_mor] == b;
  if (!unit_ok)
    rep.add("monoid.unit.endpoints", {{"B", B.obj_name(b)}},
            "unit is not a morphism I -> B");
  if (!mult_ok || !unit_ok) return rep;

  // Associativity: both routes from B (x) (B (x) B) to B.
  MorId lhs = try_compose_chain(
      B, {C.assoc_at(b, b, b), C.ten_mo(Bo.mult, b), Bo.mult});
  MorId rhs = try_compose_chain(B, {C.ten_om(b, Bo.mult), Bo.mult});
  if (lhs != rhs || lhs == kNoMor)
    rep.add("monoid.assoc", {{"B", B.obj_name(b)}},
            "multiplication not associative");

  MorId lu = try_compose_chain(
      B, {C.lunit[b], C.ten_m(Bo.unit_mor, B.identity[b]), Bo.mult});
  if (lu != B.identity[b])
    rep.add("monoid.unit.left", {{"B", B.obj_name(b)}},
            "left unit law fails");
  MorId ru = try_compose_chain(
      B, {C.runit[b], C.ten_m(B.identity[b], Bo.unit_mor), Bo.mult});
  if (ru != B.identity[b])
    rep.add("monoid.unit.right", {{"B", B.obj_name(b)}},
            "right unit law fails");
  return rep;
}

}  // namespace catlift
