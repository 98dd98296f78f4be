#include "catlift/functor.hpp"

namespace catlift {

bool same_cat(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Functor& a, const Functor& b) {
  return same_cat(a.dom, b.dom) && same_cat(a.cod, b.cod) &&
         a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

Functor make_functor(CatPtr dom, CatPtr cod, std::vector<ObjId> obj_map,
                     std::vector<MorId> mor_map) {
  if (!dom || !cod) throw MalformedInput("make_functor: null category");
  if (static_cast<int>(obj_map.size()) != dom->n_obj() ||
      static_cast<int>(mor_map.size()) != dom->n_mor())
    throw MalformedInput("make_functor: map sizes must match domain");
  for (ObjId y : obj_map)
    if (y < 0 || y >= cod->n_obj())
      throw MalformedInput("make_functor: object image out of range");
  for (MorId g : mor_map)
    if (g < 0 || g >= cod->n_mor())
      throw MalformedInput("make_functor: morphism image out of range");
  return Functor{std::move(dom), std::move(cod), std::move(obj_map),
                 std::move(mor_map)};
}

Functor identity_functor(CatPtr cat) {
  std::vector<ObjId> o(cat->n_obj());
  std::vector<MorId> m(cat->n_mor());
  for (int i = 0; i < cat->n_obj(); ++i) o[i] = i;
  for (int i = 0; i < cat->n_mor(); ++i) m[i] = i;
  return Functor{cat, cat, std::move(o), std::move(m)};
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!same_cat(f.cod, g.dom))
    throw IncompatibleFunctors("compose_functors: middle categories differ");
  std::vector<ObjId> o(f.dom->n_obj());
  std::vector<MorId> m(f.dom->n_mor());
  for (int x = 0; x < f.dom->n_obj(); ++x) o[x] = g.on_obj(f.on_obj(x));
  for (int h = 0; h < f.dom->n_mor(); ++h) m[h] = g.on_mor(f.on_mor(h));
  return Functor{f.dom, g.cod, std::move(o), std::move(m)};
}

Report check_functor(const Functor& F) {
  Report rep;
  const FinCategory& D = *F.dom;
  const FinCategory& C = *F.cod;

  for (MorId f = 0; f < D.n_mor(); ++f) {
    MorId ff = F.on_mor(f);
    if (C.mor_src[ff] != F.on_obj(D.mor_src[f]) ||
        C.mor_tgt[ff] != F.on_obj(D.mor_tgt[f]))
      rep.add("functor.endpoints", {{"f", D.mor_name(f)}},
              "image " + C.mor_name(ff) + " has wrong endpoints");
  }
  for (ObjId x = 0; x < D.n_obj(); ++x) {
    if (F.on_mor(D.identity[x]) != C.identity[F.on_obj(x)])
      rep.add("functor.identity", {{"object", D.obj_name(x)}},
              "identity not preserved");
  }
  for (MorId g = 0; g < D.n_mor(); ++g) {
    for (MorId f = 0; f < D.n_mor(); ++f) {
      if (!D.composable(g, f)) continue;
      MorId gf = try_compose(D, g, f);
      if (gf == kNoMor) continue;  // reported by check_category on the domain
      MorId lhs = F.on_mor(gf);
      MorId rhs = try_compose(C, F.on_mor(g), F.on_mor(f));
      if (lhs != rhs)
        rep.add("functor.composition",
                {{"g", D.mor_name(g)}, {"f", D.mor_name(f)}},
                "F(g f) != F(g) F(f)");
    }
  }
  return rep;
}

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.src == b.src && a.tgt == b.tgt && a.component == b.component;
}

NatTrans make_nat_trans(Functor src, Functor tgt, std::vector<MorId> component) {
  if (!same_cat(src.dom, tgt.dom) || !same_cat(src.cod, tgt.cod))
    throw IncompatibleFunctors("make_nat_trans: functors not parallel");
  if (static_cast<int>(component.size()) != src.dom->n_obj())
    throw MalformedInput("make_nat_trans: one component per domain object");
  for (MorId c : component)
    if (c < 0 || c >= src.cod->n_mor())
      throw MalformedInput("make_nat_trans: component out of range");
  return NatTrans{std::move(src), std::move(tgt), std::move(component)};
}

NatTrans identity_nat_trans(const Functor& F) {
  std::vector<MorId> comp(F.dom->n_obj());
  for (ObjId x = 0; x < F.dom->n_obj(); ++x)
    comp[x] = F.cod->identity[F.on_obj(x)];
  return NatTrans{F, F, std::move(comp)};
}

Report check_nat_trans(const NatTrans& alpha) {
  Report rep;
  const FinCategory& D = *alpha.src.dom;
  const FinCategory& C = *alpha.src.cod;

  for (ObjId x = 0; x < D.n_obj(); ++x) {
    MorId c = alpha.at(x);
    if (C.mor_src[c] != alpha.src.on_obj(x) || C.mor_tgt[c] != alpha.tgt.on_obj(x))
      rep.add("nattrans.endpoints", {{"object", D.obj_name(x)}},
              "component " + C.mor_name(c) + " has wrong endpoints");
  }
  for (MorId f = 0; f < D.n_mor(); ++f) {
    ObjId x = D.mor_src[f], y = D.mor_tgt[f];
    MorId lhs = try_compose(C, alpha.at(y), alpha.src.on_mor(f));
    MorId rhs = try_compose(C, alpha.tgt.on_mor(f), alpha.at(x));
    if (lhs != rhs || lhs == kNoMor)
      rep.add("nattrans.naturality", {{"f", D.mor_name(f)}},
              "square does not commute");
  }
  return rep;
}

NatTrans godement_product(const NatTrans& G, const NatTrans& F) {
  if (!same_cat(F.src.cod, G.src.dom))
    throw IncompatibleFunctors("godement_product: middle categories differ");
  const FinCategory& C = *G.src.cod;
  const Functor& f = F.src;
  const Functor& f2 = F.tgt;
  const Functor& g = G.src;
  const Functor& g2 = G.tgt;

  std::vector<MorId> comp(f.dom->n_obj());
  for (ObjId m = 0; m < f.dom->n_obj(); ++m) {
    MorId one = try_compose(C, g2.on_mor(F.at(m)), G.at(f.on_obj(m)));
    MorId two = try_compose(C, G.at(f2.on_obj(m)), g.on_mor(F.at(m)));
    if (one == kNoMor || one != two)
      throw CatError("godement_product: defining formulas disagree at " +
                     f.dom->obj_name(m) + " (inputs not natural?)");
    comp[m] = one;
  }
  return NatTrans{compose_functors(g, f), compose_functors(g2, f2),
                  std::move(comp)};
}

NatTrans vertical_compose(const NatTrans& beta, const NatTrans& alpha) {
  if (!(alpha.tgt == beta.src))
    throw IncompatibleFunctors("vertical_compose: middle functor differs");
  const FinCategory& C = *alpha.src.cod;
  std::vector<MorId> comp(alpha.src.dom->n_obj());
  for (ObjId x = 0; x < alpha.src.dom->n_obj(); ++x) {
    MorId c = try_compose(C, beta.at(x), alpha.at(x));
    if (c == kNoMor)
      throw CompositionUndefined("vertical_compose: components not composable");
    comp[x] = c;
  }
  return NatTrans{alpha.src, beta.tgt, std::move(comp)};
}

bool operator==(const Bifunctor& a, const Bifunctor& b) {
  return same_cat(a.dom1, b.dom1) && same_cat(a.dom2, b.dom2) &&
         same_cat(a.cod, b.cod) && a.obj_map == b.obj_map &&
         a.mor_map == b.mor_map;
}

Bifunctor make_bifunctor(CatPtr dom1, CatPtr dom2, CatPtr cod,
                         std::vector<ObjId> obj_map, std::vector<MorId> mor_map) {
  if (!dom1 || !dom2 || !cod) throw MalformedInput("make_bifunctor: null category");
  if (static_cast<int>(obj_map.size()) != dom1->n_obj() * dom2->n_obj() ||
      static_cast<int>(mor_map.size()) != dom1->n_mor() * dom2->n_mor())
    throw MalformedInput("make_bifunctor: table sizes must match domains");
  for (ObjId y : obj_map)
    if (y < 0 || y >= cod->n_obj())
      throw MalformedInput("make_bifunctor: object image out of range");
  for (MorId g : mor_map)
    if (g < 0 || g >= cod->n_mor())
      throw MalformedInput("make_bifunctor: morphism image out of range");
  return Bifunctor{std::move(dom1), std::move(dom2), std::move(cod),
                   std::move(obj_map), std::move(mor_map)};
}

Report check_bifunctor(const Bifunctor& B) {
  Report rep;
  const FinCategory& D1 = *B.dom1;
  const FinCategory& D2 = *B.dom2;
  const FinCategory& C = *B.cod;

  for (MorId f = 0; f < D1.n_mor(); ++f) {
    for (MorId g = 0; g < D2.n_mor(); ++g) {
      MorId im = B.on_mor(f, g);
      if (C.mor_src[im] != B.on_obj(D1.mor_src[f], D2.mor_src[g]) ||
          C.mor_tgt[im] != B.on_obj(D1.mor_tgt[f], D2.mor_tgt[g]))
        rep.add("bifunctor.endpoints",
                {{"f", D1.mor_name(f)}, {"g", D2.mor_name(g)}},
                "image has wrong endpoints");
    }
  }
  for (ObjId x = 0; x < D1.n_obj(); ++x) {
    for (ObjId y = 0; y < D2.n_obj(); ++y) {
      if (B.on_mor(D1.identity[x], D2.identity[y]) != C.identity[B.on_obj(x, y)])
        rep.add("bifunctor.identity",
                {{"x", D1.obj_name(x)}, {"y", D2.obj_name(y)}},
                "identity pair not preserved");
    }
  }
  // Functoriality on pairs of composable pairs; this covers both partial
  // functorialities and the interchange law in one sweep.
  for (MorId f2 = 0; f2 < D1.n_mor(); ++f2) {
    for (MorId f1 = 0; f1 < D1.n_mor(); ++f1) {
      if (!D1.composable(f2, f1)) continue;
      MorId f21 = try_compose(D1, f2, f1);
      if (f21 == kNoMor) continue;
      for (MorId g2 = 0; g2 < D2.n_mor(); ++g2) {
        for (MorId g1 = 0; g1 < D2.n_mor(); ++g1) {
          if (!D2.composable(g2, g1)) continue;
          MorId g21 = try_compose(D2, g2, g1);
          if (g21 == kNoMor) continue;
          MorId lhs = B.on_mor(f21, g21);
          MorId rhs = try_compose(C, B.on_mor(f2, g2), B.on_mor(f1, g1));
          if (lhs != rhs)
            rep.add("bifunctor.composition",
                    {{"f2", D1.mor_name(f2)}, {"f1", D1.mor_name(f1)},
                     {"g2", D2.mor_name(g2)}, {"g1", D2.mor_name(g1)}},
                    "B(f2 f1, g2 g1) != B(f2,g2) B(f1,g1)");
        }
      }
    }
  }
  return rep;
}

Functor fix_first(const Bifunctor& B, ObjId x) {
  if (x < 0 || x >= B.dom1->n_obj())
    throw UnknownObject("fix_first: object out of range");
  std::vector<ObjId> o(B.dom2->n_obj());
  std::vector<MorId> m(B.dom2->n_mor());
  for (ObjId y = 0; y < B.dom2->n_obj(); ++y) o[y] = B.on_obj(x, y);
  for (MorId g = 0; g < B.dom2->n_mor(); ++g)
    m[g] = B.on_mor(B.dom1->identity[x], g);
  return Functor{B.dom2, B.cod, std::move(o), std::move(m)};
}

Functor fix_second(const Bifunctor& B, ObjId y) {
  if (y < 0 || y >= B.dom2->n_obj())
    throw UnknownObject("fix_second: object out of range");
  std::vector<ObjId> o(B.dom1->n_obj());
  std::vector<MorId> m(B.dom1->n_mor());
  for (ObjId x = 0; x < B.dom1->n_obj(); ++x) o[x] = B.on_obj(x, y);
  for (MorId f = 0; f < B.dom1->n_mor(); ++f)
    m[f] = B.on_mor(f, B.dom2->identity[y]);
  return Functor{B.dom1, B.cod, std::move(o), std::move(m)};
}

}  // namespace catlift
