#include "catlift/instances.hpp"

#include <algorithm>
#include <string>

#include "catlift/errors.hpp"

namespace catlift {
namespace {

std::string num(int v) { return std::to_string(v); }

CatPtr wrap(FinCategory c) {
  return std::make_shared<const FinCategory>(make_category(
      std::move(c.obj_names), std::move(c.mor_names), std::move(c.mor_src),
      std::move(c.mor_tgt), std::move(c.identity), std::move(c.comp)));
}

// Bifunctor between chains induced by a binary op on object indices; the op
// must be monotone in both arguments so morphism images exist.
Bifunctor chain_op_bifunctor(CatPtr a, CatPtr b, CatPtr cod, int (*op)(int, int)) {
  const int n2 = b->n_obj();
  std::vector<ObjId> obj(static_cast<size_t>(a->n_obj()) * n2);
  for (int x = 0; x < a->n_obj(); ++x)
    for (int y = 0; y < n2; ++y) obj[static_cast<size_t>(x) * n2 + y] = op(x, y);
  const int nm2 = b->n_mor();
  std::vector<MorId> mor(static_cast<size_t>(a->n_mor()) * nm2);
  for (int f = 0; f < a->n_mor(); ++f)
    for (int g = 0; g < nm2; ++g) {
      const MorId h = chain_mor(*cod, op(a->mor_src[f], b->mor_src[g]),
                                op(a->mor_tgt[f], b->mor_tgt[g]));
      if (h == kNoMor) throw MalformedInput("chain_op_bifunctor: op not monotone");
      mor[static_cast<size_t>(f) * nm2 + g] = h;
    }
  return make_bifunctor(std::move(a), std::move(b), std::move(cod),
                        std::move(obj), std::move(mor));
}

int op_max(int x, int y) { return std::max(x, y); }
int op_min(int x, int y) { return std::min(x, y); }

}  // namespace

CatPtr chain_category(int n) {
  if (n <= 0) throw MalformedInput("chain_category: need n >= 1");
  FinCategory c;
  c.obj_names.reserve(n);
  for (int i = 0; i < n; ++i) c.obj_names.push_back(num(i));
  // morphisms in lex (src, tgt) order, identity at (i, i)
  std::vector<std::vector<MorId>> idx(n, std::vector<MorId>(n, kNoMor));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      idx[i][j] = static_cast<MorId>(c.mor_names.size());
      c.mor_names.push_back("c" + num(i) + "_" + num(j));
      c.mor_src.push_back(i);
      c.mor_tgt.push_back(j);
    }
  c.identity.resize(n);
  for (int i = 0; i < n; ++i) c.identity[i] = idx[i][i];
  const int nm = c.n_mor();
  c.comp.assign(static_cast<size_t>(nm) * nm, kNoMor);
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (c.mor_tgt[f] == c.mor_src[g])
        c.set_comp(g, f, idx[c.mor_src[f]][c.mor_tgt[g]]);
  return wrap(std::move(c));
}

MorId chain_mor(const FinCategory& chain, int i, int j) {
  if (i > j) return kNoMor;
  const auto h = hom(chain, i, j);
  return h.empty() ? kNoMor : h[0];
}

MonoidalPtr max_monoidal(CatPtr chain) {
  Bifunctor ten = chain_op_bifunctor(chain, chain, chain, op_max);
  return std::make_shared<const MonoidalCategory>(
      make_strict_monoidal(chain, std::move(ten), 0));
}

MonoidalPtr min_monoidal(CatPtr chain) {
  const int n = chain->n_obj();
  Bifunctor ten = chain_op_bifunctor(chain, chain, chain, op_min);
  return std::make_shared<const MonoidalCategory>(
      make_strict_monoidal(chain, std::move(ten), n - 1));
}

ActionPtr max_action(MonoidalPtr C, CatPtr M) {
  if (C->base->n_obj() > M->n_obj())
    throw MalformedInput("max_action: acting chain longer than the acted one");
  Bifunctor act = chain_op_bifunctor(M, C->base, M, op_max);
  return std::make_shared<const MonoidalAction>(
      make_strict_action(C, M, std::move(act)));
}

ActionPtr min_action(MonoidalPtr C, CatPtr M) {
  if (C->base->n_obj() != M->n_obj())
    throw MalformedInput("min_action: chains must have equal length");
  Bifunctor act = chain_op_bifunctor(M, C->base, M, op_min);
  return std::make_shared<const MonoidalAction>(
      make_strict_action(C, M, std::move(act)));
}

Monad identity_monad(CatPtr M) {
  Functor t = identity_functor(M);
  std::vector<MorId> comp(M->identity);
  NatTrans mu = make_nat_trans(t, t, comp);
  NatTrans eta = make_nat_trans(t, t, comp);
  return make_monad(std::move(t), std::move(mu), std::move(eta));
}

Monad closure_monad(CatPtr chain, const std::vector<int>& image) {
  const int n = chain->n_obj();
  if (static_cast<int>(image.size()) != n)
    throw MalformedInput("closure_monad: image size mismatch");
  std::vector<ObjId> obj(image.begin(), image.end());
  std::vector<MorId> mor(chain->n_mor());
  for (int f = 0; f < chain->n_mor(); ++f) {
    const MorId tf =
        chain_mor(*chain, image[chain->mor_src[f]], image[chain->mor_tgt[f]]);
    if (tf == kNoMor) throw MalformedInput("closure_monad: map not monotone");
    mor[f] = tf;
  }
  Functor t = make_functor(chain, chain, std::move(obj), std::move(mor));
  std::vector<MorId> mu_c(n), eta_c(n);
  for (int i = 0; i < n; ++i) {
    mu_c[i] = chain_mor(*chain, image[image[i]], image[i]);
    eta_c[i] = chain_mor(*chain, i, image[i]);
    if (mu_c[i] == kNoMor || eta_c[i] == kNoMor)
      throw MalformedInput("closure_monad: map not a closure operator");
  }
  NatTrans mu = make_nat_trans(compose_functors(t, t), t, std::move(mu_c));
  NatTrans eta = make_nat_trans(identity_functor(chain), t, std::move(eta_c));
  return make_monad(std::move(t), std::move(mu), std::move(eta));
}

Monad const_top_monad(CatPtr chain) {
  return closure_monad(chain, std::vector<int>(chain->n_obj(), chain->n_obj() - 1));
}

std::vector<std::vector<int>> all_closure_operators(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> image(n, 0);
  // enumerate all maps, keep the increasing idempotent monotone ones
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (image[i] < i || image[image[i]] != image[i]) ok = false;
      if (i > 0 && image[i] < image[i - 1]) ok = false;
    }
    if (ok) out.push_back(image);
    int pos = n - 1;
    while (pos >= 0 && image[pos] == n - 1) image[pos--] = 0;
    if (pos < 0) break;
    ++image[pos];
  }
  return out;
}

CatPtr finset_category(const std::vector<int>& sizes) {
  const int n = static_cast<int>(sizes.size());
  for (int s : sizes)
    if (s <= 0) throw MalformedInput("finset_category: sizes must be positive");
  FinCategory c;
  for (int i = 0; i < n; ++i) c.obj_names.push_back("o" + num(i));
  // each function's graph kept as a digit vector for composition
  std::vector<std::vector<int>> graph_of;
  std::vector<int> first_hom(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      first_hom[static_cast<size_t>(a) * n + b] = static_cast<int>(c.mor_names.size());
      std::vector<int> g(sizes[a], 0);
      while (true) {
        std::string nm = "h" + num(a) + "_" + num(b) + "_";
        for (int v : g) nm += num(v);
        c.mor_names.push_back(nm);
        c.mor_src.push_back(a);
        c.mor_tgt.push_back(b);
        graph_of.push_back(g);
        int pos = sizes[a] - 1;
        while (pos >= 0 && g[pos] == sizes[b] - 1) g[pos--] = 0;
        if (pos < 0) break;
        ++g[pos];
      }
    }
  auto mor_of_graph = [&](int a, int b, const std::vector<int>& g) {
    int off = 0;
    for (int v : g) off = off * sizes[b] + v;
    return first_hom[static_cast<size_t>(a) * n + b] + off;
  };
  c.identity.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> idg(sizes[i]);
    for (int v = 0; v < sizes[i]; ++v) idg[v] = v;
    c.identity[i] = mor_of_graph(i, i, idg);
  }
  const int nm = c.n_mor();
  c.comp.assign(static_cast<size_t>(nm) * nm, kNoMor);
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (c.mor_tgt[f] == c.mor_src[g]) {
        const auto& gf = graph_of[f];
        const auto& gg = graph_of[g];
        std::vector<int> cg(gf.size());
        for (size_t i = 0; i < gf.size(); ++i) cg[i] = gg[gf[i]];
        c.set_comp(g, f, mor_of_graph(c.mor_src[f], c.mor_tgt[g], cg));
      }
  return wrap(std::move(c));
}

CatPtr cyclic_group_category(int n) {
  if (n <= 0) throw MalformedInput("cyclic_group_category: need n >= 1");
  FinCategory c;
  c.obj_names = {"pt"};
  for (int i = 0; i < n; ++i) {
    c.mor_names.push_back("g" + num(i));
    c.mor_src.push_back(0);
    c.mor_tgt.push_back(0);
  }
  c.identity = {0};
  c.comp.assign(static_cast<size_t>(n) * n, kNoMor);
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) c.set_comp(g, f, (f + g) % n);
  return wrap(std::move(c));
}

CatPtr discrete_category(const std::vector<std::string>& names) {
  FinCategory c;
  c.obj_names = names;
  const int n = static_cast<int>(names.size());
  for (int i = 0; i < n; ++i) {
    c.mor_names.push_back("id_" + names[i]);
    c.mor_src.push_back(i);
    c.mor_tgt.push_back(i);
    c.identity.push_back(i);
  }
  c.comp.assign(static_cast<size_t>(n) * n, kNoMor);
  for (int i = 0; i < n; ++i) c.set_comp(i, i, i);
  return wrap(std::move(c));
}

MonoidalPtr discrete_monoid_monoidal(CatPtr discrete,
                                     const std::vector<ObjId>& mult,
                                     ObjId unit) {
  const int n = discrete->n_obj();
  if (static_cast<int>(mult.size()) != n * n)
    throw MalformedInput("discrete_monoid_monoidal: table size mismatch");
  std::vector<MorId> mor(static_cast<size_t>(n) * n);
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      mor[static_cast<size_t>(f) * n + g] =
          discrete->identity[mult[static_cast<size_t>(f) * n + g]];
  Bifunctor ten = make_bifunctor(discrete, discrete, discrete, mult, std::move(mor));
  return std::make_shared<const MonoidalCategory>(
      make_strict_monoidal(discrete, std::move(ten), unit));
}

ActionPtr endo_action(MonoidalPtr C, CatPtr M,
                      const std::vector<std::vector<ObjId>>& obj_maps,
                      const std::vector<std::vector<MorId>>& mor_maps) {
  const int nc = C->base->n_obj();
  const int nm = M->n_obj();
  if (static_cast<int>(obj_maps.size()) != nc ||
      static_cast<int>(mor_maps.size()) != nc)
    throw MalformedInput("endo_action: one endofunctor per acting object");
  std::vector<ObjId> obj(static_cast<size_t>(nm) * nc);
  for (int m = 0; m < nm; ++m)
    for (int q = 0; q < nc; ++q) obj[static_cast<size_t>(m) * nc + q] = obj_maps[q][m];
  const int nmm = M->n_mor();
  const int ncm = C->base->n_mor();
  std::vector<MorId> mor(static_cast<size_t>(nmm) * ncm, kNoMor);
  for (int f = 0; f < nmm; ++f)
    for (int g = 0; g < ncm; ++g) {
      // the acting category is discrete, so g is the identity of its source
      const int q = C->base->mor_src[g];
      mor[static_cast<size_t>(f) * ncm + g] = mor_maps[q][f];
    }
  Bifunctor act = make_bifunctor(M, C->base, M, std::move(obj), std::move(mor));
  return std::make_shared<const MonoidalAction>(
      make_strict_action(C, M, std::move(act)));
}

Monad terminal_monad(CatPtr M, ObjId term) {
  std::vector<ObjId> obj(M->n_obj(), term);
  std::vector<MorId> mor(M->n_mor(), M->identity[term]);
  Functor t = make_functor(M, M, std::move(obj), std::move(mor));
  std::vector<MorId> eta_c(M->n_obj());
  for (int x = 0; x < M->n_obj(); ++x) {
    const auto h = hom(*M, x, term);
    if (h.size() != 1)
      throw MalformedInput("terminal_monad: hom(x, term) must be a singleton");
    eta_c[x] = h[0];
  }
  std::vector<MorId> mu_c(M->n_obj(), M->identity[term]);
  NatTrans mu = make_nat_trans(compose_functors(t, t), t, std::move(mu_c));
  NatTrans eta = make_nat_trans(identity_functor(M), t, std::move(eta_c));
  return make_monad(std::move(t), std::move(mu), std::move(eta));
}

Monad translation_monad(CatPtr bz, int k) {
  const int n = bz->n_mor();
  Functor t = identity_functor(bz);
  NatTrans mu = make_nat_trans(t, t, {k % n});
  NatTrans eta = make_nat_trans(t, t, {(n - k % n) % n});
  return make_monad(std::move(t), std::move(mu), std::move(eta));
}

InstanceBundle bundle_idmonad_chain3() {
  CatPtr m3 = chain_category(3);
  CatPtr c2 = chain_category(2);
  return {"idmonad3", max_action(max_monoidal(c2), m3), identity_monad(m3)};
}

InstanceBundle bundle_closure_chain2() {
  CatPtr m = chain_category(2);
  return {"poset_max2", max_action(max_monoidal(m), m), const_top_monad(m)};
}

InstanceBundle bundle_closure_chain3() {
  CatPtr m = chain_category(3);
  return {"poset_max3", max_action(max_monoidal(m), m), const_top_monad(m)};
}

InstanceBundle bundle_min_chain2() {
  CatPtr m = chain_category(2);
  return {"poset_min2", min_action(min_monoidal(m), m), const_top_monad(m)};
}

InstanceBundle bundle_finset_conj() {
  CatPtr s = finset_category({1, 2});
  CatPtr z2 = discrete_category({"e", "s"});
  MonoidalPtr c = discrete_monoid_monoidal(z2, {0, 1, 1, 0}, 0);
  // conjugation by the swap of the two-element set
  std::vector<ObjId> idm(s->n_obj());
  for (int i = 0; i < s->n_obj(); ++i) idm[i] = i;
  std::vector<MorId> ide(s->n_mor());
  for (int i = 0; i < s->n_mor(); ++i) ide[i] = i;
  MorId swap = kNoMor;
  for (MorId f : hom(*s, 1, 1))
    if (f != s->identity[1] && try_compose(*s, f, f) == s->identity[1]) swap = f;
  std::vector<MorId> conj(s->n_mor());
  for (int f = 0; f < s->n_mor(); ++f) {
    MorId g = f;
    if (s->mor_src[f] == 1) g = compose(*s, g, swap);
    if (s->mor_tgt[f] == 1) g = compose(*s, swap, g);
    conj[f] = g;
  }
  ActionPtr a = endo_action(c, s, {idm, idm}, {ide, conj});
  return {"finset2", a, terminal_monad(s, 0)};
}

InstanceBundle bundle_z4_translation() {
  CatPtr bz = cyclic_group_category(4);
  CatPtr z2 = discrete_category({"e", "s"});
  MonoidalPtr c = discrete_monoid_monoidal(z2, {0, 1, 1, 0}, 0);
  std::vector<MorId> ide = {0, 1, 2, 3};
  std::vector<MorId> neg = {0, 3, 2, 1};
  ActionPtr a = endo_action(c, bz, {{0}, {0}}, {ide, neg});
  return {"bz4", a, translation_monad(bz, 1)};
}

std::vector<InstanceBundle> all_bundles() {
  return {bundle_closure_chain2(), bundle_closure_chain3(), bundle_min_chain2(),
          bundle_idmonad_chain3(), bundle_finset_conj(), bundle_z4_translation()};
}

}  // namespace catlift
