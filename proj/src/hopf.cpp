#include "catlift/hopf.hpp"

#include <random>

#include "catlift/errors.hpp"

namespace catlift {
namespace {

bool shape(const LinMap& m, int r, int c) { return m.rows == r && m.cols == c; }

// Core on A (x) Q extended over an inert middle factor to A (x) Mid (x) Q.
LinMap extend_core(const Field& F, const LinMap& core, int da, int dq, int mid) {
  LinMap to_aqm = factor_perm({da, mid, dq}, {0, 2, 1});
  LinMap back = factor_perm({da, dq, mid}, {0, 2, 1});
  return lin_compose(F, back,
                     lin_compose(F, kron(F, core, lin_identity(mid)), to_aqm));
}

// Associativity and both unit laws for (mult, unit) on a space of dim d.
void algebra_checks(const Field& F, const LinMap& mult, const LinMap& unit,
                    int d, const std::string& prefix, Report& r) {
  if (!shape(mult, d, d * d) || !shape(unit, d, 1)) {
    r.add(prefix + ".shape");
    return;
  }
  const LinMap id = lin_identity(d);
  if (!lin_eq(lin_compose(F, mult, kron(F, mult, id)),
              lin_compose(F, mult, kron(F, id, mult))))
    r.add(prefix + ".assoc");
  if (!lin_eq(lin_compose(F, mult, kron(F, unit, id)), id))
    r.add(prefix + ".unit.left");
  if (!lin_eq(lin_compose(F, mult, kron(F, id, unit)), id))
    r.add(prefix + ".unit.right");
}

}  // namespace

Report check_bialgebra(const Field& F, const Bialgebra& B) {
  Report r;
  const int d = B.dim;
  algebra_checks(F, B.mult, B.unit, d, "bialg", r);
  if (!shape(B.comul, d * d, d) || !shape(B.counit, 1, d)) {
    r.add("bialg.coalg.shape");
    return r;
  }
  const LinMap id = lin_identity(d);
  if (!lin_eq(lin_compose(F, kron(F, B.comul, id), B.comul),
              lin_compose(F, kron(F, id, B.comul), B.comul)))
    r.add("bialg.coassoc");
  if (!lin_eq(lin_compose(F, kron(F, B.counit, id), B.comul), id))
    r.add("bialg.counit.left");
  if (!lin_eq(lin_compose(F, kron(F, id, B.counit), B.comul), id))
    r.add("bialg.counit.right");
  if (r.ok()) {
    // middle-swap route: comul of a product against products of comuls
    LinMap mid = factor_perm({d, d, d, d}, {0, 2, 1, 3});
    LinMap rhs = lin_compose(
        F, kron(F, B.mult, B.mult),
        lin_compose(F, mid, kron(F, B.comul, B.comul)));
    if (!lin_eq(lin_compose(F, B.comul, B.mult), rhs)) r.add("bialg.compat.mult");
    if (!lin_eq(lin_compose(F, B.counit, B.mult), kron(F, B.counit, B.counit)))
      r.add("bialg.compat.counit");
    if (!lin_eq(lin_compose(F, B.comul, B.unit), kron(F, B.unit, B.unit)))
      r.add("bialg.compat.unit");
    if (!lin_eq(lin_compose(F, B.counit, B.unit), lin_identity(1)))
      r.add("bialg.compat.scalar");
  }
  return r;
}

Report check_comodule(const Field& F, const Bialgebra& B, const Comodule& Q) {
  Report r;
  if (!shape(Q.rho, Q.dim * B.dim, Q.dim)) {
    r.add("comodule.shape");
    return r;
  }
  if (!lin_eq(lin_compose(F, kron(F, Q.rho, lin_identity(B.dim)), Q.rho),
              lin_compose(F, kron(F, lin_identity(Q.dim), B.comul), Q.rho)))
    r.add("comodule.coassoc");
  if (!lin_eq(lin_compose(F, kron(F, lin_identity(Q.dim), B.counit), Q.rho),
              lin_identity(Q.dim)))
    r.add("comodule.counit");
  return r;
}

Comodule trivial_comodule(const Field&, const Bialgebra& B) {
  return {1, B.unit};
}

Comodule tensor_comodule(const Field& F, const Bialgebra& B, const Comodule& Q,
                         const Comodule& Q2) {
  const int dq = Q.dim, d2 = Q2.dim, db = B.dim;
  LinMap both = kron(F, Q.rho, Q2.rho);
  LinMap gather = factor_perm({dq, db, d2, db}, {0, 2, 1, 3});
  LinMap mult_tail = kron(F, lin_identity(dq * d2), B.mult);
  return {dq * d2, lin_compose(F, mult_tail, lin_compose(F, gather, both))};
}

Report check_module_algebra(const Field& F, const Bialgebra& B,
                            const ModuleAlgebra& A) {
  Report r;
  const int da = A.dim, db = B.dim;
  algebra_checks(F, A.mult, A.unit, da, "modalg", r);
  if (!shape(A.act, da, db * da)) {
    r.add("modalg.act.shape");
    return r;
  }
  const LinMap ida = lin_identity(da);
  const LinMap idb = lin_identity(db);
  if (!lin_eq(lin_compose(F, A.act, kron(F, B.mult, ida)),
              lin_compose(F, A.act, kron(F, idb, A.act))))
    r.add("modalg.module.assoc");
  if (!lin_eq(lin_compose(F, A.act, kron(F, B.unit, ida)), ida))
    r.add("modalg.module.unit");
  // b |> (a a') = sum (b1 |> a)(b2 |> a')
  LinMap spread = lin_compose(
      F, factor_perm({db, db, da, da}, {0, 2, 1, 3}),
      kron(F, B.comul, lin_identity(da * da)));
  LinMap rhs = lin_compose(F, A.mult, lin_compose(F, kron(F, A.act, A.act), spread));
  if (!lin_eq(lin_compose(F, A.act, kron(F, idb, A.mult)), rhs))
    r.add("modalg.compat.mult");
  if (!lin_eq(lin_compose(F, A.act, kron(F, idb, A.unit)),
              lin_compose(F, A.unit, B.counit)))
    r.add("modalg.compat.unit");
  return r;
}

Report check_amodule(const Field& F, const ModuleAlgebra& A, const AModule& M) {
  Report r;
  const int da = A.dim, dm = M.dim;
  if (!shape(M.act, dm, da * dm)) {
    r.add("amodule.shape");
    return r;
  }
  const LinMap idm = lin_identity(dm);
  if (!lin_eq(lin_compose(F, M.act, kron(F, A.mult, idm)),
              lin_compose(F, M.act, kron(F, lin_identity(da), M.act))))
    r.add("amodule.assoc");
  if (!lin_eq(lin_compose(F, M.act, kron(F, A.unit, idm)), idm))
    r.add("amodule.unit");
  return r;
}

LinMap canonical_law(const Field& F, const Bialgebra& B, const ModuleAlgebra& A,
                     int m_dim, const Comodule& Q) {
  const int da = A.dim, dq = Q.dim, db = B.dim;
  LinMap coact = kron(F, lin_identity(da * m_dim), Q.rho);
  LinMap pull = factor_perm({da, m_dim, dq, db}, {3, 0, 1, 2});
  LinMap hit = kron(F, A.act, lin_identity(m_dim * dq));
  return lin_compose(F, hit, lin_compose(F, pull, coact));
}

LinMap lifted_action_map(const Field& F, const ModuleAlgebra& A, const AModule& M,
                         const Comodule& Q, const LinMap& l) {
  return lin_compose(F, kron(F, M.act, lin_identity(Q.dim)), l);
}

Report check_linear_distlaw(const Field& F, const Bialgebra& B,
                            const ModuleAlgebra& A, const AModule& M,
                            const Comodule& Q, const LinMap& l) {
  Report r;
  const int da = A.dim, dm = M.dim, dq = Q.dim;
  const int n = da * dm * dq;
  if (!shape(l, n, n)) {
    r.add("linlaw.shape");
    return r;
  }
  // recover the core on A (x) Q at the first middle basis vector; the family
  // member at any other carrier is the extension of this core
  LinMap e0 = lin_zero(dm, 1);
  e0.at(0, 0) = {1, 1};
  LinMap e0t = lin_zero(1, dm);
  e0t.at(0, 0) = {1, 1};
  const LinMap ida = lin_identity(da);
  const LinMap idq = lin_identity(dq);
  LinMap core = lin_compose(
      F, kron(F, ida, kron(F, e0t, idq)),
      lin_compose(F, l, kron(F, ida, kron(F, e0, idq))));
  if (!lin_eq(extend_core(F, core, da, dq, dm), l))
    r.add("linlaw.natural.carrier");
  LinMap eta = kron(F, A.unit, lin_identity(dm * dq));
  if (!lin_eq(lin_compose(F, l, eta), eta)) r.add("linlaw.unit");
  LinMap mu = kron(F, A.mult, lin_identity(dm * dq));
  LinMap through = lin_compose(
      F, mu, lin_compose(F, extend_core(F, core, da, dq, da * dm),
                         kron(F, ida, l)));
  if (!lin_eq(through, lin_compose(F, l, mu))) r.add("linlaw.mult");
  Comodule qq = tensor_comodule(F, B, Q, Q);
  LinMap at_qq = canonical_law(F, B, A, dm, qq);
  LinMap two_step =
      lin_compose(F, kron(F, l, idq), extend_core(F, core, da, dq, dm * dq));
  if (!lin_eq(at_qq, two_step)) r.add("linlaw.tensor");
  Comodule triv = trivial_comodule(F, B);
  if (!lin_eq(canonical_law(F, B, A, dm, triv), lin_identity(da * dm)))
    r.add("linlaw.counit");
  AModule lifted{dm * dq, lifted_action_map(F, A, M, Q, l)};
  Report sub = check_amodule(F, A, lifted);
  for (const auto& v : sub.items) r.add("linlaw.lifted." + v.check, v.where, v.detail);
  return r;
}

Report check_lifted_monad(const Field& F, const Bialgebra& B,
                          const ModuleAlgebra& A, const AModule& M) {
  Report r;
  const int da = A.dim, dm = M.dim, db = B.dim;
  Comodule qb{db, B.comul};
  LinMap lb = canonical_law(F, B, A, dm, qb);
  LinMap nu_b = lifted_action_map(F, A, M, qb, lb);
  AModule mb{dm * db, nu_b};
  Report sub = check_amodule(F, A, mb);
  for (const auto& v : sub.items) r.add("lmonad." + v.check, v.where, v.detail);
  // multiplication of the induced monad is id_M (x) mult_B; it must be a
  // module map from the doubly lifted structure
  Comodule qbb = tensor_comodule(F, B, qb, qb);
  LinMap lbb = canonical_law(F, B, A, dm, qbb);
  LinMap nu_bb = lifted_action_map(F, A, M, qbb, lbb);
  LinMap mu_prime = kron(F, lin_identity(dm), B.mult);
  if (!lin_eq(lin_compose(F, mu_prime, nu_bb),
              lin_compose(F, nu_b, kron(F, lin_identity(da), mu_prime))))
    r.add("lmonad.mult.module_map");
  // a |> (n <| h) = sum [(h2 |> a) |> n] <| h1
  LinMap lhs = lin_compose(F, nu_b, kron(F, lin_identity(da), mu_prime));
  LinMap split = kron(F, lin_identity(da * dm * db), B.comul);
  LinMap to_front = factor_perm({da, dm, db, db, db}, {4, 0, 1, 2, 3});
  LinMap hit_a = kron(F, A.act, lin_identity(dm * db * db));
  LinMap act_n = kron(F, nu_b, lin_identity(db));
  LinMap tail = kron(F, lin_identity(dm), B.mult);
  LinMap rhs = lin_compose(
      F, tail,
      lin_compose(F, act_n,
                  lin_compose(F, hit_a, lin_compose(F, to_front, split))));
  if (!lin_eq(lhs, rhs)) r.add("lmonad.em.compat");
  return r;
}

Report check_linear_bundle(const LinearBundle& bundle) {
  Report r;
  r.merge(check_bialgebra(bundle.field, bundle.B));
  r.merge(check_comodule(bundle.field, bundle.B, bundle.Q));
  r.merge(check_module_algebra(bundle.field, bundle.B, bundle.A));
  r.merge(check_amodule(bundle.field, bundle.A, bundle.M));
  return r;
}

LinearBundle bundle_f3() {
  Field F(3);
  Bialgebra B;
  B.dim = 2;
  B.mult = lin_from_ints(F, 2, 4, {1, 0, 0, 1, 0, 1, 1, 0});
  B.unit = lin_from_ints(F, 2, 1, {1, 0});
  B.comul = lin_from_ints(F, 4, 2, {1, 0, 0, 0, 0, 0, 0, 1});
  B.counit = lin_from_ints(F, 1, 2, {1, 1});
  ModuleAlgebra A;
  A.dim = 2;
  A.mult = lin_from_ints(F, 2, 4, {1, 0, 0, 0, 0, 1, 1, 0});
  A.unit = lin_from_ints(F, 2, 1, {1, 0});
  // group generator negates x
  A.act = lin_from_ints(F, 2, 4, {1, 0, 1, 0, 0, 1, 0, 2});
  AModule M{2, A.mult};
  Comodule Q{2, B.comul};
  return {"linear_f3", F, B, A, M, Q};
}

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int n) { return static_cast<int>(rng() % n); }

// Monoid table on {0..d-1} with unit 0; random with rejection, cyclic fallback.
std::vector<int> random_monoid(Rng& rng, int d) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<int> t(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int v = (i == 0) ? j : (j == 0) ? i : pick(rng, d);
        t[static_cast<size_t>(i) * d + j] = v;
      }
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j)
        for (int k = 0; k < d && ok; ++k)
          if (t[static_cast<size_t>(t[static_cast<size_t>(i) * d + j]) * d + k] !=
              t[static_cast<size_t>(i) * d + t[static_cast<size_t>(j) * d + k]])
            ok = false;
    if (ok) return t;
  }
  std::vector<int> t(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t[static_cast<size_t>(i) * d + j] = (i + j) % d;
  return t;
}

// Unit-preserving multiplicative self-maps of a monoid table.
std::vector<std::vector<int>> monoid_endos(const std::vector<int>& t, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(d, 0);
  while (true) {
    bool ok = e[0] == 0;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j)
        if (e[t[static_cast<size_t>(i) * d + j]] !=
            t[static_cast<size_t>(e[i]) * d + e[j]])
          ok = false;
    if (ok) out.push_back(e);
    int pos = d - 1;
    while (pos >= 0 && e[pos] == d - 1) e[pos--] = 0;
    if (pos < 0) break;
    ++e[pos];
  }
  return out;
}

LinMap monoid_mult_matrix(const Field& F, const std::vector<int>& t, int d) {
  LinMap m = lin_zero(d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m.at(t[static_cast<size_t>(i) * d + j], i * d + j) = F.one();
  return m;
}

LinMap random_invertible(Rng& rng, const Field& F, int d) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    LinMap p = lin_zero(d, d);
    for (auto& s : p.a) s = F.from_int(pick(rng, F.characteristic()));
    if (try_inverse(F, p)) return p;
  }
  return lin_identity(d);
}

}  // namespace

LinearBundle random_bundle(std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  const int primes[3] = {2, 3, 5};
  Field F(primes[pick(rng, 3)]);

  const int db = 1 + pick(rng, 3);
  std::vector<int> bmon = random_monoid(rng, db);
  Bialgebra B;
  B.dim = db;
  B.mult = monoid_mult_matrix(F, bmon, db);
  B.unit = lin_zero(db, 1);
  B.unit.at(0, 0) = F.one();
  B.comul = lin_zero(db * db, db);
  for (int i = 0; i < db; ++i) B.comul.at(i * db + i, i) = F.one();
  B.counit = lin_zero(1, db);
  for (int i = 0; i < db; ++i) B.counit.at(0, i) = F.one();

  const int da = 1 + pick(rng, 3);
  std::vector<int> amon = random_monoid(rng, da);
  ModuleAlgebra A;
  A.dim = da;
  A.mult = monoid_mult_matrix(F, amon, da);
  A.unit = lin_zero(da, 1);
  A.unit.at(0, 0) = F.one();

  // action through a random multiplicative map from B's monoid into the
  // endomorphism monoid of A's
  std::vector<std::vector<int>> endos = monoid_endos(amon, da);
  std::vector<int> ident(da);
  for (int i = 0; i < da; ++i) ident[i] = i;
  std::vector<std::vector<int>> phi;
  bool found = false;
  for (int attempt = 0; attempt < 200 && !found; ++attempt) {
    phi.assign(db, ident);
    for (int b = 1; b < db; ++b) phi[b] = endos[pick(rng, static_cast<int>(endos.size()))];
    found = true;
    for (int i = 0; i < db && found; ++i)
      for (int j = 0; j < db && found; ++j) {
        const auto& lhs = phi[bmon[static_cast<size_t>(i) * db + j]];
        for (int x = 0; x < da && found; ++x)
          if (lhs[x] != phi[i][phi[j][x]]) found = false;
      }
  }
  if (!found) phi.assign(db, ident);
  A.act = lin_zero(da, db * da);
  for (int b = 0; b < db; ++b)
    for (int a = 0; a < da; ++a) A.act.at(phi[b][a], b * da + a) = F.one();

  AModule M;
  if (pick(rng, 2) == 0) {
    M = {da, A.mult};
  } else {
    // all characters of A's monoid; the all-ones one always exists
    std::vector<std::vector<Scalar>> chars;
    std::vector<int> digits(da, 0);
    const int p = F.characteristic();
    while (true) {
      std::vector<Scalar> v(da);
      for (int i = 0; i < da; ++i) v[i] = F.from_int(digits[i]);
      bool ok = F.eq(v[0], F.one());
      for (int i = 0; i < da && ok; ++i)
        for (int j = 0; j < da && ok; ++j)
          if (!F.eq(v[amon[static_cast<size_t>(i) * da + j]], F.mul(v[i], v[j])))
            ok = false;
      if (ok) chars.push_back(v);
      int pos = da - 1;
      while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
      if (pos < 0) break;
      ++digits[pos];
    }
    const auto& chi = chars[pick(rng, static_cast<int>(chars.size()))];
    LinMap act = lin_zero(1, da);
    for (int i = 0; i < da; ++i) act.at(0, i) = chi[i];
    M = {1, act};
  }

  const int dq = 1 + pick(rng, 3);
  Comodule Q;
  Q.dim = dq;
  Q.rho = lin_zero(dq * db, dq);
  for (int i = 0; i < dq; ++i) Q.rho.at(i * db + pick(rng, db), i) = F.one();

  // transport everything through random basis changes; validity is preserved
  // while the matrices stop being permutation-like
  LinMap pb = random_invertible(rng, F, db);
  LinMap pa = random_invertible(rng, F, da);
  LinMap pm = random_invertible(rng, F, M.dim);
  LinMap pq = random_invertible(rng, F, dq);
  LinMap pbi = *try_inverse(F, pb);
  LinMap pai = *try_inverse(F, pa);
  LinMap pmi = *try_inverse(F, pm);
  LinMap pqi = *try_inverse(F, pq);

  Bialgebra B2;
  B2.dim = db;
  B2.mult = lin_compose(F, pb, lin_compose(F, B.mult, kron(F, pbi, pbi)));
  B2.unit = lin_compose(F, pb, B.unit);
  B2.comul = lin_compose(F, kron(F, pb, pb), lin_compose(F, B.comul, pbi));
  B2.counit = lin_compose(F, B.counit, pbi);
  ModuleAlgebra A2;
  A2.dim = da;
  A2.mult = lin_compose(F, pa, lin_compose(F, A.mult, kron(F, pai, pai)));
  A2.unit = lin_compose(F, pa, A.unit);
  A2.act = lin_compose(F, pa, lin_compose(F, A.act, kron(F, pbi, pai)));
  AModule M2{M.dim,
             lin_compose(F, pm, lin_compose(F, M.act, kron(F, pai, pmi)))};
  Comodule Q2{dq, lin_compose(F, kron(F, pq, pb), lin_compose(F, Q.rho, pqi))};

  return {"rnd" + std::to_string(seed), F, B2, A2, M2, Q2};
}

}  // namespace catlift
