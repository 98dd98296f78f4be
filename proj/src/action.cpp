#include "catlift/action.hpp"

namespace catlift {

bool operator==(const MonoidalAction& a, const MonoidalAction& b) {
  return *a.C == *b.C && same_cat(a.M, b.M) && a.act == b.act &&
         a.psi == b.psi && a.unit_u == b.unit_u;
}

MonoidalAction make_action(MonoidalPtr C, CatPtr M, Bifunctor act,
                           std::vector<MorId> psi, std::vector<MorId> unit_u,
                           bool strict) {
  if (!same_cat(act.dom1, M) || !same_cat(act.dom2, C->base) ||
      !same_cat(act.cod, M))
    throw MalformedInput("make_action: act must be M x C -> M");
  const int nm = M->n_obj(), nc = C->base->n_obj();
  if (static_cast<int>(psi.size()) != nm * nc * nc)
    throw MalformedInput("make_action: psi table must be n_M * n_C^2");
  if (static_cast<int>(unit_u.size()) != nm)
    throw MalformedInput("make_action: unit table must be n_M");
  for (MorId m : psi)
    if (m < 0 || m >= M->n_mor())
      throw MalformedInput("make_action: psi entry out of range");
  for (MorId m : unit_u)
    if (m < 0 || m >= M->n_mor())
      throw MalformedInput("make_action: unit entry out of range");
  MonoidalAction A;
  A.C = std::move(C);
  A.M = std::move(M);
  A.act = std::move(act);
  A.psi = std::move(psi);
  A.unit_u = std::move(unit_u);
  A.strict = strict;
  return A;
}

MonoidalAction make_strict_action(MonoidalPtr C, CatPtr M, Bifunctor act) {
  const int nm = M->n_obj(), nc = C->base->n_obj();
  std::vector<MorId> psi(nm * nc * nc), unit_u(nm);
  for (ObjId m = 0; m < nm; ++m) {
    for (ObjId x = 0; x < nc; ++x) {
      for (ObjId y = 0; y < nc; ++y) {
        ObjId l = act.on_obj(m, C->ten(x, y));
        ObjId r = act.on_obj(act.on_obj(m, x), y);
        if (l != r)
          throw MalformedInput("make_strict_action: action not associative");
        psi[(m * nc + x) * nc + y] = M->identity[l];
      }
    }
    if (act.on_obj(m, C->unit) != m)
      throw MalformedInput("make_strict_action: unit not strict");
    unit_u[m] = M->identity[m];
  }
  return make_action(std::move(C), std::move(M), std::move(act), std::move(psi),
                     std::move(unit_u), true);
}

Report check_action(const MonoidalAction& A) {
  Report rep = check_bifunctor(A.act);
  const FinCategory& M = *A.M;
  const FinCategory& Cb = *A.C->base;
  const MonoidalCategory& C = *A.C;
  const int nm = M.n_obj(), nc = Cb.n_obj();

  for (ObjId m = 0; m < nm; ++m) {
    for (ObjId x = 0; x < nc; ++x) {
      for (ObjId y = 0; y < nc; ++y) {
        MorId p = A.psi_at(m, x, y);
        if (M.mor_src[p] != A.ao(m, C.ten(x, y)) ||
            M.mor_tgt[p] != A.ao(A.ao(m, x), y)) {
          rep.add("action.psi.endpoints",
                  {{"M", M.obj_name(m)}, {"X", Cb.obj_name(x)},
                   {"Y", Cb.obj_name(y)}},
                  "psi component has wrong endpoints");
          continue;
        }
        if (!inverse_of(M, p))
          rep.add("action.psi.iso",
                  {{"M", M.obj_name(m)}, {"X", Cb.obj_name(x)},
                   {"Y", Cb.obj_name(y)}},
                  "psi component not invertible");
        if (A.strict && p != M.identity[M.mor_src[p]])
          rep.add("action.strict",
                  {{"M", M.obj_name(m)}, {"X", Cb.obj_name(x)},
                   {"Y", Cb.obj_name(y)}},
                  "declared strict but psi is not an identity");
      }
    }
    MorId u = A.unit_u[m];
    if (M.mor_src[u] != m || M.mor_tgt[u] != A.ao(m, C.unit)) {
      rep.add("action.unit.endpoints", {{"M", M.obj_name(m)}},
              "u component has wrong endpoints");
    } else if (!inverse_of(M, u)) {
      rep.add("action.unit.iso", {{"M", M.obj_name(m)}},
              "u component not invertible");
    }
    if (A.strict && u != M.identity[m])
      rep.add("action.strict", {{"M", M.obj_name(m)}},
              "declared strict but u is not an identity");
  }

  // Naturality of psi in all three slots at once.
  for (MorId fm = 0; fm < M.n_mor(); ++fm) {
    for (MorId f = 0; f < Cb.n_mor(); ++f) {
      for (MorId g = 0; g < Cb.n_mor(); ++g) {
        ObjId m = M.mor_src[fm], m2 = M.mor_tgt[fm];
        ObjId x = Cb.mor_src[f], x2 = Cb.mor_tgt[f];
        ObjId y = Cb.mor_src[g], y2 = Cb.mor_tgt[g];
        MorId lhs = try_compose(M, A.psi_at(m2, x2, y2), A.am(fm, C.ten_m(f, g)));
        MorId rhs = try_compose(M, A.am(A.am(fm, f), g), A.psi_at(m, x, y));
        if (lhs != rhs || lhs == kNoMor)
          rep.add("action.psi.natural",
                  {{"fM", M.mor_name(fm)}, {"f", Cb.mor_name(f)},
                   {"g", Cb.mor_name(g)}},
                  "psi naturality square does not commute");
      }
    }
  }
  for (MorId fm = 0; fm < M.n_mor(); ++fm) {
    ObjId m = M.mor_src[fm], m2 = M.mor_tgt[fm];
    MorId lhs = try_compose(M, A.unit_u[m2], fm);
    MorId rhs = try_compose(M, A.am_mo(fm, C.unit), A.unit_u[m]);
    if (lhs != rhs || lhs == kNoMor)
      rep.add("action.unit.natural", {{"fM", M.mor_name(fm)}},
              "u naturality square does not commute");
  }

  // Pentagon: under the self action this is exactly C's pentagon.
  for (ObjId m = 0; m < nm; ++m) {
    for (ObjId x = 0; x < nc; ++x) {
      for (ObjId y = 0; y < nc; ++y) {
        for (ObjId z = 0; z < nc; ++z) {
          MorId lhs = try_compose_chain(
              M, {A.psi_at(m, x, C.ten(y, z)), A.psi_at(A.ao(m, x), y, z)});
          MorId rhs = try_compose_chain(
              M, {A.am_om(m, C.assoc_at(x, y, z)), A.psi_at(m, C.ten(x, y), z),
                  A.am_mo(A.psi_at(m, x, y), z)});
          if (lhs != rhs || lhs == kNoMor)
            rep.add("action.pentagon",
                    {{"M", M.obj_name(m)}, {"X", Cb.obj_name(x)},
                     {"Y", Cb.obj_name(y)}, {"Z", Cb.obj_name(z)}},
                    "action pentagon does not commute");
        }
      }
    }
  }

  for (ObjId m = 0; m < nm; ++m) {
    for (ObjId q = 0; q < nc; ++q) {
      MorId lhs = try_compose_chain(
          M, {A.am_om(m, C.lunit[q]), A.psi_at(m, C.unit, q)});
      MorId rhs = A.am_mo(A.unit_u[m], q);
      if (lhs != rhs || lhs == kNoMor)
        rep.add("action.triangle.left",
                {{"M", M.obj_name(m)}, {"Q", Cb.obj_name(q)}},
                "unit/lunit triangle does not commute");
      lhs = try_compose_chain(M,
                              {A.am_om(m, C.runit[q]), A.psi_at(m, q, C.unit)});
      rhs = A.unit_u[A.ao(m, q)];
      if (lhs != rhs || lhs == kNoMor)
        rep.add("action.triangle.right",
                {{"M", M.obj_name(m)}, {"Q", Cb.obj_name(q)}},
                "unit/runit triangle does not commute");
    }
  }
  return rep;
}

MonoidalAction self_action(MonoidalPtr C) {
  MonoidalAction A;
  A.M = C->base;
  A.act = C->tensor;
  A.psi = C->assoc;
  A.unit_u = C->runit;
  A.strict = C->strict;
  A.C = std::move(C);
  return A;
}

Functor curry_action(const MonoidalAction& A, ObjId q) {
  if (q < 0 || q >= A.C->base->n_obj())
    throw UnknownObject("curry_action: object out of range");
  return fix_second(A.act, q);
}

NatTrans curry_compose_iso(const ActionPtr& A, ObjId q, ObjId q2) {
  Functor src = curry_action(*A, A->C->ten(q, q2));
  Functor tgt = compose_functors(curry_action(*A, q2), curry_action(*A, q));
  std::vector<MorId> comp(A->M->n_obj());
  for (ObjId m = 0; m < A->M->n_obj(); ++m) comp[m] = A->psi_at(m, q, q2);
  return NatTrans{std::move(src), std::move(tgt), std::move(comp)};
}

Monad monad_from_monoid(const ActionPtr& A, const MonoidObject& B) {
  const FinCategory& M = *A->M;
  Functor T = curry_action(*A, B.carrier);
  std::vector<MorId> mu(M.n_obj()), eta(M.n_obj());
  for (ObjId m = 0; m < M.n_obj(); ++m) {
    auto psi_inv = inverse_of(M, A->psi_at(m, B.carrier, B.carrier));
    if (!psi_inv)
      throw LawInvalid("monad_from_monoid: psi component not invertible");
    mu[m] = try_compose_chain(M, {*psi_inv, A->am_om(m, B.mult)});
    eta[m] = try_compose_chain(M, {A->unit_u[m], A->am_om(m, B.unit_mor)});
    if (mu[m] == kNoMor || eta[m] == kNoMor)
      throw LawInvalid("monad_from_monoid: structure maps fail to compose");
  }
  Functor TT = compose_functors(T, T);
  NatTrans mu_t{std::move(TT), T, std::move(mu)};
  NatTrans eta_t{identity_functor(A->M), T, std::move(eta)};
  return make_monad(std::move(T), std::move(mu_t), std::move(eta_t));
}

Report check_c_functor(const CFunctor& G) {
  Report rep;
  const MonoidalAction& Ad = *G.dom_action;
  const MonoidalAction& Ac = *G.cod_action;
  if (!(*Ad.C == *Ac.C)) {
    rep.add("cfunctor.monoidal", {}, "actions are over different monoidal bases");
    return rep;
  }
  rep.merge(check_functor(G.F));
  const FinCategory& Md = *Ad.M;
  const FinCategory& Mc = *Ac.M;
  const FinCategory& Cb = *Ad.C->base;
  const MonoidalCategory& C = *Ad.C;
  const int nd = Md.n_obj(), nc = Cb.n_obj();

  for (ObjId m = 0; m < nd; ++m) {
    for (ObjId q = 0; q < nc; ++q) {
      MorId z = G.zeta_at(m, q);
      if (z < 0 || z >= Mc.n_mor() ||
          Mc.mor_src[z] != Ac.ao(G.F.on_obj(m), q) ||
          Mc.mor_tgt[z] != G.F.on_obj(Ad.ao(m, q))) {
        rep.add("cfunctor.zeta.endpoints",
                {{"M", Md.obj_name(m)}, {"Q", Cb.obj_name(q)}},
                "zeta component has wrong endpoints");
        continue;
      }
      if (!inverse_of(Mc, z))
        rep.add("cfunctor.zeta.iso",
                {{"M", Md.obj_name(m)}, {"Q", Cb.obj_name(q)}},
                "zeta component not invertible");
    }
  }
  if (!rep.ok()) return rep;  // later diagrams assume well-typed zeta

  for (MorId fm = 0; fm < Md.n_mor(); ++fm) {
    for (MorId g = 0; g < Cb.n_mor(); ++g) {
      ObjId m = Md.mor_src[fm], m2 = Md.mor_tgt[fm];
      ObjId q = Cb.mor_src[g], q2 = Cb.mor_tgt[g];
      MorId lhs = try_compose(Mc, G.zeta_at(m2, q2), Ac.am(G.F.on_mor(fm), g));
      MorId rhs = try_compose(Mc, G.F.on_mor(Ad.am(fm, g)), G.zeta_at(m, q));
      if (lhs != rhs || lhs == kNoMor)
        rep.add("cfunctor.zeta.natural",
                {{"fM", Md.mor_name(fm)}, {"g", Cb.mor_name(g)}},
                "zeta naturality square does not commute");
    }
  }

  for (ObjId m = 0; m < nd; ++m) {
    MorId lhs = try_compose_chain(
        Mc, {Ac.unit_u[G.F.on_obj(m)], G.zeta_at(m, C.unit)});
    MorId rhs = G.F.on_mor(Ad.unit_u[m]);
    if (lhs != rhs || lhs == kNoMor)
      rep.add("cfunctor.unit", {{"M", Md.obj_name(m)}},
              "unit triangle does not commute");
  }

  for (ObjId m = 0; m < nd; ++m) {
    for (ObjId q = 0; q < nc; ++q) {
      for (ObjId q2 = 0; q2 < nc; ++q2) {
        MorId lhs = try_compose_chain(
            Mc, {Ac.psi_at(G.F.on_obj(m), q, q2), Ac.am_mo(G.zeta_at(m, q), q2),
                 G.zeta_at(Ad.ao(m, q), q2)});
        MorId rhs = try_compose_chain(
            Mc, {G.zeta_at(m, C.ten(q, q2)), G.F.on_mor(Ad.psi_at(m, q, q2))});
        if (lhs != rhs || lhs == kNoMor)
          rep.add("cfunctor.psi",
                  {{"M", Md.obj_name(m)}, {"Q", Cb.obj_name(q)},
                   {"Q2", Cb.obj_name(q2)}},
                  "psi compatibility does not commute");
      }
    }
  }
  return rep;
}

bool is_strict(const CFunctor& G) {
  const FinCategory& Mc = *G.cod_action->M;
  for (MorId z : G.zeta) {
    if (z < 0 || z >= Mc.n_mor()) return false;
    if (z != Mc.identity[Mc.mor_src[z]]) return false;
  }
  return true;
}

CFunctor make_identity_zeta_cfunctor(ActionPtr dom_action, ActionPtr cod_action,
                                     Functor F) {
  const FinCategory& Mc = *cod_action->M;
  const int nd = dom_action->M->n_obj();
  const int nc = dom_action->C->base->n_obj();
  std::vector<MorId> zeta(nd * nc);
  for (ObjId m = 0; m < nd; ++m)
    for (ObjId q = 0; q < nc; ++q)
      zeta[m * nc + q] = Mc.identity[cod_action->ao(F.on_obj(m), q)];
  return CFunctor{std::move(dom_action), std::move(cod_action), std::move(F),
                  std::move(zeta)};
}

}  // namespace catlift
