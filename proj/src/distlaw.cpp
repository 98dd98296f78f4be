#include "catlift/distlaw.hpp"

#include <algorithm>
#include <functional>

namespace catlift {

bool operator==(const DistributiveLaw& a, const DistributiveLaw& b) {
  return *a.action == *b.action && a.monad == b.monad &&
         a.components == b.components;
}

DistributiveLaw make_distlaw(ActionPtr action, Monad monad,
                             std::vector<MorId> components) {
  if (!same_cat(monad.base(), action->M))
    throw MalformedInput("make_distlaw: monad and action live on different categories");
  const int want = action->M->n_obj() * action->C->base->n_obj();
  if (static_cast<int>(components.size()) != want)
    throw MalformedInput("make_distlaw: one component per (object, object) pair");
  for (MorId c : components)
    if (c != kNoMor && (c < 0 || c >= action->M->n_mor()))
      throw MalformedInput("make_distlaw: component out of range");
  return DistributiveLaw{std::move(action), std::move(monad),
                         std::move(components)};
}

Report check_distlaw(const DistributiveLaw& l) {
  Report rep;
  const MonoidalAction& A = *l.action;
  const Monad& T = l.monad;
  const FinCategory& M = *A.M;
  const FinCategory& Cb = *A.C->base;
  const MonoidalCategory& C = *A.C;
  const int nm = M.n_obj(), nc = Cb.n_obj();

  auto present = [&](ObjId m, ObjId q) { return l.at(m, q) != kNoMor; };

  for (ObjId m = 0; m < nm; ++m) {
    for (ObjId q = 0; q < nc; ++q) {
      MorId c = l.at(m, q);
      if (c == kNoMor) {
        rep.add("distlaw.component.nonexistent",
                {{"M", M.obj_name(m)}, {"Q", Cb.obj_name(q)}},
                "no component given for this slot");
        continue;
      }
      if (M.mor_src[c] != T.t_obj(A.ao(m, q)) ||
          M.mor_tgt[c] != A.ao(T.t_obj(m), q))
        rep.add("distlaw.component.endpoints",
                {{"M", M.obj_name(m)}, {"Q", Cb.obj_name(q)}},
                "component is not T(m act Q) -> T(m) act Q");
    }
  }

  // Naturality in the module-category slot.
  for (MorId f = 0; f < M.n_mor(); ++f) {
    ObjId m = M.mor_src[f], m2 = M.mor_tgt[f];
    for (ObjId q = 0; q < nc; ++q) {
      if (!present(m, q) || !present(m2, q)) continue;
      MorId lhs = try_compose(M, l.at(m2, q), T.t_mor(A.am_mo(f, q)));
      MorId rhs = try_compose(M, A.am_mo(T.t_mor(f), q), l.at(m, q));
      if (lhs != rhs || lhs == kNoMor)
        rep.add("distlaw.natural.M",
                {{"f", M.mor_name(f)}, {"Q", Cb.obj_name(q)}},
                "naturality in the acted-on slot fails");
    }
  }
  // Naturality in the monoidal slot.
  for (ObjId m = 0; m < nm; ++m) {
    for (MorId g = 0; g < Cb.n_mor(); ++g) {
      ObjId q = Cb.mor_src[g], q2 = Cb.mor_tgt[g];
      if (!present(m, q) || !present(m, q2)) continue;
      MorId lhs = try_compose(M, l.at(m, q2), T.t_mor(A.am_om(m, g)));
      MorId rhs = try_compose(M, A.am_om(T.t_obj(m), g), l.at(m, q));
      if (lhs != rhs || lhs == kNoMor)
        rep.add("distlaw.natural.Q",
                {{"M", M.obj_name(m)}, {"g", Cb.mor_name(g)}},
                "naturality in the monoidal slot fails");
    }
  }

  for (ObjId m = 0; m < nm; ++m) {
    ObjId tm = T.t_obj(m);
    for (ObjId q = 0; q < nc; ++q) {
      if (!present(m, q)) continue;
      if (present(tm, q)) {
        MorId lhs = try_compose_chain(
            M, {T.t_mor(l.at(m, q)), l.at(tm, q), A.am_mo(T.mu.at(m), q)});
        MorId rhs = try_compose(M, l.at(m, q), T.mu.at(A.ao(m, q)));
        if (lhs != rhs || lhs == kNoMor)
          rep.add("distlaw.D1", {{"M", M.obj_name(m)}, {"Q", Cb.obj_name(q)}},
                  "multiplication square fails");
      }
      if (T.unital) {
        MorId lhs = try_compose(M, l.at(m, q), T.eta.at(A.ao(m, q)));
        MorId rhs = A.am_mo(T.eta.at(m), q);
        if (lhs != rhs || lhs == kNoMor)
          rep.add("distlaw.D3", {{"M", M.obj_name(m)}, {"Q", Cb.obj_name(q)}},
                  "unit triangle fails");
      }
    }
    if (present(m, C.unit)) {
      MorId lhs = try_compose(M, l.at(m, C.unit), T.t_mor(A.unit_u[m]));
      MorId rhs = A.unit_u[tm];
      if (lhs != rhs || lhs == kNoMor)
        rep.add("distlaw.D4", {{"M", M.obj_name(m)}},
                "action unit square fails");
    }
  }

  for (ObjId m = 0; m < nm; ++m) {
    for (ObjId q = 0; q < nc; ++q) {
      for (ObjId q2 = 0; q2 < nc; ++q2) {
        if (!present(m, C.ten(q, q2)) || !present(m, q) ||
            !present(A.ao(m, q), q2))
          continue;
        MorId lhs = try_compose_chain(
            M, {l.at(m, C.ten(q, q2)), A.psi_at(T.t_obj(m), q, q2)});
        MorId rhs = try_compose_chain(
            M, {T.t_mor(A.psi_at(m, q, q2)), l.at(A.ao(m, q), q2),
                A.am_mo(l.at(m, q), q2)});
        if (lhs != rhs || lhs == kNoMor)
          rep.add("distlaw.D2",
                  {{"M", M.obj_name(m)}, {"Q", Cb.obj_name(q)},
                   {"Q2", Cb.obj_name(q2)}},
                  "psi compatibility fails");
      }
    }
  }
  return rep;
}

bool operator==(const LiftedAction& a, const LiftedAction& b) {
  return a.tilde == b.tilde && *a.lower == *b.lower &&
         a.em->monad == b.em->monad;
}

Report check_strict_lift(const MonoidalAction& tilde, const EMCategory& em,
                         const MonoidalAction& lower) {
  Report rep;
  const FinCategory& E = *em.base;
  const FinCategory& M = *lower.M;
  const FinCategory& Cb = *lower.C->base;
  if (!same_cat(tilde.M, em.base)) {
    rep.add("strictlift.base", {}, "candidate does not act on the EM category");
    return rep;
  }
  if (!(*tilde.C == *lower.C)) {
    rep.add("strictlift.monoidal", {}, "actions are over different monoidal bases");
    return rep;
  }
  const int ne = E.n_obj(), nc = Cb.n_obj();

  for (int x = 0; x < ne; ++x)
    for (ObjId q = 0; q < nc; ++q)
      if (em.U.on_obj(tilde.ao(x, q)) != lower.ao(em.U.on_obj(x), q))
        rep.add("strictlift.objects",
                {{"X", E.obj_name(x)}, {"Q", Cb.obj_name(q)}},
                "U(X act~ Q) != U(X) act Q");
  for (MorId f = 0; f < E.n_mor(); ++f)
    for (MorId g = 0; g < Cb.n_mor(); ++g)
      if (em.U.on_mor(tilde.am(f, g)) != lower.am(em.U.on_mor(f), g))
        rep.add("strictlift.morphisms",
                {{"f", E.mor_name(f)}, {"g", Cb.mor_name(g)}},
                "U(f act~ g) != U(f) act g");
  for (int x = 0; x < ne; ++x)
    if (em.U.on_mor(tilde.unit_u[x]) != lower.unit_u[em.U.on_obj(x)])
      rep.add("strictlift.unit", {{"X", E.obj_name(x)}}, "U(u~) != u");
  for (int x = 0; x < ne; ++x)
    for (ObjId q = 0; q < nc; ++q)
      for (ObjId q2 = 0; q2 < nc; ++q2)
        if (em.U.on_mor(tilde.psi_at(x, q, q2)) !=
            lower.psi_at(em.U.on_obj(x), q, q2))
          rep.add("strictlift.psi",
                  {{"X", E.obj_name(x)}, {"Q", Cb.obj_name(q)},
                   {"Q2", Cb.obj_name(q2)}},
                  "U(psi~) != psi");
  (void)M;
  return rep;
}

LiftedAction lift_from_law(const DistributiveLaw& l, EMPtr em) {
  Report ok = check_distlaw(l);
  if (!ok.ok())
    throw LawInvalid("lift_from_law: law fails check_distlaw:\n" + ok.to_string());
  if (!em) em = em_category(l.monad);
  const MonoidalAction& A = *l.action;
  const FinCategory& M = *A.M;
  const FinCategory& E = *em->base;
  const FinCategory& Cb = *A.C->base;
  const int ne = E.n_obj(), nc = Cb.n_obj();

  // Objects: (m, nu) act~ Q = (m act Q, (nu act Q) . l^Q_m).
  std::vector<ObjId> obj(ne * nc);
  for (int x = 0; x < ne; ++x) {
    const TModule& mod = em->modules[x];
    for (ObjId q = 0; q < nc; ++q) {
      MorId nu_q = try_compose_chain(
          M, {l.at(mod.carrier, q), A.am_mo(mod.nu, q)});
      int target = em->find_object(TModule{A.ao(mod.carrier, q), nu_q});
      if (nu_q == kNoMor || target < 0)
        throw CatError("lift_from_law: lifted module structure is not a module");
      obj[x * nc + q] = target;
    }
  }
  // Morphisms are forced: the unique EM morphism over U(f) act g.
  std::vector<MorId> mor(E.n_mor() * Cb.n_mor());
  for (MorId f = 0; f < E.n_mor(); ++f) {
    for (MorId g = 0; g < Cb.n_mor(); ++g) {
      int src = obj[E.mor_src[f] * nc + Cb.mor_src[g]];
      int tgt = obj[E.mor_tgt[f] * nc + Cb.mor_tgt[g]];
      int e = em->find_morphism(src, tgt, A.am(em->underlying[f], g));
      if (e < 0)
        throw CatError("lift_from_law: acted morphism is not a module morphism");
      mor[f * Cb.n_mor() + g] = e;
    }
  }
  std::vector<MorId> psi(ne * nc * nc), unit_u(ne);
  for (int x = 0; x < ne; ++x) {
    ObjId m = em->modules[x].carrier;
    for (ObjId q = 0; q < nc; ++q) {
      for (ObjId q2 = 0; q2 < nc; ++q2) {
        int src = obj[x * nc + A.C->ten(q, q2)];
        int tgt = obj[obj[x * nc + q] * nc + q2];
        int e = em->find_morphism(src, tgt, A.psi_at(m, q, q2));
        if (e < 0)
          throw CatError("lift_from_law: psi does not lift");
        psi[(x * nc + q) * nc + q2] = e;
      }
    }
    int e = em->find_morphism(x, obj[x * nc + A.C->unit], A.unit_u[m]);
    if (e < 0) throw CatError("lift_from_law: u does not lift");
    unit_u[x] = e;
  }

  MonoidalAction tilde;
  tilde.C = A.C;
  tilde.M = em->base;
  tilde.act = Bifunctor{em->base, A.C->base, em->base, std::move(obj),
                        std::move(mor)};
  tilde.psi = std::move(psi);
  tilde.unit_u = std::move(unit_u);
  tilde.strict = false;
  return LiftedAction{std::move(tilde), em, l.action};
}

DistributiveLaw law_from_lift(const LiftedAction& L) {
  const MonoidalAction& A = *L.lower;
  const EMCategory& em = *L.em;
  const Monad& T = em.monad;
  const FinCategory& M = *A.M;
  const int nc = A.C->base->n_obj();

  std::vector<MorId> comp(M.n_obj() * nc, kNoMor);
  for (ObjId m = 0; m < M.n_obj(); ++m) {
    int fm = em.F.on_obj(m);
    for (ObjId q = 0; q < nc; ++q) {
      // mu-hat: the module structure of F(m) act~ Q, i.e. U(eps) there.
      int lifted = L.tilde.ao(fm, q);
      MorId mu_hat = em.modules[lifted].nu;
      MorId c = try_compose_chain(
          M, {T.t_mor(A.am_mo(T.eta.at(m), q)), mu_hat});
      if (c == kNoMor)
        throw CatError("law_from_lift: composite undefined");
      comp[m * nc + q] = c;
    }
  }
  return DistributiveLaw{L.lower, T, std::move(comp)};
}

namespace {

// Shared backtracking scaffold: slots with candidate lists, constraints
// evaluated as soon as every slot they mention is assigned.
struct Search {
  std::vector<std::vector<int>> candidates;            // per slot
  // constraint -> slots it needs; checked when its last slot is assigned
  struct Constraint {
    std::vector<int> slots;
    std::function<bool(const std::vector<int>&)> eval;
  };
  std::vector<Constraint> constraints;

  template <typename Leaf>
  void run(Leaf&& leaf) const {
    const int n = static_cast<int>(candidates.size());
    std::vector<std::vector<int>> buckets(n);
    for (int c = 0; c < static_cast<int>(constraints.size()); ++c) {
      int last = 0;
      for (int s : constraints[c].slots) last = std::max(last, s);
      if (!constraints[c].slots.empty()) buckets[last].push_back(c);
    }
    std::vector<int> assign(n, -1);
    std::function<void(int)> step = [&](int depth) {
      if (depth == n) {
        leaf(assign);
        return;
      }
      for (int cand : candidates[depth]) {
        assign[depth] = cand;
        bool ok = true;
        for (int ci : buckets[depth]) {
          if (!constraints[ci].eval(assign)) {
            ok = false;
            break;
          }
        }
        if (ok) step(depth + 1);
      }
      assign[depth] = -1;
    };
    if (n == 0) {
      leaf(assign);
      return;
    }
    step(0);
  }
};

}  // namespace

std::vector<DistributiveLaw> enumerate_laws(ActionPtr A, const Monad& T,
                                            EnumCaps caps) {
  const FinCategory& M = *A->M;
  const FinCategory& Cb = *A->C->base;
  const MonoidalCategory& C = *A->C;
  const int nm = M.n_obj(), nc = Cb.n_obj();
  if (nm * nc > caps.index_cap)
    throw CapExceeded("enumerate_laws: " + std::to_string(nm * nc) +
                      " slots exceed index cap " +
                      std::to_string(caps.index_cap));

  Search s;
  s.candidates.resize(nm * nc);
  auto slot = [&](ObjId m, ObjId q) { return m * nc + q; };
  for (ObjId m = 0; m < nm; ++m) {
    for (ObjId q = 0; q < nc; ++q) {
      auto all = hom(M, T.t_obj(A->ao(m, q)), A->ao(T.t_obj(m), q));
      if (static_cast<int>(all.size()) > caps.hom_cap)
        throw CapExceeded("enumerate_laws: hom-set of size " +
                          std::to_string(all.size()) + " exceeds hom cap " +
                          std::to_string(caps.hom_cap));
      for (MorId cand : all) {
        // D3 and D4 touch one slot each; filtering here prunes hard.
        if (T.unital) {
          MorId lhs = try_compose(M, cand, T.eta.at(A->ao(m, q)));
          if (lhs != A->am_mo(T.eta.at(m), q)) continue;
        }
        if (q == C.unit) {
          MorId lhs = try_compose(M, cand, T.t_mor(A->unit_u[m]));
          if (lhs != A->unit_u[T.t_obj(m)]) continue;
        }
        s.candidates[slot(m, q)].push_back(cand);
      }
    }
  }

  for (MorId f = 0; f < M.n_mor(); ++f) {
    ObjId m = M.mor_src[f], m2 = M.mor_tgt[f];
    for (ObjId q = 0; q < nc; ++q) {
      int s1 = slot(m, q), s2 = slot(m2, q);
      s.constraints.push_back(
          {{s1, s2}, [&, f, q, s1, s2](const std::vector<int>& a) {
             MorId lhs = try_compose(M, a[s2], T.t_mor(A->am_mo(f, q)));
             MorId rhs = try_compose(M, A->am_mo(T.t_mor(f), q), a[s1]);
             return lhs == rhs && lhs != kNoMor;
           }});
    }
  }
  for (ObjId m = 0; m < nm; ++m) {
    for (MorId g = 0; g < Cb.n_mor(); ++g) {
      int s1 = slot(m, Cb.mor_src[g]), s2 = slot(m, Cb.mor_tgt[g]);
      s.constraints.push_back(
          {{s1, s2}, [&, m, g, s1, s2](const std::vector<int>& a) {
             MorId lhs = try_compose(M, a[s2], T.t_mor(A->am_om(m, g)));
             MorId rhs = try_compose(M, A->am_om(T.t_obj(m), g), a[s1]);
             return lhs == rhs && lhs != kNoMor;
           }});
    }
  }
  for (ObjId m = 0; m < nm; ++m) {
    ObjId tm = T.t_obj(m);
    for (ObjId q = 0; q < nc; ++q) {
      int s1 = slot(m, q), s2 = slot(tm, q);
      s.constraints.push_back(
          {{s1, s2}, [&, m, q, s1, s2](const std::vector<int>& a) {
             MorId lhs = try_compose_chain(
                 *A->M, {T.t_mor(a[s1]), a[s2], A->am_mo(T.mu.at(m), q)});
             MorId rhs = try_compose(M, a[s1], T.mu.at(A->ao(m, q)));
             return lhs == rhs && lhs != kNoMor;
           }});
    }
  }
  for (ObjId m = 0; m < nm; ++m) {
    for (ObjId q = 0; q < nc; ++q) {
      for (ObjId q2 = 0; q2 < nc; ++q2) {
        int s1 = slot(m, C.ten(q, q2));
        int s2 = slot(m, q);
        int s3 = slot(A->ao(m, q), q2);
        s.constraints.push_back(
            {{s1, s2, s3}, [&, m, q, q2, s1, s2, s3](const std::vector<int>& a) {
               MorId lhs = try_compose_chain(
                   M, {a[s1], A->psi_at(T.t_obj(m), q, q2)});
               MorId rhs = try_compose_chain(
                   M, {T.t_mor(A->psi_at(m, q, q2)), a[s3],
                       A->am_mo(a[s2], q2)});
               return lhs == rhs && lhs != kNoMor;
             }});
      }
    }
  }

  std::vector<DistributiveLaw> out;
  s.run([&](const std::vector<int>& assign) {
    DistributiveLaw cand{A, T, assign};
    if (check_distlaw(cand).ok()) out.push_back(std::move(cand));
  });
  return out;
}

std::vector<LiftedAction> enumerate_strict_lifts(ActionPtr A, const Monad& T,
                                                 EnumCaps caps) {
  const FinCategory& M = *A->M;
  const FinCategory& Cb = *A->C->base;
  const MonoidalCategory& C = *A->C;
  const int nm = M.n_obj(), nc = Cb.n_obj();
  if (nm * nc > caps.index_cap)
    throw CapExceeded("enumerate_strict_lifts: slot count exceeds index cap");

  EMPtr em = em_category(T, caps.em_mor_cap);
  const FinCategory& E = *em->base;
  const int ne = E.n_obj();
  if (ne > caps.em_cap)
    throw CapExceeded("enumerate_strict_lifts: " + std::to_string(ne) +
                      " EM objects exceed cap " + std::to_string(caps.em_cap));

  // Slot (X, Q) picks which module structure sits on U(X) act Q. Everything
  // else about the candidate is forced by strictness.
  Search s;
  s.candidates.resize(ne * nc);
  auto slot = [&](int x, ObjId q) { return x * nc + q; };
  for (int x = 0; x < ne; ++x) {
    ObjId carrier = em->modules[x].carrier;
    for (ObjId q = 0; q < nc; ++q) {
      ObjId want = A->ao(carrier, q);
      std::vector<int> cands;
      for (int y = 0; y < ne; ++y) {
        if (em->modules[y].carrier != want) continue;
        // u~_X must exist when Q is the unit: u_{UX} has to intertwine.
        if (q == C.unit &&
            !is_module_morphism(T, em->modules[x], em->modules[y],
                                A->unit_u[carrier]))
          continue;
        cands.push_back(y);
      }
      if (static_cast<int>(cands.size()) > caps.hom_cap)
        throw CapExceeded("enumerate_strict_lifts: candidate set exceeds hom cap");
      s.candidates[slot(x, q)] = std::move(cands);
    }
  }

  // Forced morphisms must intertwine the chosen structures.
  for (MorId f = 0; f < E.n_mor(); ++f) {
    for (MorId g = 0; g < Cb.n_mor(); ++g) {
      int s1 = slot(E.mor_src[f], Cb.mor_src[g]);
      int s2 = slot(E.mor_tgt[f], Cb.mor_tgt[g]);
      MorId under = A->am(em->underlying[f], g);
      s.constraints.push_back(
          {{s1, s2}, [&, under, s1, s2](const std::vector<int>& a) {
             return is_module_morphism(T, em->modules[a[s1]],
                                       em->modules[a[s2]], under);
           }});
    }
  }
  // psi~ must exist: psi_{UX} intertwines X act~ (Q (x) Q') with
  // (X act~ Q) act~ Q'. The third slot depends on the choice at (X, Q), so
  // the constraint registers against every slot it may read.
  for (int x = 0; x < ne; ++x) {
    ObjId carrier = em->modules[x].carrier;
    for (ObjId q = 0; q < nc; ++q) {
      for (ObjId q2 = 0; q2 < nc; ++q2) {
        int s1 = slot(x, C.ten(q, q2));
        int s2 = slot(x, q);
        MorId under = A->psi_at(carrier, q, q2);
        std::vector<int> touched{s1, s2};
        for (int y = 0; y < ne; ++y)
          if (em->modules[y].carrier == A->ao(carrier, q))
            touched.push_back(slot(y, q2));
        s.constraints.push_back(
            {std::move(touched),
             [&, under, s1, s2, q2](const std::vector<int>& a) {
               int mid = a[s2];
               int s3 = slot(mid, q2);
               return is_module_morphism(T, em->modules[a[s1]],
                                         em->modules[a[s3]], under);
             }});
      }
    }
  }

  std::vector<LiftedAction> out;
  s.run([&](const std::vector<int>& assign) {
    // Assemble the candidate action; bail out if a forced morphism is
    // missing (cannot happen past the constraints, but keep the filter
    // honest rather than trusting the pruning).
    std::vector<ObjId> obj(assign.begin(), assign.end());
    std::vector<MorId> mor(E.n_mor() * Cb.n_mor());
    for (MorId f = 0; f < E.n_mor(); ++f) {
      for (MorId g = 0; g < Cb.n_mor(); ++g) {
        int src = obj[slot(E.mor_src[f], Cb.mor_src[g])];
        int tgt = obj[slot(E.mor_tgt[f], Cb.mor_tgt[g])];
        int e = em->find_morphism(src, tgt, A->am(em->underlying[f], g));
        if (e < 0) return;
        mor[f * Cb.n_mor() + g] = e;
      }
    }
    std::vector<MorId> psi(ne * nc * nc), unit_u(ne);
    for (int x = 0; x < ne; ++x) {
      ObjId carrier = em->modules[x].carrier;
      for (ObjId q = 0; q < nc; ++q)
        for (ObjId q2 = 0; q2 < nc; ++q2) {
          int src = obj[slot(x, C.ten(q, q2))];
          int tgt = obj[slot(obj[slot(x, q)], q2)];
          int e = em->find_morphism(src, tgt, A->psi_at(carrier, q, q2));
          if (e < 0) return;
          psi[(x * nc + q) * nc + q2] = e;
        }
      int e = em->find_morphism(x, obj[slot(x, C.unit)], A->unit_u[carrier]);
      if (e < 0) return;
      unit_u[x] = e;
    }
    MonoidalAction tilde;
    tilde.C = A->C;
    tilde.M = em->base;
    tilde.act = Bifunctor{em->base, A->C->base, em->base, std::move(obj),
                          std::move(mor)};
    tilde.psi = std::move(psi);
    tilde.unit_u = std::move(unit_u);
    tilde.strict = false;
    if (!check_action(tilde).ok()) return;
    if (!check_strict_lift(tilde, *em, *A).ok()) return;
    out.push_back(LiftedAction{std::move(tilde), em, A});
  });
  return out;
}

BijectionOutcome run_bijection(ActionPtr A, const Monad& T, EnumCaps caps) {
  BijectionOutcome res;
  EMPtr em = em_category(T, caps.em_mor_cap);
  auto laws = enumerate_laws(A, T, caps);
  auto lifts = enumerate_strict_lifts(A, T, caps);
  res.law_count = laws.size();
  res.lift_count = lifts.size();
  res.counts_equal = laws.size() == lifts.size();

  res.law_roundtrip_ok = true;
  res.cross_match_ok = true;
  std::vector<bool> hit(lifts.size(), false);
  for (const auto& l : laws) {
    LiftedAction up = lift_from_law(l, em);
    if (!(law_from_lift(up) == l)) res.law_roundtrip_ok = false;
    bool found = false;
    for (size_t i = 0; i < lifts.size(); ++i) {
      if (up == lifts[i]) {
        if (hit[i]) res.cross_match_ok = false;  // not injective
        hit[i] = true;
        found = true;
        break;
      }
    }
    if (!found) res.cross_match_ok = false;
  }
  if (res.counts_equal)
    for (bool h : hit)
      if (!h) res.cross_match_ok = false;

  res.lift_roundtrip_ok = true;
  for (const auto& L : lifts) {
    DistributiveLaw down = law_from_lift(L);
    if (!check_distlaw(down).ok()) {
      res.lift_roundtrip_ok = false;
      continue;
    }
    if (!(lift_from_law(down, L.em) == L)) res.lift_roundtrip_ok = false;
  }
  return res;
}

}  // namespace catlift
