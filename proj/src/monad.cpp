#include "catlift/monad.hpp"

#include <map>

namespace catlift {

bool operator==(const Monad& a, const Monad& b) {
  if (a.unital != b.unital) return false;
  if (!(a.T == b.T) || !(a.mu == b.mu)) return false;
  return !a.unital || a.eta == b.eta;
}

Monad make_monad(Functor T, NatTrans mu, NatTrans eta) {
  if (!same_cat(T.dom, T.cod))
    throw MalformedInput("make_monad: T must be an endofunctor");
  Monad m;
  m.T = std::move(T);
  m.mu = std::move(mu);
  m.eta = std::move(eta);
  m.unital = true;
  return m;
}

Monad make_nonunital_monad(Functor T, NatTrans mu) {
  if (!same_cat(T.dom, T.cod))
    throw MalformedInput("make_nonunital_monad: T must be an endofunctor");
  Monad m;
  m.T = std::move(T);
  m.mu = std::move(mu);
  m.unital = false;
  return m;
}

Report check_monad(const Monad& T) {
  Report rep = check_functor(T.T);
  const FinCategory& M = *T.base();

  // mu must be T.T => T, eta must be Id => T; endpoint/naturality checks
  // come from the generic nat-trans checker against freshly composed sides.
  {
    NatTrans mu = T.mu;
    Functor TT = compose_functors(T.T, T.T);
    if (!(mu.src == TT) || !(mu.tgt == T.T))
      rep.add("monad.mu.shape", {}, "mu is not a transformation T T => T");
    rep.merge(check_nat_trans(mu));
  }
  if (T.unital) {
    if (!(T.eta.src == identity_functor(T.base())) || !(T.eta.tgt == T.T))
      rep.add("monad.eta.shape", {}, "eta is not a transformation Id => T");
    rep.merge(check_nat_trans(T.eta));
  }

  for (ObjId x = 0; x < M.n_obj(); ++x) {
    MorId lhs = try_compose(M, T.mu.at(x), T.t_mor(T.mu.at(x)));
    MorId rhs = try_compose(M, T.mu.at(x), T.mu.at(T.t_obj(x)));
    if (lhs != rhs || lhs == kNoMor)
      rep.add("monad.assoc", {{"object", M.obj_name(x)}},
              "mu . T mu != mu . mu T");
  }
  if (T.unital) {
    for (ObjId x = 0; x < M.n_obj(); ++x) {
      MorId tx = T.t_obj(x);
      if (try_compose(M, T.mu.at(x), T.eta.at(tx)) != M.identity[tx])
        rep.add("monad.unit.left", {{"object", M.obj_name(x)}},
                "mu . eta T != id");
      if (try_compose(M, T.mu.at(x), T.t_mor(T.eta.at(x))) != M.identity[tx])
        rep.add("monad.unit.right", {{"object", M.obj_name(x)}},
                "mu . T eta != id");
    }
  }
  return rep;
}

bool operator==(const TModule& a, const TModule& b) {
  return a.carrier == b.carrier && a.nu == b.nu;
}

Report check_tmodule(const Monad& T, const TModule& mod) {
  Report rep;
  const FinCategory& M = *T.base();
  ObjId m = mod.carrier;
  if (m < 0 || m >= M.n_obj()) {
    rep.add("tmodule.carrier", {}, "carrier out of range");
    return rep;
  }
  if (mod.nu < 0 || mod.nu >= M.n_mor() || M.mor_src[mod.nu] != T.t_obj(m) ||
      M.mor_tgt[mod.nu] != m) {
    rep.add("tmodule.nu.endpoints", {{"M", M.obj_name(m)}},
            "nu is not a morphism T M -> M");
    return rep;
  }
  MorId lhs = try_compose(M, mod.nu, T.t_mor(mod.nu));
  MorId rhs = try_compose(M, mod.nu, T.mu.at(m));
  if (lhs != rhs || lhs == kNoMor)
    rep.add("tmodule.assoc", {{"M", M.obj_name(m)}}, "nu . T nu != nu . mu");
  if (T.unital && try_compose(M, mod.nu, T.eta.at(m)) != M.identity[m])
    rep.add("tmodule.unit", {{"M", M.obj_name(m)}}, "nu . eta != id");
  return rep;
}

bool is_module_morphism(const Monad& T, const TModule& a, const TModule& b,
                        MorId f) {
  const FinCategory& M = *T.base();
  if (M.mor_src[f] != a.carrier || M.mor_tgt[f] != b.carrier) return false;
  MorId lhs = try_compose(M, b.nu, T.t_mor(f));
  MorId rhs = try_compose(M, f, a.nu);
  return lhs == rhs && lhs != kNoMor;
}

TModule free_module(const Monad& T, ObjId m) {
  if (m < 0 || m >= T.base()->n_obj())
    throw UnknownObject("free_module: object out of range");
  return TModule{T.t_obj(m), T.mu.at(m)};
}

int EMCategory::find_object(const TModule& mod) const {
  for (size_t i = 0; i < modules.size(); ++i)
    if (modules[i] == mod) return static_cast<int>(i);
  return -1;
}

int EMCategory::find_morphism(int em_src, int em_tgt, MorId under) const {
  for (MorId f = 0; f < base->n_mor(); ++f)
    if (base->mor_src[f] == em_src && base->mor_tgt[f] == em_tgt &&
        underlying[f] == under)
      return f;
  return -1;
}

EMPtr em_category(const Monad& T, int max_mor) {
  const FinCategory& M = *T.base();
  if (!T.unital)
    throw LawInvalid("em_category: nonunital monads have no module category here");
  if (M.n_mor() > max_mor)
    throw CapExceeded("em_category: base category has " +
                      std::to_string(M.n_mor()) + " morphisms, cap is " +
                      std::to_string(max_mor));

  auto em = std::make_shared<EMCategory>();
  em->monad = T;

  // Objects: every (carrier, nu) passing the module laws, in lex order.
  for (ObjId m = 0; m < M.n_obj(); ++m) {
    for (MorId nu : hom(M, T.t_obj(m), m)) {
      TModule cand{m, nu};
      if (check_tmodule(T, cand).ok()) em->modules.push_back(cand);
    }
  }
  const int nem = static_cast<int>(em->modules.size());

  FinCategory base;
  for (int i = 0; i < nem; ++i)
    base.obj_names.push_back(M.obj_name(em->modules[i].carrier) + "@" +
                             M.mor_name(em->modules[i].nu));

  // Morphisms: intertwiners between each ordered pair of modules.
  std::map<std::tuple<int, int, MorId>, MorId> index;
  for (int i = 0; i < nem; ++i) {
    for (int j = 0; j < nem; ++j) {
      for (MorId f :
           hom(M, em->modules[i].carrier, em->modules[j].carrier)) {
        if (!is_module_morphism(T, em->modules[i], em->modules[j], f)) continue;
        MorId id = static_cast<MorId>(base.mor_names.size());
        base.mor_names.push_back(M.mor_name(f) + "@" + std::to_string(i) + "_" +
                                 std::to_string(j));
        base.mor_src.push_back(i);
        base.mor_tgt.push_back(j);
        em->underlying.push_back(f);
        index[{i, j, f}] = id;
      }
    }
  }

  base.identity.resize(nem);
  for (int i = 0; i < nem; ++i) {
    auto it = index.find({i, i, M.identity[em->modules[i].carrier]});
    if (it == index.end())
      throw CatError("em_category: identity is not a module morphism");
    base.identity[i] = it->second;
  }

  const int nm = static_cast<int>(base.mor_names.size());
  base.comp.assign(nm * nm, kNoMor);
  for (MorId g = 0; g < nm; ++g) {
    for (MorId f = 0; f < nm; ++f) {
      if (base.mor_tgt[f] != base.mor_src[g]) continue;
      MorId under = try_compose(M, em->underlying[g], em->underlying[f]);
      auto it = index.find({base.mor_src[f], base.mor_tgt[g], under});
      if (under == kNoMor || it == index.end())
        throw CatError("em_category: module morphisms not closed under composition");
      base.comp[g * nm + f] = it->second;
    }
  }
  em->base = std::make_shared<const FinCategory>(std::move(base));

  // U forgets; faithfulness is by construction (one EM morphism per
  // underlying map and object pair) but verified cheaply below.
  {
    std::vector<ObjId> uo(nem);
    std::vector<MorId> um = em->underlying;
    for (int i = 0; i < nem; ++i) uo[i] = em->modules[i].carrier;
    em->U = Functor{em->base, T.base(), std::move(uo), std::move(um)};
  }
  // F sends m to the free module (T m, mu_m) and f to T f.
  {
    std::vector<ObjId> fo(M.n_obj());
    std::vector<MorId> fm(M.n_mor());
    for (ObjId m = 0; m < M.n_obj(); ++m) {
      int i = em->find_object(free_module(T, m));
      if (i < 0) throw CatError("em_category: free module not found");
      fo[m] = i;
    }
    for (MorId f = 0; f < M.n_mor(); ++f) {
      int e = em->find_morphism(fo[M.mor_src[f]], fo[M.mor_tgt[f]], T.t_mor(f));
      if (e < 0) throw CatError("em_category: T f is not a module morphism");
      fm[f] = e;
    }
    em->F = Functor{T.base(), em->base, std::move(fo), std::move(fm)};
  }
  // eps component at (M, nu) is nu itself, viewed upstairs.
  {
    std::vector<MorId> comp(nem);
    for (int i = 0; i < nem; ++i) {
      int src = em->F.on_obj(em->modules[i].carrier);
      int e = em->find_morphism(src, i, em->modules[i].nu);
      if (e < 0) throw CatError("em_category: nu is not a module morphism");
      comp[i] = e;
    }
    em->eps = NatTrans{compose_functors(em->F, em->U), identity_functor(em->base),
                       std::move(comp)};
  }

  // Construction-time verification: these hold by the theory, so a failure
  // here means the input monad was invalid.
  if (!(compose_functors(em->U, em->F) == T.T))
    throw CatError("em_category: U F differs from T");
  if (!check_nat_trans(em->eps).ok())
    throw CatError("em_category: eps is not natural");
  for (int i = 0; i < nem; ++i) {
    MorId tri = try_compose(M, em->U.on_mor(em->eps.at(i)),
                            T.eta.at(em->U.on_obj(i)));
    if (tri != M.identity[em->U.on_obj(i)])
      throw CatError("em_category: counit triangle fails");
  }
  for (int i = 0; i < nem; ++i)
    for (int j = 0; j < nem; ++j) {
      // faithfulness: distinct EM morphisms in a hom-set have distinct images
      std::vector<MorId> seen;
      for (MorId f = 0; f < em->base->n_mor(); ++f) {
        if (em->base->mor_src[f] != i || em->base->mor_tgt[f] != j) continue;
        for (MorId s : seen)
          if (s == em->underlying[f])
            throw CatError("em_category: U not faithful");
        seen.push_back(em->underlying[f]);
      }
    }
  return em;
}

}  // namespace catlift
