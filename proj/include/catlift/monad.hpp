#pragma once

#include "catlift/functor.hpp"

namespace catlift {

// Monad (T, mu, eta) on the category T.dom (== T.cod). eta may be absent
// (nonunital variant); everything downstream of modules requires it.
struct Monad {
  Functor T;
  NatTrans mu;   // T T => T
  NatTrans eta;  // Id => T; ignored when !unital
  bool unital = true;

  const CatPtr& base() const { return T.dom; }
  ObjId t_obj(ObjId x) const { return T.on_obj(x); }
  MorId t_mor(MorId f) const { return T.on_mor(f); }
};

bool operator==(const Monad& a, const Monad& b);

Monad make_monad(Functor T, NatTrans mu, NatTrans eta);
Monad make_nonunital_monad(Functor T, NatTrans mu);

// Endofunctor/naturality checks for the pieces plus associativity
// mu . T mu = mu . mu T and (when unital) both unit laws.
Report check_monad(const Monad& T);

// Module (M, nu: TM -> M) over a monad ("algebra" elsewhere; module is the
// better word here since tensoring makes them bimodule-like later).
struct TModule {
  ObjId carrier = 0;
  MorId nu = kNoMor;
};

bool operator==(const TModule& a, const TModule& b);

// nu . T nu = nu . mu_M and, for unital monads, nu . eta_M = id.
Report check_tmodule(const Monad& T, const TModule& mod);

// Is f: carrier(a) -> carrier(b) a module morphism nu_b . T f = f . nu_a?
bool is_module_morphism(const Monad& T, const TModule& a, const TModule& b,
                        MorId f);

TModule free_module(const Monad& T, ObjId m);

// Eilenberg-Moore category, tabulated: one object per module (enumerated in
// (carrier, nu) lexicographic order), one morphism per intertwining map.
// U forgets, F is the free functor, eps is the counit of F -| U.
struct EMCategory {
  CatPtr base;                    // the EM category itself
  Monad monad;                    // the inducing monad
  std::vector<TModule> modules;   // indexed by EM object
  std::vector<MorId> underlying;  // EM morphism -> morphism downstairs
  Functor U;                      // EM -> M
  Functor F;                      // M -> EM
  NatTrans eps;                   // F U => Id_EM

  int find_object(const TModule& mod) const;          // -1 when absent
  int find_morphism(int em_src, int em_tgt, MorId under) const;  // -1 when absent
};

using EMPtr = std::shared_ptr<const EMCategory>;

// Builds the EM category, verifying U F = T on the nose, faithfulness of U,
// module-morphism closure under composition and the counit triangle
// U(eps_Z) . eta_{UZ} = id. Requires a unital monad that passes check_monad.
// Throws CapExceeded when the base category has more than max_mor morphisms,
// since module-morphism enumeration scans hom-sets exhaustively.
EMPtr em_category(const Monad& T, int max_mor = 64);

}  // namespace catlift
