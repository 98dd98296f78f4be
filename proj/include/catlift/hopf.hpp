#pragma once

#include <cstdint>

#include "catlift/linear.hpp"
#include "catlift/report.hpp"

namespace catlift {

// Bialgebra with all structure maps tabulated: mult dim x dim^2,
// unit dim x 1, comul dim^2 x dim, counit 1 x dim.
struct Bialgebra {
  int dim = 0;
  LinMap mult;
  LinMap unit;
  LinMap comul;
  LinMap counit;
};

// Algebra and coalgebra axioms plus the four compatibility squares.
Report check_bialgebra(const Field& F, const Bialgebra& B);

// Right B-comodule: rho: V -> V (x) B, (dim * B.dim) x dim.
struct Comodule {
  int dim = 0;
  LinMap rho;
};

Report check_comodule(const Field& F, const Bialgebra& B, const Comodule& Q);

// One-dimensional comodule with coaction 1 |-> 1 (x) unit.
Comodule trivial_comodule(const Field& F, const Bialgebra& B);

// Q (x) Q' with q (x) q' |-> sum q0 (x) q'0 (x) q1 q'1.
Comodule tensor_comodule(const Field& F, const Bialgebra& B, const Comodule& Q,
                         const Comodule& Q2);

// Left B-module algebra: an algebra with act: B (x) A -> A satisfying
// b |> (a a') = sum (b1 |> a)(b2 |> a') and b |> 1 = counit(b) 1.
struct ModuleAlgebra {
  int dim = 0;
  LinMap mult;  // dim x dim^2
  LinMap unit;  // dim x 1
  LinMap act;   // dim x (B.dim * dim)
};

Report check_module_algebra(const Field& F, const Bialgebra& B,
                            const ModuleAlgebra& A);

// Left A-module: act: A (x) M -> M, dim x (A.dim * dim).
struct AModule {
  int dim = 0;
  LinMap act;
};

Report check_amodule(const Field& F, const ModuleAlgebra& A, const AModule& M);

// a (x) m (x) q |-> sum (q1 |> a) (x) m (x) q0 on A (x) M (x) Q, with the
// middle factor given only by its dimension.
LinMap canonical_law(const Field& F, const Bialgebra& B, const ModuleAlgebra& A,
                     int m_dim, const Comodule& Q);

// The A-action on M (x) Q induced by a law matrix: (act_M (x) Q) . l.
LinMap lifted_action_map(const Field& F, const ModuleAlgebra& A, const AModule& M,
                         const Comodule& Q, const LinMap& l);

// Checks a square matrix on A (x) M (x) Q as the (M, Q) member of a
// distributive-law family whose other members are forced: carriers other
// than M use the extension of l's core (naturality in the middle factor),
// the component at Q (x) Q and at the trivial comodule use the canonical
// formula. Verifies middle-naturality, the multiplication and unit squares,
// the tensor compatibility, the trivial-comodule member, and that the
// induced action on M (x) Q is a module.
Report check_linear_distlaw(const Field& F, const Bialgebra& B,
                            const ModuleAlgebra& A, const AModule& M,
                            const Comodule& Q, const LinMap& l);

// The monad M |-> M (x) B on A-modules induced by B as a monoid acting
// through the canonical law: its action is a module structure, its
// multiplication id_M (x) mult_B is a module map, and the mixed relation
// a |> (n <| h) = sum [(h2 |> a) |> n] <| h1 holds.
Report check_lifted_monad(const Field& F, const Bialgebra& B,
                          const ModuleAlgebra& A, const AModule& M);

struct LinearBundle {
  std::string name;
  Field field;
  Bialgebra B;
  ModuleAlgebra A;
  AModule M;
  Comodule Q;
};

// All four structure checks in one report.
Report check_linear_bundle(const LinearBundle& bundle);

// Group algebra of Z/2 over F_3 acting on F_3[x]/(x^2) by x |-> -x;
// M the regular module, Q the bialgebra with its own comultiplication.
LinearBundle bundle_f3();

// Deterministic pseudo-random well-formed bundle: monoid algebras with
// grouplike bases, action through a random monoid map into algebra
// endomorphisms, graded comodule, then a random basis transport of every
// structure map. Characteristic in {2, 3, 5}, dimensions at most 3.
LinearBundle random_bundle(std::uint64_t seed);

}  // namespace catlift
