#include "doctest.h"

#include "catlift/hopf.hpp"

using namespace catlift;

TEST_CASE("the built-in instance satisfies every structure axiom") {
  LinearBundle b = bundle_f3();
  CHECK(b.field.characteristic() == 3);
  CHECK(check_bialgebra(b.field, b.B).ok());
  CHECK(check_module_algebra(b.field, b.B, b.A).ok());
  CHECK(check_amodule(b.field, b.A, b.M).ok());
  CHECK(check_comodule(b.field, b.B, b.Q).ok());
  CHECK(check_linear_bundle(b).ok());
}

TEST_CASE("canonical law entries for the built-in instance") {
  LinearBundle b = bundle_f3();
  LinMap l = canonical_law(b.field, b.B, b.A, b.M.dim, b.Q);
  CHECK(l.rows == 8);
  CHECK(l.cols == 8);
  // group-like q: a (x) m (x) q |-> (q |> a) (x) m (x) q. With q = g and
  // a = x the action gives 2x, so the (x,m,g) column holds 2 at (x,m,g).
  int col = (1 * 2 + 0) * 2 + 1;  // a = x, m = e_0, q = g
  CHECK(l.at(col, col) == b.field.from_int(2));
  int col0 = (1 * 2 + 0) * 2 + 0;  // q = e: identity column
  CHECK(l.at(col0, col0) == b.field.one());
  CHECK(check_linear_distlaw(b.field, b.B, b.A, b.M, b.Q, l).ok());
}

TEST_CASE("identity matrix is not a law for the twisted action") {
  LinearBundle b = bundle_f3();
  Report r =
      check_linear_distlaw(b.field, b.B, b.A, b.M, b.Q, lin_identity(8));
  CHECK_FALSE(r.ok());
}

TEST_CASE("induced monad identities hold for the built-in instance") {
  LinearBundle b = bundle_f3();
  Report r = check_lifted_monad(b.field, b.B, b.A, b.M);
  CHECK(r.ok());
}

TEST_CASE("trivial and tensor comodules") {
  LinearBundle b = bundle_f3();
  Comodule triv = trivial_comodule(b.field, b.B);
  CHECK(check_comodule(b.field, b.B, triv).ok());
  Comodule qq = tensor_comodule(b.field, b.B, b.Q, b.Q);
  CHECK(qq.dim == 4);
  CHECK(check_comodule(b.field, b.B, qq).ok());
}

TEST_CASE("single entry corruptions break the right axiom groups") {
  LinearBundle b = bundle_f3();
  {
    Bialgebra bad = b.B;
    bad.comul.at(0, 0) = b.field.from_int(2);
    CHECK_FALSE(check_bialgebra(b.field, bad).ok());
  }
  {
    Bialgebra bad = b.B;
    bad.counit.at(0, 1) = b.field.zero();
    Report r = check_bialgebra(b.field, bad);
    CHECK(r.has("bialg.counit.left"));
  }
  {
    ModuleAlgebra bad = b.A;
    // g |> x picks up a constant term, breaking g |> (x x) = (g|>x)(g|>x)
    bad.act.at(0, 3) = b.field.one();
    CHECK_FALSE(check_module_algebra(b.field, b.B, bad).ok());
  }
  {
    AModule bad = b.M;
    bad.act.at(0, 0) = b.field.zero();
    CHECK_FALSE(check_amodule(b.field, b.A, bad).ok());
  }
  {
    Comodule bad = b.Q;
    bad.rho.at(3, 1) = b.field.from_int(2);
    CHECK_FALSE(check_comodule(b.field, b.B, bad).ok());
  }
}

TEST_CASE("a corrupted law matrix is rejected") {
  LinearBundle b = bundle_f3();
  LinMap l = canonical_law(b.field, b.B, b.A, b.M.dim, b.Q);
  l.at(5, 5) = b.field.add(l.at(5, 5), b.field.one());
  CHECK_FALSE(check_linear_distlaw(b.field, b.B, b.A, b.M, b.Q, l).ok());
}

TEST_CASE("random bundles are well formed and admit the canonical law") {
  for (std::uint64_t seed : {1ull, 2ull, 7ull, 40ull}) {
    LinearBundle b = random_bundle(seed);
    CAPTURE(b.name);
    CHECK(check_linear_bundle(b).ok());
    LinMap l = canonical_law(b.field, b.B, b.A, b.M.dim, b.Q);
    CHECK(check_linear_distlaw(b.field, b.B, b.A, b.M, b.Q, l).ok());
    CHECK(check_lifted_monad(b.field, b.B, b.A, b.M).ok());
  }
}

TEST_CASE("random bundles are deterministic in the seed") {
  LinearBundle a = random_bundle(11);
  LinearBundle b = random_bundle(11);
  CHECK(a.field.characteristic() == b.field.characteristic());
  CHECK(lin_eq(a.B.mult, b.B.mult));
  CHECK(lin_eq(a.A.act, b.A.act));
  CHECK(lin_eq(a.Q.rho, b.Q.rho));
}
