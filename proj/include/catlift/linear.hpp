#pragma once

#include <optional>
#include <string>
#include <vector>

namespace catlift {

// Exact scalar: a normalized fraction. Arithmetic mod a prime keeps den = 1
// and num in [0, p); rational arithmetic reduces by gcd with den > 0.
struct Scalar {
  long long num = 0;
  long long den = 1;
};

inline bool operator==(const Scalar& a, const Scalar& b) {
  return a.num == b.num && a.den == b.den;
}

// Z/p for prime p, or the rationals when p == 0. All LinMap operations take
// the field explicitly so matrices stay plain data.
class Field {
 public:
  explicit Field(int p);
  int characteristic() const { return p_; }

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const;
  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  std::optional<Scalar> inv(Scalar a) const;
  bool is_zero(Scalar a) const { return a.num == 0; }
  bool eq(Scalar a, Scalar b) const { return a == b; }
  std::string to_string(Scalar a) const;

 private:
  int p_;
};

// Dense row-major matrix; a map V_cols -> V_rows between based spaces.
struct LinMap {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;

  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
};

LinMap lin_zero(int rows, int cols);
LinMap lin_identity(int n);
// Entries given row-major as integers, reduced into the field.
LinMap lin_from_ints(const Field& F, int rows, int cols,
                     const std::vector<long long>& entries);

LinMap lin_compose(const Field& F, const LinMap& g, const LinMap& f);  // g . f
LinMap lin_add(const Field& F, const LinMap& a, const LinMap& b);
LinMap lin_sub(const Field& F, const LinMap& a, const LinMap& b);
bool lin_eq(const LinMap& a, const LinMap& b);

// Kronecker product; basis of V (x) W indexed by i * dim W + j.
LinMap kron(const Field& F, const LinMap& a, const LinMap& b);

// Permutation of tensor factors: input factors have the given dims; output
// factor t is input factor perm[t]. Rows/cols index flattened tuples.
LinMap factor_perm(const std::vector<int>& dims, const std::vector<int>& perm);

std::optional<LinMap> try_inverse(const Field& F, const LinMap& m);

std::string lin_to_string(const Field& F, const LinMap& m);

}  // namespace catlift
