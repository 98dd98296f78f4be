#include "catlift/linear.hpp"

#include <numeric>
#include <sstream>

#include "catlift/errors.hpp"

namespace catlift {
namespace {

long long mod_pos(long long v, long long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

Scalar norm_frac(long long n, long long d) {
  if (d == 0) throw MalformedInput("scalar: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

}  // namespace

Field::Field(int p) : p_(p) {
  if (p < 0) throw MalformedInput("field: characteristic must be 0 or a prime");
  if (p > 0) {
    if (p < 2) throw MalformedInput("field: characteristic must be 0 or a prime");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw MalformedInput("field: characteristic must be prime");
  }
}

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return {v, 1};
  return {mod_pos(v, p_), 1};
}

Scalar Field::add(Scalar a, Scalar b) const {
  if (p_ != 0) return {mod_pos(a.num + b.num, p_), 1};
  return norm_frac(a.num * b.den + b.num * a.den, a.den * b.den);
}

Scalar Field::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Field::mul(Scalar a, Scalar b) const {
  if (p_ != 0) return {mod_pos(a.num * b.num, p_), 1};
  return norm_frac(a.num * b.num, a.den * b.den);
}

Scalar Field::neg(Scalar a) const {
  if (p_ != 0) return {mod_pos(-a.num, p_), 1};
  return {-a.num, a.den};
}

std::optional<Scalar> Field::inv(Scalar a) const {
  if (a.num == 0) return std::nullopt;
  if (p_ == 0) return norm_frac(a.den, a.num);
  // Fermat
  long long r = 1, base = mod_pos(a.num, p_), e = p_ - 2;
  while (e > 0) {
    if (e & 1) r = r * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Scalar{r, 1};
}

std::string Field::to_string(Scalar a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

LinMap lin_zero(int rows, int cols) {
  LinMap m;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<size_t>(rows) * cols, Scalar{0, 1});
  return m;
}

LinMap lin_identity(int n) {
  LinMap m = lin_zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = {1, 1};
  return m;
}

LinMap lin_from_ints(const Field& F, int rows, int cols,
                     const std::vector<long long>& entries) {
  if (static_cast<size_t>(rows) * cols != entries.size())
    throw MalformedInput("lin_from_ints: entry count mismatch");
  LinMap m = lin_zero(rows, cols);
  for (size_t i = 0; i < entries.size(); ++i) m.a[i] = F.from_int(entries[i]);
  return m;
}

LinMap lin_compose(const Field& F, const LinMap& g, const LinMap& f) {
  if (g.cols != f.rows)
    throw MalformedInput("lin_compose: " + std::to_string(g.rows) + "x" +
                         std::to_string(g.cols) + " after " +
                         std::to_string(f.rows) + "x" + std::to_string(f.cols));
  LinMap m = lin_zero(g.rows, f.cols);
  for (int i = 0; i < g.rows; ++i)
    for (int k = 0; k < g.cols; ++k) {
      const Scalar gik = g.at(i, k);
      if (F.is_zero(gik)) continue;
      for (int j = 0; j < f.cols; ++j)
        m.at(i, j) = F.add(m.at(i, j), F.mul(gik, f.at(k, j)));
    }
  return m;
}

LinMap lin_add(const Field& F, const LinMap& a, const LinMap& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw MalformedInput("lin_add: shape mismatch");
  LinMap m = a;
  for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = F.add(m.a[i], b.a[i]);
  return m;
}

LinMap lin_sub(const Field& F, const LinMap& a, const LinMap& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw MalformedInput("lin_sub: shape mismatch");
  LinMap m = a;
  for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = F.sub(m.a[i], b.a[i]);
  return m;
}

bool lin_eq(const LinMap& a, const LinMap& b) {
  return a.rows == b.rows && a.cols == b.cols && a.a == b.a;
}

LinMap kron(const Field& F, const LinMap& a, const LinMap& b) {
  LinMap m = lin_zero(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      const Scalar aij = a.at(i, j);
      if (F.is_zero(aij)) continue;
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l)
          m.at(i * b.rows + k, j * b.cols + l) = F.mul(aij, b.at(k, l));
    }
  return m;
}

LinMap factor_perm(const std::vector<int>& dims, const std::vector<int>& perm) {
  const int k = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != k)
    throw MalformedInput("factor_perm: arity mismatch");
  int total = 1;
  for (int d : dims) total *= d;
  LinMap m = lin_zero(total, total);
  std::vector<int> idx(k, 0);
  for (int col = 0; col < total; ++col) {
    int row = 0;
    for (int t = 0; t < k; ++t) row = row * dims[perm[t]] + idx[perm[t]];
    m.at(row, col) = {1, 1};
    for (int t = k - 1; t >= 0; --t) {
      if (++idx[t] < dims[t]) break;
      idx[t] = 0;
    }
  }
  return m;
}

std::optional<LinMap> try_inverse(const Field& F, const LinMap& m) {
  if (m.rows != m.cols) return std::nullopt;
  const int n = m.rows;
  LinMap a = m;
  LinMap inv = lin_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!F.is_zero(a.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const Scalar pinv = *F.inv(a.at(col, col));
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = F.mul(pinv, a.at(col, j));
      inv.at(col, j) = F.mul(pinv, inv.at(col, j));
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Scalar factor = a.at(r, col);
      if (F.is_zero(factor)) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = F.sub(a.at(r, j), F.mul(factor, a.at(col, j)));
        inv.at(r, j) = F.sub(inv.at(r, j), F.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

std::string lin_to_string(const Field& F, const LinMap& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) os << ' ';
      os << F.to_string(m.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace catlift
