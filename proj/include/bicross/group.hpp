#pragma once

#include <numeric>
#include <vector>

#include "bicross/report.hpp"
#include "bicross/roots.hpp"

namespace bicross {

// Finite group as a dense multiplication table. Elements are indices
// 0..n-1 and the identity is always index 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(int n, std::vector<int> table) : n_(n), mul_(std::move(table)) {
    build_inverses();
  }

  int size() const { return n_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }

  int element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  // lcm of all element orders
  long long exponent() const {
    long long e = 1;
    for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long long>(element_order(a)));
    return e;
  }

  bool is_abelian() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  int pow(int a, long long k) const {
    long long m = element_order(a);
    k %= m;
    if (k < 0) k += m;
    int r = 0;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  const std::vector<int>& table() const { return mul_; }

 private:
  void build_inverses() {
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == 0 && mul(b, a) == 0) inv_[a] = b;
    for (int a = 0; a < n_; ++a)
      if (inv_[a] < 0) throw Error(ErrorCode::NotInvertible, witness("element", a));
  }

  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

// Validates a multiplication table (row-major n x n) and builds the group.
// Index 0 must be the identity.
inline FiniteGroup make_group(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorCode::BadTable, "empty table");
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw Error(ErrorCode::BadTable, witness("row_size", r.size(), "expected", n));
    for (int v : r) {
      if (v < 0 || v >= n) throw Error(ErrorCode::BadTable, witness("entry", v));
      flat.push_back(v);
    }
  }
  auto mul = [&](int a, int b) { return flat[a * n + b]; };
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw Error(ErrorCode::NoIdentity, witness("element", a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorCode::NotAssociative, witness("a", a, "b", b, "c", c));
  return FiniteGroup(n, std::move(flat));
}

inline FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  return make_group(rows);
}

// Index convention: (a, b) -> a*|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const int na = A.size(), nb = B.size(), n = na * nb;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          rows[a1 * nb + b1][a2 * nb + b2] = A.mul(a1, a2) * nb + B.mul(b1, b2);
  return make_group(rows);
}

// Abelian group presented by invariant factors d_1 | d_2 | ... (each > 1 for
// a canonical presentation; trivial group = empty list). Elements are
// exponent vectors, addressed either as vectors or as mixed-radix indices.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    size_ = 1;
    for (int d : factors_) {
      if (d <= 0) throw Error(ErrorCode::BadParameters, witness("factor", d));
      size_ *= d;
    }
  }

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int size() const { return size_; }

  std::vector<int> normalize(std::vector<int> v) const {
    for (int i = 0; i < rank(); ++i) {
      v[i] %= factors_[i];
      if (v[i] < 0) v[i] += factors_[i];
    }
    return v;
  }
  std::vector<int> zero() const { return std::vector<int>(rank(), 0); }
  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> r(rank());
    for (int i = 0; i < rank(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
    return r;
  }
  std::vector<int> neg(const std::vector<int>& a) const {
    std::vector<int> r(rank());
    for (int i = 0; i < rank(); ++i) r[i] = (factors_[i] - a[i]) % factors_[i];
    return r;
  }

  int index_of(const std::vector<int>& v) const {
    int idx = 0;
    for (int i = 0; i < rank(); ++i) idx = idx * factors_[i] + v[i];
    return idx;
  }
  std::vector<int> element(int idx) const {
    std::vector<int> v(rank());
    for (int i = rank() - 1; i >= 0; --i) {
      v[i] = idx % factors_[i];
      idx /= factors_[i];
    }
    return v;
  }

  int element_order(const std::vector<int>& v) const {
    long long o = 1;
    for (int i = 0; i < rank(); ++i)
      o = std::lcm(o, static_cast<long long>(factors_[i] / std::gcd(factors_[i], v[i])));
    return static_cast<int>(o);
  }

  // Dense multiplication table view (identity = index 0 since zero vector
  // maps to index 0).
  FiniteGroup to_group() const {
    std::vector<std::vector<int>> rows(size_, std::vector<int>(size_));
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j)
        rows[i][j] = index_of(add(element(i), element(j)));
    return make_group(rows);
  }

 private:
  std::vector<int> factors_;
  int size_ = 1;
};

// Character of an AbelianGroup with values in mu_N: on the i-th invariant
// factor generator it takes the value zeta_N^{(N/d_i) * exps[i]}. Requires
// d_i | N for every factor.
struct Character {
  int conductor = 1;
  std::vector<int> factors;  // copy of the group's invariant factors
  std::vector<int> exps;     // exps[i] mod factors[i]

  static Character trivial(const AbelianGroup& g, int n) {
    Character c;
    c.conductor = n;
    c.factors = g.factors();
    c.exps.assign(g.rank(), 0);
    c.check();
    return c;
  }
  static Character make(const AbelianGroup& g, int n, std::vector<int> exps) {
    Character c;
    c.conductor = n;
    c.factors = g.factors();
    c.exps = std::move(exps);
    for (int i = 0; i < g.rank(); ++i) {
      c.exps[i] %= c.factors[i];
      if (c.exps[i] < 0) c.exps[i] += c.factors[i];
    }
    c.check();
    return c;
  }

  void check() const {
    if (factors.size() != exps.size())
      throw Error(ErrorCode::CharacterIllDefined, "rank mismatch");
    for (int d : factors)
      if (d == 0 || conductor % d != 0)
        throw Error(ErrorCode::CharacterIllDefined,
                    witness("factor", d, "conductor", conductor));
  }

  RootOfUnity eval(const std::vector<int>& v) const {
    long long e = 0;
    for (size_t i = 0; i < exps.size(); ++i)
      e += static_cast<long long>(conductor / factors[i]) * exps[i] % conductor * v[i];
    return RootOfUnity::make(conductor, e);
  }

  friend Character operator*(const Character& a, const Character& b) {
    if (a.conductor != b.conductor || a.factors != b.factors)
      throw Error(ErrorCode::ParentMismatch, "character product");
    Character c = a;
    for (size_t i = 0; i < c.exps.size(); ++i)
      c.exps[i] = (c.exps[i] + b.exps[i]) % c.factors[i];
    return c;
  }
  Character inverse() const {
    Character c = *this;
    for (size_t i = 0; i < c.exps.size(); ++i)
      c.exps[i] = (c.factors[i] - c.exps[i]) % c.factors[i];
    return c;
  }
  bool is_trivial() const {
    for (int e : exps)
      if (e != 0) return false;
    return true;
  }
  friend bool operator==(const Character& a, const Character& b) {
    return a.conductor == b.conductor && a.factors == b.factors && a.exps == b.exps;
  }
};

}  // namespace bicross
