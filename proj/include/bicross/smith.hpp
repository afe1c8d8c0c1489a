#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "bicross/report.hpp"

namespace bicross {

using Int = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<Int>>;

inline Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  Matrix out(r, std::vector<Int>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

inline std::vector<Int> mat_vec(const Matrix& a, const std::vector<Int>& v) {
  std::vector<Int> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

// U * M * V = D with U, V unimodular, D diagonal, diag entries nonnegative
// with d_1 | d_2 | ... Uinv/Vinv are exact inverses maintained alongside.
struct SmithDecomposition {
  Matrix U, V, Uinv, Vinv, D;
  std::vector<Int> diag;  // min(rows, cols) entries
};

inline SmithDecomposition smith_normal_form(Matrix A) {
  const std::size_t r = A.size();
  const std::size_t c = r == 0 ? 0 : A[0].size();
  SmithDecomposition s;
  s.U = identity_matrix(r);
  s.Uinv = identity_matrix(r);
  s.V = identity_matrix(c);
  s.Vinv = identity_matrix(c);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(A[i], A[j]);
    std::swap(s.U[i], s.U[j]);
    for (std::size_t t = 0; t < r; ++t) std::swap(s.Uinv[t][i], s.Uinv[t][j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t t = 0; t < r; ++t) std::swap(A[t][i], A[t][j]);
    for (std::size_t t = 0; t < c; ++t) std::swap(s.V[t][i], s.V[t][j]);
    std::swap(s.Vinv[i], s.Vinv[j]);
  };
  // row i += q * row j
  auto add_row = [&](std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t t = 0; t < c; ++t) A[i][t] += q * A[j][t];
    for (std::size_t t = 0; t < r; ++t) s.U[i][t] += q * s.U[j][t];
    for (std::size_t t = 0; t < r; ++t) s.Uinv[t][j] -= q * s.Uinv[t][i];
  };
  // col i += q * col j
  auto add_col = [&](std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t t = 0; t < r; ++t) A[t][i] += q * A[t][j];
    for (std::size_t t = 0; t < c; ++t) s.V[t][i] += q * s.V[t][j];
    for (std::size_t t = 0; t < c; ++t) s.Vinv[j][t] -= q * s.Vinv[i][t];
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t t = 0; t < c; ++t) A[i][t] = -A[i][t];
    for (std::size_t t = 0; t < r; ++t) s.U[i][t] = -s.U[i][t];
    for (std::size_t t = 0; t < r; ++t) s.Uinv[t][i] = -s.Uinv[t][i];
  };

  const std::size_t m = r < c ? r : c;
  for (std::size_t k = 0; k < m; ++k) {
    for (;;) {
      // minimal-abs-value pivot in the trailing submatrix
      std::size_t pi = r, pj = c;
      Int best = 0;
      for (std::size_t i = k; i < r; ++i)
        for (std::size_t j = k; j < c; ++j) {
          if (A[i][j] == 0) continue;
          Int v = abs(A[i][j]);
          if (pi == r || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi == r) {  // all-zero tail
        k = m;
        break;
      }
      swap_rows(k, pi);
      swap_cols(k, pj);
      if (A[k][k] < 0) negate_row(k);

      bool clean = true;
      for (std::size_t i = k + 1; i < r; ++i) {
        if (A[i][k] == 0) continue;
        Int q = A[i][k] / A[k][k];
        if (q != 0) add_row(i, k, -q);
        if (A[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < c; ++j) {
        if (A[k][j] == 0) continue;
        Int q = A[k][j] / A[k][k];
        if (q != 0) add_col(j, k, -q);
        if (A[k][j] != 0) clean = false;
      }
      if (!clean) continue;

      // make the pivot divide the whole trailing block
      bool fixed = true;
      for (std::size_t i = k + 1; i < r && fixed; ++i)
        for (std::size_t j = k + 1; j < c && fixed; ++j)
          if (A[i][j] % A[k][k] != 0) {
            add_row(k, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (k >= m) break;
  }

  s.D = A;
  s.diag.resize(m);
  for (std::size_t i = 0; i < m; ++i) s.diag[i] = A[i][i];
  return s;
}

inline Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return abs(a);
  }
  Int x1, y1;
  Int g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline std::optional<Int> mod_inverse(const Int& a, const Int& m) {
  Int x, y;
  Int g = egcd(a % m, m, x, y);
  if (g != 1) return std::nullopt;
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

// One solution of A x = b (mod m) with entries in [0, m), or nullopt.
inline std::optional<std::vector<Int>> solve_mod(const Matrix& A,
                                                 const std::vector<Int>& b, const Int& m) {
  const std::size_t r = A.size();
  const std::size_t c = r == 0 ? 0 : A[0].size();
  if (b.size() != r) throw Error(ErrorCode::BadParameters, "rhs size mismatch");
  SmithDecomposition s = smith_normal_form(A);
  std::vector<Int> rhs = mat_vec(s.U, b);
  std::vector<Int> y(c, 0);
  const std::size_t mm = r < c ? r : c;
  for (std::size_t i = 0; i < r; ++i) {
    Int d = i < mm ? s.diag[i] : Int(0);
    Int ci = rhs[i] % m;
    if (ci < 0) ci += m;
    if (d == 0) {
      if (ci != 0) return std::nullopt;
      continue;
    }
    Int g = gcd(d, m);
    if (ci % g != 0) return std::nullopt;
    Int md = m / g;
    auto inv = mod_inverse((d / g) % md, md);
    if (!inv) return std::nullopt;  // unreachable: d/g and m/g are coprime
    y[i] = (ci / g) % md * *inv % md;
  }
  std::vector<Int> x = mat_vec(s.V, y);
  for (auto& v : x) {
    v %= m;
    if (v < 0) v += m;
  }
  return x;
}

// Parameterization of the solutions of A x = 0 (mod m): every solution is
// x = V y mod m where y_i = step[i] * t_i with t_i in [0, count[i]).
struct ModKernel {
  Matrix V;
  std::vector<Int> step, count;
  Int modulus;

  Int total() const {
    Int t = 1;
    for (const auto& c : count) t *= c;
    return t;
  }
  std::vector<Int> solution(const std::vector<Int>& t) const {
    std::vector<Int> y(count.size());
    for (std::size_t i = 0; i < count.size(); ++i) y[i] = step[i] * t[i] % modulus;
    std::vector<Int> x = mat_vec(V, y);
    for (auto& v : x) {
      v %= modulus;
      if (v < 0) v += modulus;
    }
    return x;
  }
};

inline ModKernel kernel_mod(const Matrix& A, const Int& m) {
  const std::size_t r = A.size();
  const std::size_t c = r == 0 ? 0 : A[0].size();
  SmithDecomposition s = smith_normal_form(A);
  ModKernel k;
  k.V = s.V;
  k.modulus = m;
  k.step.resize(c);
  k.count.resize(c);
  const std::size_t mm = r < c ? r : c;
  for (std::size_t i = 0; i < c; ++i) {
    Int d = i < mm ? s.diag[i] : Int(0);
    Int g = gcd(d, m);  // gcd(0, m) = m: free variable
    k.step[i] = m / g;
    k.count[i] = g;
  }
  return k;
}

}  // namespace bicross
