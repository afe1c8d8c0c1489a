#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicross/report.hpp"
#include "bicross/roots.hpp"

namespace bicross {

namespace detail {
// Exact division of integer polynomials (ascending coefficients), divisor
// monic-leading after sign fix; remainder must vanish.
inline std::vector<long long> poly_div_exact(std::vector<long long> num,
                                             const std::vector<long long>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  std::vector<long long> d = den;
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw Error(ErrorCode::BadParameters, "division by zero polynomial");
  if (num.empty()) return {0};
  std::vector<long long> q(num.size() - d.size() + 1, 0);
  for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(d.size()) - 1; --i) {
    long long lead = num[i];
    if (lead % d.back() != 0)
      throw Error(ErrorCode::InternalCheck, "non-exact polynomial division");
    long long f = lead / d.back();
    int shift = i - static_cast<int>(d.size()) + 1;
    q[shift] = f;
    for (std::size_t j = 0; j < d.size(); ++j) num[shift + j] -= f * d[j];
  }
  for (long long v : num)
    if (v != 0) throw Error(ErrorCode::InternalCheck, "non-exact polynomial division");
  return q;
}
}  // namespace detail

// Coefficients of the N-th cyclotomic polynomial, ascending degree.
inline std::vector<long long> cyclotomic_polynomial(int n) {
  if (n <= 0) throw Error(ErrorCode::BadParameters, witness("n", n));
  // x^n - 1 divided by the product of Phi_d for proper divisors d of n
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = detail::poly_div_exact(num, cyclotomic_polynomial(d));
  }
  return num;
}

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Element of Z[zeta_N]: integer coefficient vector of length phi(N) on the
// basis 1, zeta, ..., zeta^{phi(N)-1}, reduced modulo Phi_N. Exact equality
// of scalar expressions is coefficientwise equality here.
class CycInt {
 public:
  CycInt() : conductor_(1), c_(1, 0) {}
  explicit CycInt(int n) : conductor_(n), c_(euler_phi(n), 0) {
    if (n <= 0) throw Error(ErrorCode::BadParameters, witness("conductor", n));
  }

  static CycInt zero(int n) { return CycInt(n); }
  static CycInt integer(int n, long long v) {
    CycInt r(n);
    r.c_[0] = v;
    return r;
  }
  static CycInt one(int n) { return integer(n, 1); }
  static CycInt from_root(const RootOfUnity& z) {
    // x^e reduced mod Phi_N
    std::vector<long long> p(z.exp + 1, 0);
    p[z.exp] = 1;
    CycInt r(z.conductor);
    r.c_ = reduce(z.conductor, std::move(p));
    return r;
  }

  int conductor() const { return conductor_; }
  const std::vector<long long>& coeffs() const { return c_; }

  bool is_zero() const {
    for (long long v : c_)
      if (v != 0) return false;
    return true;
  }

  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    a.match(b);
    CycInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend CycInt operator-(const CycInt& a, const CycInt& b) {
    a.match(b);
    CycInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  CycInt operator-() const {
    CycInt r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    a.match(b);
    std::vector<long long> conv(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) conv[i + j] += a.c_[i] * b.c_[j];
    }
    CycInt r(a.conductor_);
    r.c_ = reduce(a.conductor_, std::move(conv));
    return r;
  }
  friend bool operator==(const CycInt& a, const CycInt& b) {
    a.match(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + "]@" + std::to_string(conductor_);
  }

 private:
  void match(const CycInt& other) const {
    if (conductor_ != other.conductor_)
      throw Error(ErrorCode::ConductorMismatch,
                  witness("lhs", conductor_, "rhs", other.conductor_));
  }

  static std::vector<long long> reduce(int n, std::vector<long long> p) {
    static thread_local std::vector<std::vector<long long>> cache;
    if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
    if (cache[n].empty()) cache[n] = cyclotomic_polynomial(n);
    const auto& phi = cache[n];
    const int deg = static_cast<int>(phi.size()) - 1;  // = euler_phi(n)
    if (static_cast<int>(p.size()) < deg) p.resize(deg, 0);
    for (int i = static_cast<int>(p.size()) - 1; i >= deg; --i) {
      long long f = p[i];  // phi is monic
      if (f == 0) continue;
      for (int j = 0; j <= deg; ++j) p[i - deg + j] -= f * phi[j];
    }
    p.resize(deg);
    return p;
  }

  int conductor_;
  std::vector<long long> c_;
};

}  // namespace bicross
