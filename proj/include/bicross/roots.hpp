#pragma once

#include <numeric>
#include <string>

#include "bicross/report.hpp"

namespace bicross {

// Scalar in a fixed conductor-N system: (N, e) stands for exp(2*pi*i*e/N).
// All arithmetic is exact exponent arithmetic mod N. Operations between two
// values require equal conductors; use rescale_conductor to move between
// systems.
struct RootOfUnity {
  int conductor = 1;
  int exp = 0;

  static RootOfUnity make(int n, long long e) {
    if (n <= 0) throw Error(ErrorCode::BadParameters, "conductor must be positive");
    long long r = e % n;
    if (r < 0) r += n;
    return RootOfUnity{n, static_cast<int>(r)};
  }
  static RootOfUnity one(int n) { return make(n, 0); }

  bool is_one() const { return exp == 0; }
  int order() const { return conductor / std::gcd(conductor, exp == 0 ? conductor : exp); }

  RootOfUnity inverse() const { return make(conductor, -static_cast<long long>(exp)); }
  RootOfUnity pow(long long k) const {
    return make(conductor, static_cast<long long>(exp) % conductor * (k % conductor));
  }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    if (a.conductor != b.conductor)
      throw Error(ErrorCode::ConductorMismatch,
                  witness("lhs", a.conductor, "rhs", b.conductor));
    return make(a.conductor, static_cast<long long>(a.exp) + b.exp);
  }
  friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) {
    return a * b.inverse();
  }
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    if (a.conductor != b.conductor)
      throw Error(ErrorCode::ConductorMismatch,
                  witness("lhs", a.conductor, "rhs", b.conductor));
    return a.exp == b.exp;
  }
  friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }

  std::string str() const {
    if (exp == 0) return "1";
    return "zeta_" + std::to_string(conductor) + "^" + std::to_string(exp);
  }
};

// Re-express x in the conductor-M system. Allowed when the value exists there,
// i.e. when M*exp is divisible by the old conductor.
inline RootOfUnity rescale_conductor(const RootOfUnity& x, int m) {
  if (m <= 0) throw Error(ErrorCode::BadParameters, "conductor must be positive");
  if (m % x.conductor == 0)
    return RootOfUnity::make(m, static_cast<long long>(x.exp) * (m / x.conductor));
  long long num = static_cast<long long>(x.exp) * m;
  if (num % x.conductor != 0)
    throw Error(ErrorCode::NotDivisible,
                witness("value", x.str().c_str(), "target_conductor", m));
  return RootOfUnity::make(m, num / x.conductor);
}

// Exponent rescale helper for whole tables: maps exponent e mod n into the
// conductor-m system (m must be a multiple of n).
inline int rescale_exp(int e, int n, int m) {
  if (m % n != 0)
    throw Error(ErrorCode::NotDivisible, witness("from", n, "to", m));
  return e * (m / n);
}

inline int lcm_int(int a, int b) {
  return static_cast<int>(std::lcm(static_cast<long long>(a), static_cast<long long>(b)));
}

// Multiplicative order of e in Z/n (order of zeta_n^e).
inline int exponent_order(int n, int e) {
  int r = ((e % n) + n) % n;
  if (r == 0) return 1;
  return n / std::gcd(n, r);
}

}  // namespace bicross
