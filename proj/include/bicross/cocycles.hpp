#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bicross/matched_pair.hpp"
#include "bicross/report.hpp"
#include "bicross/roots.hpp"
#include "bicross/smith.hpp"

namespace bicross {

inline int mod_exp(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// sigma_g(x,y): a G-indexed family of normalized 2-cochains on F, stored as
// exponents of zeta_N.
struct SigmaTable {
  int nG = 0, nF = 0, conductor = 1;
  std::vector<int> e;

  static SigmaTable trivial(int nG, int nF, int N) {
    SigmaTable s;
    s.nG = nG;
    s.nF = nF;
    s.conductor = N;
    s.e.assign(static_cast<size_t>(nG) * nF * nF, 0);
    return s;
  }
  int idx(int g, int x, int y) const { return (g * nF + x) * nF + y; }
  int exp(int g, int x, int y) const { return e[idx(g, x, y)]; }
  void set(int g, int x, int y, long long v) { e[idx(g, x, y)] = mod_exp(v, conductor); }
  RootOfUnity val(int g, int x, int y) const {
    return RootOfUnity::make(conductor, exp(g, x, y));
  }
  bool shape_ok(const MatchedPair& mp) const {
    return nG == mp.nG() && nF == mp.nF() && conductor >= 1 &&
           e.size() == static_cast<size_t>(nG) * nF * nF;
  }
  friend bool operator==(const SigmaTable& a, const SigmaTable& b) {
    return a.nG == b.nG && a.nF == b.nF && a.conductor == b.conductor && a.e == b.e;
  }
};

// tau_x(g,h): an F-indexed family of normalized 2-cochains on G.
struct TauTable {
  int nF = 0, nG = 0, conductor = 1;
  std::vector<int> e;

  static TauTable trivial(int nF, int nG, int N) {
    TauTable t;
    t.nF = nF;
    t.nG = nG;
    t.conductor = N;
    t.e.assign(static_cast<size_t>(nF) * nG * nG, 0);
    return t;
  }
  int idx(int x, int g, int h) const { return (x * nG + g) * nG + h; }
  int exp(int x, int g, int h) const { return e[idx(x, g, h)]; }
  void set(int x, int g, int h, long long v) { e[idx(x, g, h)] = mod_exp(v, conductor); }
  RootOfUnity val(int x, int g, int h) const {
    return RootOfUnity::make(conductor, exp(x, g, h));
  }
  bool shape_ok(const MatchedPair& mp) const {
    return nG == mp.nG() && nF == mp.nF() && conductor >= 1 &&
           e.size() == static_cast<size_t>(nF) * nG * nG;
  }
  friend bool operator==(const TauTable& a, const TauTable& b) {
    return a.nF == b.nF && a.nG == b.nG && a.conductor == b.conductor && a.e == b.e;
  }
};

// Gauge map nu(g,x) (also reused as the coboundary family f_g(x)).
struct NuTable {
  int nG = 0, nF = 0, conductor = 1;
  std::vector<int> e;

  static NuTable trivial(int nG, int nF, int N) {
    NuTable v;
    v.nG = nG;
    v.nF = nF;
    v.conductor = N;
    v.e.assign(static_cast<size_t>(nG) * nF, 0);
    return v;
  }
  int idx(int g, int x) const { return g * nF + x; }
  int exp(int g, int x) const { return e[idx(g, x)]; }
  void set(int g, int x, long long v) { e[idx(g, x)] = mod_exp(v, conductor); }
  RootOfUnity val(int g, int x) const {
    return RootOfUnity::make(conductor, exp(g, x));
  }
};

inline ValidationReport validate_nu(const NuTable& nu, const MatchedPair& mp) {
  ValidationReport rep;
  if (nu.nG != mp.nG() || nu.nF != mp.nF() ||
      nu.e.size() != static_cast<size_t>(nu.nG) * nu.nF) {
    rep.add(ErrorCode::BadTable, "gauge table shape");
    return rep;
  }
  for (int g = 0; g < nu.nG; ++g)
    if (nu.exp(g, 0) != 0)
      rep.add(ErrorCode::NormalizationFails, witness("table", "nu", "g", g, "x", 0));
  for (int x = 0; x < nu.nF; ++x)
    if (nu.exp(0, x) != 0)
      rep.add(ErrorCode::NormalizationFails, witness("table", "nu", "g", 0, "x", x));
  return rep;
}

// ---------------------------------------------------------------------------
// Single-source linear relations. Every defining identity of (sigma, tau) is
// a Z-linear relation among table exponents mod N. The enumerators below feed
// both the numeric validators and the exact linear-system solvers, so the two
// can never drift apart.

struct LinTerm {
  int var;
  int coef;
};
using LinRel = std::vector<LinTerm>;

// Combined variable space: sigma entries first, then tau entries.
struct PairVars {
  int nG = 0, nF = 0;

  explicit PairVars(const MatchedPair& mp) : nG(mp.nG()), nF(mp.nF()) {}
  int sigma(int g, int x, int y) const { return (g * nF + x) * nF + y; }
  int tau(int x, int g, int h) const { return nG * nF * nF + (x * nG + g) * nG + h; }
  int sigma_count() const { return nG * nF * nF; }
  int tau_count() const { return nF * nG * nG; }
  int total() const { return sigma_count() + tau_count(); }

  int exp_of(int var, const SigmaTable& s, const TauTable& t) const {
    return var < sigma_count() ? s.e[var] : t.e[var - sigma_count()];
  }
};

inline int eval_rel(const LinRel& rel, const PairVars& v, const SigmaTable& s,
                    const TauTable& t) {
  long long acc = 0;
  for (const auto& term : rel) acc += static_cast<long long>(term.coef) * v.exp_of(term.var, s, t);
  return mod_exp(acc, s.conductor);
}

// emit(code, relation, witness_builder) for every identity sigma must satisfy:
// per-slice normalization, triviality of the identity slice, and the twisted
// 2-cocycle identity sigma_{g◁x}(y,z)·sigma_g(x,yz) = sigma_g(xy,z)·sigma_g(x,y).
template <class Emit>
void for_each_sigma_relation(const MatchedPair& mp, Emit&& emit) {
  PairVars v(mp);
  const int nG = mp.nG(), nF = mp.nF();
  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x) {
      emit(ErrorCode::NormalizationFails, LinRel{{v.sigma(g, x, 0), 1}},
           [=] { return witness("table", "sigma", "g", g, "x", x, "y", 0); });
      emit(ErrorCode::NormalizationFails, LinRel{{v.sigma(g, 0, x), 1}},
           [=] { return witness("table", "sigma", "g", g, "x", 0, "y", x); });
    }
  for (int x = 0; x < nF; ++x)
    for (int y = 0; y < nF; ++y)
      emit(ErrorCode::NormalizationFails, LinRel{{v.sigma(0, x, y), 1}},
           [=] { return witness("table", "sigma_1", "x", x, "y", y); });
  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x)
      for (int y = 0; y < nF; ++y)
        for (int z = 0; z < nF; ++z) {
          LinRel rel{{v.sigma(mp.act_g(g, x), y, z), 1},
                     {v.sigma(g, x, mp.F.mul(y, z)), 1},
                     {v.sigma(g, mp.F.mul(x, y), z), -1},
                     {v.sigma(g, x, y), -1}};
          emit(ErrorCode::CocycleFails, std::move(rel),
               [=] { return witness("table", "sigma", "g", g, "x", x, "y", y, "z", z); });
        }
}

// Same for tau: tau_x(gh,k)·tau_{k▷x}(g,h) = tau_x(h,k)·tau_x(g,hk).
template <class Emit>
void for_each_tau_relation(const MatchedPair& mp, Emit&& emit) {
  PairVars v(mp);
  const int nG = mp.nG(), nF = mp.nF();
  for (int x = 0; x < nF; ++x)
    for (int g = 0; g < nG; ++g) {
      emit(ErrorCode::NormalizationFails, LinRel{{v.tau(x, g, 0), 1}},
           [=] { return witness("table", "tau", "x", x, "g", g, "h", 0); });
      emit(ErrorCode::NormalizationFails, LinRel{{v.tau(x, 0, g), 1}},
           [=] { return witness("table", "tau", "x", x, "g", 0, "h", g); });
    }
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      emit(ErrorCode::NormalizationFails, LinRel{{v.tau(0, g, h), 1}},
           [=] { return witness("table", "tau_1", "g", g, "h", h); });
  for (int x = 0; x < nF; ++x)
    for (int g = 0; g < nG; ++g)
      for (int h = 0; h < nG; ++h)
        for (int k = 0; k < nG; ++k) {
          LinRel rel{{v.tau(x, mp.G.mul(g, h), k), 1},
                     {v.tau(mp.act_f(k, x), g, h), 1},
                     {v.tau(x, h, k), -1},
                     {v.tau(x, g, mp.G.mul(h, k)), -1}};
          emit(ErrorCode::CocycleFails, std::move(rel),
               [=] { return witness("table", "tau", "x", x, "g", g, "h", h, "k", k); });
        }
}

inline ValidationReport validate_sigma(const SigmaTable& s, const MatchedPair& mp,
                                       FailMode mode = FailMode::CountAll) {
  ValidationReport rep;
  if (!s.shape_ok(mp)) {
    rep.add(ErrorCode::BadTable, "sigma table shape");
    return rep;
  }
  TauTable unused = TauTable::trivial(mp.nF(), mp.nG(), s.conductor);
  PairVars v(mp);
  bool stop = false;
  for_each_sigma_relation(mp, [&](ErrorCode code, const LinRel& rel, auto&& wfn) {
    if (stop) return;
    if (eval_rel(rel, v, s, unused) != 0) {
      rep.add(code, wfn());
      if (mode == FailMode::FailFast) stop = true;
    }
  });
  if (!rep.ok()) return rep;
  // Derived consequences of the cocycle + normalization conditions, re-checked
  // exhaustively: sigma_{g◁x}(x^{-1},x) = sigma_g(x,x^{-1}) and its square-
  // transported variant. A failure here would mean the validator above and
  // the algebra disagree, so it is reported as an internal check.
  for (int g = 0; g < mp.nG(); ++g)
    for (int x = 0; x < mp.nF(); ++x) {
      int xi = mp.F.inv(x);
      if (s.exp(mp.act_g(g, x), xi, x) != s.exp(g, x, xi))
        rep.add(ErrorCode::InternalCheck, witness("law", "inv-pairing", "g", g, "x", x));
      int tx = mp.act_f(g, x);  // g▷x
      int lhs = s.exp(mp.G.inv(mp.act_g(g, x)), mp.F.inv(tx), tx);
      int rhs = s.exp(mp.G.inv(g), tx, mp.F.inv(tx));
      if (lhs != rhs)
        rep.add(ErrorCode::InternalCheck, witness("law", "inv-pairing-2", "g", g, "x", x));
    }
  return rep;
}

inline ValidationReport validate_tau(const TauTable& t, const MatchedPair& mp,
                                     FailMode mode = FailMode::CountAll) {
  ValidationReport rep;
  if (!t.shape_ok(mp)) {
    rep.add(ErrorCode::BadTable, "tau table shape");
    return rep;
  }
  SigmaTable unused = SigmaTable::trivial(mp.nG(), mp.nF(), t.conductor);
  PairVars v(mp);
  bool stop = false;
  for_each_tau_relation(mp, [&](ErrorCode code, const LinRel& rel, auto&& wfn) {
    if (stop) return;
    if (eval_rel(rel, v, unused, t) != 0) {
      rep.add(code, wfn());
      if (mode == FailMode::FailFast) stop = true;
    }
  });
  return rep;
}

inline ValidationReport validate_pair(const SigmaTable& s, const TauTable& t,
                                      const MatchedPair& mp) {
  ValidationReport rep = validate_sigma(s, mp);
  rep.add(validate_tau(t, mp));
  if (s.conductor != t.conductor)
    rep.add(ErrorCode::ConductorMismatch,
            witness("sigma", s.conductor, "tau", t.conductor));
  return rep;
}

// ---------------------------------------------------------------------------
// Gauge action. Theta(delta_g x) = nu(g,x)·delta_g x is an isomorphism from
// R(sigma,tau) onto R(sigma',tau') for the data returned here:
//   sigma'_g(x,y) = sigma_g(x,y)·nu(g,x)^{-1}·nu(g◁x,y)^{-1}·nu(g,xy)
//   tau'_x(g,h)   = tau_x(g,h)·nu(g,h▷x)·nu(h,x)·nu(gh,x)^{-1}
struct GaugePair {
  SigmaTable sigma;
  TauTable tau;
};

inline GaugePair apply_gauge(const MatchedPair& mp, const SigmaTable& s,
                             const TauTable& t, const NuTable& nu) {
  if (nu.conductor != s.conductor || nu.conductor != t.conductor)
    throw Error(ErrorCode::ConductorMismatch, "gauge conductor");
  GaugePair out{s, t};
  for (int g = 0; g < mp.nG(); ++g)
    for (int x = 0; x < mp.nF(); ++x)
      for (int y = 0; y < mp.nF(); ++y)
        out.sigma.set(g, x, y,
                      static_cast<long long>(s.exp(g, x, y)) - nu.exp(g, x) -
                          nu.exp(mp.act_g(g, x), y) + nu.exp(g, mp.F.mul(x, y)));
  for (int x = 0; x < mp.nF(); ++x)
    for (int g = 0; g < mp.nG(); ++g)
      for (int h = 0; h < mp.nG(); ++h)
        out.tau.set(x, g, h,
                    static_cast<long long>(t.exp(x, g, h)) + nu.exp(g, mp.act_f(h, x)) +
                        nu.exp(h, x) - nu.exp(mp.G.mul(g, h), x));
  return out;
}

// Coboundary test: find f: G×F -> mu_N with
//   sigma_g(x,y) = f(g,x)·f(g◁x,y)·f(g,xy)^{-1},
// i.e. the sigma-side horizontal differential of f. Exact solve over Z/N.
inline std::optional<NuTable> is_sigma_coboundary(const SigmaTable& s,
                                                  const MatchedPair& mp) {
  const int nG = mp.nG(), nF = mp.nF(), N = s.conductor;
  const int nvars = nG * nF;
  Matrix A;
  std::vector<Int> b;
  auto var = [&](int g, int x) { return g * nF + x; };
  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x)
      for (int y = 0; y < nF; ++y) {
        std::vector<Int> row(nvars, 0);
        row[var(g, x)] += 1;
        row[var(mp.act_g(g, x), y)] += 1;
        row[var(g, mp.F.mul(x, y))] -= 1;
        A.push_back(std::move(row));
        b.push_back(s.exp(g, x, y));
      }
  auto sol = solve_mod(A, b, N);
  if (!sol) return std::nullopt;
  NuTable f = NuTable::trivial(nG, nF, N);
  for (int i = 0; i < nvars; ++i) f.e[i] = static_cast<int>((*sol)[i]);
  return f;
}

}  // namespace bicross
