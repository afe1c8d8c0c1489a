#pragma once

#include <utility>
#include <vector>

#include "bicross/cocycles.hpp"
#include "bicross/matched_pair.hpp"
#include "bicross/report.hpp"

namespace bicross {

// Diagonal braiding coefficients: c(delta_g x (x) delta_h y) =
// Q^{x,y}_{g,h} delta_h y (x) delta_g x.
struct BraidingTable {
  int nG = 0, nF = 0, conductor = 1;
  std::vector<int> e;  // [g][h][x][y]

  static BraidingTable trivial(int nG, int nF, int N) {
    BraidingTable q;
    q.nG = nG;
    q.nF = nF;
    q.conductor = N;
    q.e.assign(static_cast<size_t>(nG) * nG * nF * nF, 0);
    return q;
  }
  int idx(int g, int h, int x, int y) const { return ((g * nG + h) * nF + x) * nF + y; }
  int exp(int g, int h, int x, int y) const { return e[idx(g, h, x, y)]; }
  void set(int g, int h, int x, int y, long long v) {
    e[idx(g, h, x, y)] = mod_exp(v, conductor);
  }
  RootOfUnity val(int g, int h, int x, int y) const {
    return RootOfUnity::make(conductor, exp(g, h, x, y));
  }
  bool shape_ok(const MatchedPair& mp) const {
    return nG == mp.nG() && nF == mp.nF() && conductor >= 1 &&
           e.size() == static_cast<size_t>(nG) * nG * nF * nF;
  }
  friend bool operator==(const BraidingTable& a, const BraidingTable& b) {
    return a.nG == b.nG && a.nF == b.nF && a.conductor == b.conductor && a.e == b.e;
  }
};

// The six-factor closed form of Q^{x,y}_{g,h}, appended as signed linear
// terms over the combined (sigma, tau) variable space. Single source for
// compute_q and for every linear system that mentions Q.
inline void append_q_terms(const MatchedPair& mp, const PairVars& v, int g, int h,
                           int x, int y, int sign, LinRel& out) {
  const int gx = mp.act_f(g, x);                   // g ▷ x
  const int gax = mp.act_g(g, x);                  // g ◁ x
  const int hh = mp.act_g(h, mp.F.inv(gx));        // h ◁ (g▷x)^{-1}
  const int yy = mp.act_f(mp.G.inv(gax), y);       // (g◁x)^{-1} ▷ y
  out.push_back({v.sigma(mp.G.mul(hh, g), x, yy), sign});
  out.push_back({v.sigma(hh, gx, y), -sign});
  out.push_back({v.sigma(g, x, yy), -sign});
  out.push_back({v.tau(mp.F.mul(x, yy), hh, g), sign});
  out.push_back({v.tau(yy, h, gax), -sign});
  out.push_back({v.tau(x, hh, g), -sign});
}

inline int q_exponent(const MatchedPair& mp, const SigmaTable& s, const TauTable& t,
                      int g, int h, int x, int y) {
  PairVars v(mp);
  LinRel rel;
  append_q_terms(mp, v, g, h, x, y, 1, rel);
  return eval_rel(rel, v, s, t);
}

inline ValidationReport check_q_normalization(const BraidingTable& q,
                                              const MatchedPair& mp) {
  ValidationReport rep;
  if (!q.shape_ok(mp)) {
    rep.add(ErrorCode::BadTable, "braiding table shape");
    return rep;
  }
  for (int g = 0; g < q.nG; ++g)
    for (int h = 0; h < q.nG; ++h)
      for (int x = 0; x < q.nF; ++x)
        for (int y = 0; y < q.nF; ++y)
          if ((g == 0 || h == 0 || x == 0 || y == 0) && q.exp(g, h, x, y) != 0)
            rep.add(ErrorCode::NormalizationFails,
                    witness("table", "Q", "g", g, "h", h, "x", x, "y", y));
  return rep;
}

inline BraidingTable compute_q(const MatchedPair& mp, const SigmaTable& s,
                               const TauTable& t) {
  if (s.conductor != t.conductor)
    throw Error(ErrorCode::ConductorMismatch,
                witness("sigma", s.conductor, "tau", t.conductor));
  BraidingTable q = BraidingTable::trivial(mp.nG(), mp.nF(), s.conductor);
  PairVars v(mp);
  for (int g = 0; g < q.nG; ++g)
    for (int h = 0; h < q.nG; ++h)
      for (int x = 0; x < q.nF; ++x)
        for (int y = 0; y < q.nF; ++y) {
          LinRel rel;
          append_q_terms(mp, v, g, h, x, y, 1, rel);
          q.e[q.idx(g, h, x, y)] = eval_rel(rel, v, s, t);
        }
  return q;
}

// The four scalar laws equivalent to m and Delta commuting with c.
inline Report check_q_multiplicativity(const BraidingTable& q, const MatchedPair& mp,
                                       FailMode mode = FailMode::CountAll) {
  Report rep;
  const int nG = mp.nG(), nF = mp.nF(), N = q.conductor;

  Checker my("mult-compat-y", mode);  // Q^{x,yz}_{g,s} = Q^{x,y}_{g,s} Q^{x,z}_{g,s◁y}
  for (int g = 0; g < nG; ++g)
    for (int s = 0; s < nG; ++s)
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF && my.keep_going(); ++y)
          for (int z = 0; z < nF; ++z) {
            long long lhs = q.exp(g, s, x, mp.F.mul(y, z));
            long long rhs = q.exp(g, s, x, y) + q.exp(g, mp.act_g(s, y), x, z);
            if (!my.expect(mod_exp(lhs - rhs, N) == 0, [&] {
                  return witness("g", g, "s", s, "x", x, "y", y, "z", z);
                }))
              break;
          }
  rep.add(my.finish());

  Checker mx("mult-compat-x", mode);  // Q^{xy,z}_{g,s} = Q^{x,z}_{g,s} Q^{y,z}_{g◁x,s}
  for (int g = 0; g < nG; ++g)
    for (int s = 0; s < nG; ++s)
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF && mx.keep_going(); ++y)
          for (int z = 0; z < nF; ++z) {
            long long lhs = q.exp(g, s, mp.F.mul(x, y), z);
            long long rhs = q.exp(g, s, x, z) + q.exp(mp.act_g(g, x), s, y, z);
            if (!mx.expect(mod_exp(lhs - rhs, N) == 0, [&] {
                  return witness("g", g, "s", s, "x", x, "y", y, "z", z);
                }))
              break;
          }
  rep.add(mx.finish());

  Checker dh("comult-compat-h", mode);  // Q^{x,y}_{g,ts} = Q^{x,s▷y}_{g,t} Q^{x,y}_{g,s}
  for (int g = 0; g < nG; ++g)
    for (int t = 0; t < nG && dh.keep_going(); ++t)
      for (int s = 0; s < nG; ++s)
        for (int x = 0; x < nF; ++x)
          for (int y = 0; y < nF; ++y) {
            long long lhs = q.exp(g, mp.G.mul(t, s), x, y);
            long long rhs = q.exp(g, t, x, mp.act_f(s, y)) + q.exp(g, s, x, y);
            if (!dh.expect(mod_exp(lhs - rhs, N) == 0, [&] {
                  return witness("g", g, "t", t, "s", s, "x", x, "y", y);
                }))
              break;
          }
  rep.add(dh.finish());

  Checker dg("comult-compat-g", mode);  // Q^{x,y}_{ts,g} = Q^{s▷x,y}_{t,g} Q^{x,y}_{s,g}
  for (int g = 0; g < nG; ++g)
    for (int t = 0; t < nG && dg.keep_going(); ++t)
      for (int s = 0; s < nG; ++s)
        for (int x = 0; x < nF; ++x)
          for (int y = 0; y < nF; ++y) {
            long long lhs = q.exp(mp.G.mul(t, s), g, x, y);
            long long rhs = q.exp(t, g, mp.act_f(s, x), y) + q.exp(s, g, x, y);
            if (!dg.expect(mod_exp(lhs - rhs, N) == 0, [&] {
                  return witness("g", g, "t", t, "s", s, "x", x, "y", y);
                }))
              break;
          }
  rep.add(dg.finish());

  return rep;
}

// ---------------------------------------------------------------------------
// The four compatibility conditions on (sigma, tau) directly, transcribed as
// displayed (each side keeps the factors that do not cancel between the two
// sides). emit(k, relation, witness_fn) with k in 1..4; a relation evaluating
// to 0 mod N means the condition holds at that tuple. Kept independent of
// append_q_terms on purpose: the two transcriptions cross-validate each other.
template <class Emit>
void for_each_braided_compat_relation(const MatchedPair& mp, Emit&& emit) {
  PairVars v(mp);
  const int nG = mp.nG(), nF = mp.nF();
  const FiniteGroup& F = mp.F;
  const FiniteGroup& G = mp.G;
  auto aG = [&](int g, int x) { return mp.act_g(g, x); };
  auto aF = [&](int g, int x) { return mp.act_f(g, x); };

  // (1): multiplicativity in y, expanded. Ranges (g,s,x,y,z).
  for (int g = 0; g < nG; ++g)
    for (int s = 0; s < nG; ++s)
      for (int x = 0; x < nF; ++x) {
        const int gx = aF(g, x), gax = aG(g, x);
        const int igx = F.inv(gx), ivgax = G.inv(gax);
        const int s1 = aG(s, igx);
        for (int y = 0; y < nF; ++y)
          for (int z = 0; z < nF; ++z) {
            const int yz = F.mul(y, z);
            const int wyz = aF(ivgax, yz), wy = aF(ivgax, y), wz = aF(ivgax, z);
            const int sy1 = aG(aG(s, y), igx);
            LinRel r{// left side
                     {v.sigma(G.mul(s1, g), x, wyz), 1},
                     {v.sigma(s1, gx, yz), -1},
                     {v.sigma(g, x, wyz), -1},
                     {v.tau(F.mul(x, wyz), s1, g), 1},
                     {v.tau(wyz, s, gax), -1},
                     // right side, negated
                     {v.sigma(G.mul(s1, g), x, wy), -1},
                     {v.sigma(s1, gx, y), 1},
                     {v.sigma(g, x, wy), 1},
                     {v.tau(F.mul(x, wy), s1, g), -1},
                     {v.tau(wy, s, gax), 1},
                     {v.sigma(G.mul(sy1, g), x, wz), -1},
                     {v.sigma(sy1, gx, z), 1},
                     {v.sigma(g, x, wz), 1},
                     {v.tau(F.mul(x, wz), sy1, g), -1},
                     {v.tau(wz, aG(s, y), gax), 1},
                     {v.tau(x, sy1, g), 1}};
            emit(1, std::move(r), [=] {
              return witness("g", g, "s", s, "x", x, "y", y, "z", z);
            });
          }
      }

  // (2): multiplicativity in x, expanded.
  for (int g = 0; g < nG; ++g)
    for (int s = 0; s < nG; ++s)
      for (int x = 0; x < nF; ++x) {
        const int gx = aF(g, x), gax = aG(g, x);
        const int igx = F.inv(gx), ivgax = G.inv(gax);
        const int s1 = aG(s, igx);
        for (int y = 0; y < nF; ++y) {
          const int xy = F.mul(x, y);
          const int gxy = aF(g, xy), gaxy = aG(g, xy);
          const int s2 = aG(s, F.inv(gxy)), ivgaxy = G.inv(gaxy);
          const int u = aF(gax, y);  // (g◁x)▷y
          const int s3 = aG(s, F.inv(u));
          for (int z = 0; z < nF; ++z) {
            const int wz1 = aF(ivgaxy, z);  // (g◁xy)^{-1}▷z
            const int wz2 = aF(ivgax, z);   // (g◁x)^{-1}▷z
            LinRel r{// left side
                     {v.sigma(G.mul(s2, g), xy, wz1), 1},
                     {v.sigma(s2, gxy, z), -1},
                     {v.sigma(g, xy, wz1), -1},
                     {v.tau(F.mul(xy, wz1), s2, g), 1},
                     {v.tau(xy, s2, g), -1},
                     // right side, negated
                     {v.sigma(G.mul(s1, g), x, wz2), -1},
                     {v.sigma(s1, gx, z), 1},
                     {v.sigma(g, x, wz2), 1},
                     {v.tau(F.mul(x, wz2), s1, g), -1},
                     {v.tau(wz2, s, gax), 1},
                     {v.tau(x, s1, g), 1},
                     {v.sigma(G.mul(s3, gax), y, wz1), -1},
                     {v.sigma(s3, u, z), 1},
                     {v.sigma(gax, y, wz1), 1},
                     {v.tau(F.mul(y, wz1), s3, gax), -1},
                     {v.tau(y, s3, gax), 1}};
            emit(2, std::move(r), [=] {
              return witness("g", g, "s", s, "x", x, "y", y, "z", z);
            });
          }
        }
      }

  // (3): comultiplicativity in the second G-index, expanded. Ranges (g,s,t,x,y).
  for (int g = 0; g < nG; ++g)
    for (int s = 0; s < nG; ++s)
      for (int t = 0; t < nG; ++t)
        for (int x = 0; x < nF; ++x) {
          const int gx = aF(g, x), gax = aG(g, x);
          const int igx = F.inv(gx), ivgax = G.inv(gax);
          const int ts = G.mul(t, s);
          const int ts1 = aG(ts, igx), t1 = aG(t, igx), s1 = aG(s, igx);
          for (int y = 0; y < nF; ++y) {
            const int wy = aF(ivgax, y);
            const int sy = aF(s, y);            // s▷y
            const int wsy = aF(ivgax, sy);      // (g◁x)^{-1}s▷y
            LinRel r{// left side
                     {v.sigma(G.mul(ts1, g), x, wy), 1},
                     {v.sigma(ts1, gx, y), -1},
                     {v.tau(F.mul(x, wy), ts1, g), 1},
                     {v.tau(wy, ts, gax), -1},
                     {v.tau(x, ts1, g), -1},
                     // right side, negated
                     {v.sigma(G.mul(t1, g), x, wsy), -1},
                     {v.sigma(t1, gx, sy), 1},
                     {v.sigma(g, x, wsy), 1},
                     {v.tau(F.mul(x, wsy), t1, g), -1},
                     {v.tau(wsy, t, gax), 1},
                     {v.tau(x, t1, g), 1},
                     {v.sigma(G.mul(s1, g), x, wy), -1},
                     {v.sigma(s1, gx, y), 1},
                     {v.tau(F.mul(x, wy), s1, g), -1},
                     {v.tau(wy, s, gax), 1},
                     {v.tau(x, s1, g), 1}};
            emit(3, std::move(r), [=] {
              return witness("g", g, "s", s, "t", t, "x", x, "y", y);
            });
          }
        }

  // (4): comultiplicativity in the first G-index, expanded.
  for (int g = 0; g < nG; ++g)
    for (int t = 0; t < nG; ++t)
      for (int s = 0; s < nG; ++s)
        for (int x = 0; x < nF; ++x) {
          const int gt = G.mul(g, t);
          const int gtx = aF(gt, x), gtax = aG(gt, x);
          const int s4 = aG(s, F.inv(gtx)), ivgtax = G.inv(gtax);
          const int tx = aF(t, x), tax = aG(t, x);
          const int gatx = aG(g, tx);  // g◁(t▷x)
          const int ivgatx = G.inv(gatx);
          const int s6 = aG(s, F.inv(tx)), ivtax = G.inv(tax);
          for (int y = 0; y < nF; ++y) {
            const int w1 = aF(ivgtax, y);  // (gt◁x)^{-1}▷y
            const int w2 = aF(ivgatx, y);  // (g◁(t▷x))^{-1}▷y
            const int w3 = aF(ivtax, y);   // (t◁x)^{-1}▷y
            LinRel r{// left side
                     {v.sigma(G.mul(s4, gt), x, w1), 1},
                     {v.sigma(gt, x, w1), -1},
                     {v.tau(F.mul(x, w1), s4, gt), 1},
                     {v.tau(w1, s, gtax), -1},
                     {v.tau(x, s4, gt), -1},
                     // right side, negated
                     {v.sigma(G.mul(s4, g), tx, w2), -1},
                     {v.sigma(g, tx, w2), 1},
                     {v.tau(F.mul(tx, w2), s4, g), -1},
                     {v.tau(w2, s, gatx), 1},
                     {v.tau(tx, s4, g), 1},
                     {v.sigma(G.mul(s6, t), x, w3), -1},
                     {v.sigma(s6, tx, y), 1},
                     {v.sigma(t, x, w3), 1},
                     {v.tau(F.mul(x, w3), s6, t), -1},
                     {v.tau(w3, s, tax), 1},
                     {v.tau(x, s6, t), 1}};
            emit(4, std::move(r), [=] {
              return witness("g", g, "s", s, "t", t, "x", x, "y", y);
            });
          }
        }
}

inline Report check_theorem_conditions(const MatchedPair& mp, const SigmaTable& s,
                                       const TauTable& t,
                                       FailMode mode = FailMode::CountAll) {
  PairVars v(mp);
  std::vector<Checker> cks;
  for (int k = 1; k <= 4; ++k)
    cks.emplace_back("braided-compat-" + std::to_string(k), mode);
  for_each_braided_compat_relation(mp, [&](int k, const LinRel& rel, auto&& wfn) {
    Checker& ck = cks[k - 1];
    if (!ck.keep_going()) return;
    ck.expect(eval_rel(rel, v, s, t) == 0, wfn);
  });
  Report rep;
  for (auto& ck : cks) rep.add(ck.finish());
  return rep;
}

// Scalar compatibility between a given braiding table and (sigma, tau): the
// condition equivalent to Delta being multiplicative for the c-twisted
// product on R (x) R.
inline Report check_prebraided_scalar(const MatchedPair& mp, const SigmaTable& sg,
                                      const TauTable& tu, const BraidingTable& q,
                                      FailMode mode = FailMode::CountAll) {
  const int nG = mp.nG(), nF = mp.nF(), N = sg.conductor;
  Checker ck("prebraided-compat", mode);
  for (int t = 0; t < nG && ck.keep_going(); ++t)
    for (int s = 0; s < nG; ++s)
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF; ++y) {
          const int sx = mp.act_f(s, x), sax = mp.act_g(s, x);
          const int ty = mp.act_g(t, sx);          // t◁(s▷x)
          const int wy = mp.act_f(sax, y);         // (s◁x)▷y
          long long lhs = sg.exp(mp.G.mul(t, s), x, y) +
                          tu.exp(mp.F.mul(x, y), t, s);
          long long rhs = q.exp(s, ty, x, wy) + tu.exp(x, t, s) +
                          tu.exp(y, ty, sax) + sg.exp(t, sx, wy) + sg.exp(s, x, y);
          if (!ck.expect(mod_exp(lhs - rhs, N) == 0, [&] {
                return witness("t", t, "s", s, "x", x, "y", y);
              }))
            break;
        }
  Report rep;
  rep.add(ck.finish());
  return rep;
}

}  // namespace bicross
