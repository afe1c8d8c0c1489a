#pragma once

#include <array>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "bicross/bicrossed.hpp"
#include "bicross/braiding.hpp"
#include "bicross/cocycles.hpp"
#include "bicross/group.hpp"
#include "bicross/matched_pair.hpp"
#include "bicross/report.hpp"
#include "bicross/smith.hpp"

namespace bicross {

// Diagonal Yetter-Drinfeld data over a finite abelian group C: the basis
// vector delta_g x sits in degree z(g,x) and C acts on it through the
// character chi(g,x). The induced braiding is diagonal:
//   c(delta_g x (x) delta_h y) = <chi(h,y), z(g,x)> delta_h y (x) delta_g x.
struct DiagonalRealization {
  AbelianGroup C;
  int conductor = 1;  // all chi values land in mu_conductor
  int nG = 0, nF = 0;
  std::vector<int> z;          // (g,x) -> element index in C
  std::vector<Character> chi;  // (g,x) -> character of C

  int at(int g, int x) const { return g * nF + x; }
  int z_index(int g, int x) const { return z[at(g, x)]; }
  std::vector<int> z_elem(int g, int x) const { return C.element(z[at(g, x)]); }
  const Character& chi_at(int g, int x) const { return chi[at(g, x)]; }

  // <chi(h,y), z(g,x)> as an exponent mod conductor; same argument order as
  // BraidingTable::exp(g,h,x,y).
  int pair_exp(int g, int h, int x, int y) const {
    return chi_at(h, y).eval(z_elem(g, x)).exp;
  }
};

inline DiagonalRealization trivial_realization(const MatchedPair& mp, int N) {
  DiagonalRealization dr;
  dr.C = AbelianGroup(std::vector<int>{});
  dr.conductor = N;
  dr.nG = mp.nG();
  dr.nF = mp.nF();
  dr.z.assign(static_cast<size_t>(dr.nG) * dr.nF, 0);
  dr.chi.assign(static_cast<size_t>(dr.nG) * dr.nF, Character::trivial(dr.C, N));
  return dr;
}

// The four 1-cocycle conditions on (z, chi) plus the unit normalizations.
inline ValidationReport validate_realization(const MatchedPair& mp,
                                             const DiagonalRealization& dr) {
  ValidationReport rep;
  const int nG = mp.nG(), nF = mp.nF();
  const size_t cells = static_cast<size_t>(nG) * nF;
  if (dr.nG != nG || dr.nF != nF || dr.z.size() != cells || dr.chi.size() != cells ||
      dr.conductor < 1) {
    rep.add(ErrorCode::BadParameters,
            witness("nG", dr.nG, "nF", dr.nF, "z", dr.z.size(), "chi", dr.chi.size()));
    return rep;
  }
  for (int d : dr.C.factors())
    if (d == 0 || dr.conductor % d != 0)
      rep.add(ErrorCode::ConductorMismatch, witness("factor", d, "conductor", dr.conductor));
  for (size_t i = 0; i < cells; ++i) {
    if (dr.z[i] < 0 || dr.z[i] >= dr.C.size())
      rep.add(ErrorCode::BadParameters, witness("z_entry", dr.z[i]));
    if (dr.chi[i].conductor != dr.conductor || dr.chi[i].factors != dr.C.factors())
      rep.add(ErrorCode::CharacterIllDefined,
              witness("g", static_cast<int>(i) / nF, "x", static_cast<int>(i) % nF));
  }
  if (!rep.ok()) return rep;

  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x)
      for (int y = 0; y < nF; ++y) {
        if (!(dr.chi_at(g, mp.F.mul(x, y)) ==
              dr.chi_at(g, x) * dr.chi_at(mp.act_g(g, x), y)))
          rep.add(ErrorCode::ConditionFails, witness("cond", 1, "g", g, "x", x, "y", y));
        const int lhs = dr.z_index(g, mp.F.mul(x, y));
        const int rhs =
            dr.C.index_of(dr.C.add(dr.z_elem(g, x), dr.z_elem(mp.act_g(g, x), y)));
        if (lhs != rhs)
          rep.add(ErrorCode::ConditionFails, witness("cond", 3, "g", g, "x", x, "y", y));
      }
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      for (int x = 0; x < nF; ++x) {
        if (!(dr.chi_at(mp.G.mul(g, h), x) ==
              dr.chi_at(g, mp.act_f(h, x)) * dr.chi_at(h, x)))
          rep.add(ErrorCode::ConditionFails, witness("cond", 2, "g", g, "h", h, "x", x));
        const int lhs = dr.z_index(mp.G.mul(g, h), x);
        const int rhs =
            dr.C.index_of(dr.C.add(dr.z_elem(g, mp.act_f(h, x)), dr.z_elem(h, x)));
        if (lhs != rhs)
          rep.add(ErrorCode::ConditionFails, witness("cond", 4, "g", g, "h", h, "x", x));
      }
  // unit rows/columns (implied by the four conditions, re-checked anyway)
  for (int x = 0; x < nF; ++x)
    if (dr.z_index(0, x) != 0 || !dr.chi_at(0, x).is_trivial())
      rep.add(ErrorCode::NormalizationFails, witness("slot", "identity_g", "x", x));
  for (int g = 0; g < nG; ++g)
    if (dr.z_index(g, 0) != 0 || !dr.chi_at(g, 0).is_trivial())
      rep.add(ErrorCode::NormalizationFails, witness("slot", "identity_x", "g", g));
  return rep;
}

namespace detail {

// Residues of the realization compatibility law and of its two sufficient
// splits (both families) at one tuple; e_main == e_s + e_t == e_s2 + e_t2.
struct CChiResidues {
  int main, s, t, s2, t2;
};

inline CChiResidues cchi_residues(const MatchedPair& mp, const SigmaTable& sg,
                                  const TauTable& tu, const DiagonalRealization& dr,
                                  int s, int t, int x, int y) {
  const int N = sg.conductor;
  const int sx = mp.act_f(s, x);    // s ▷ x
  const int sax = mp.act_g(s, x);   // s ◁ x
  const int tp = mp.act_g(t, sx);   // t ◁ (s ▷ x)
  const int yp = mp.act_f(sax, y);  // (s ◁ x) ▷ y
  const long long pair = dr.pair_exp(s, tp, x, yp);
  const long long ls = sg.exp(mp.G.mul(t, s), x, y);
  const long long lt = tu.exp(mp.F.mul(x, y), t, s);
  const long long rs = sg.exp(t, sx, yp) + sg.exp(s, x, y);
  const long long rt = tu.exp(x, t, s) + tu.exp(y, tp, sax);
  CChiResidues r;
  r.main = mod_exp(ls + lt - pair - rs - rt, N);
  r.s = mod_exp(ls - pair - rs, N);
  r.t = mod_exp(lt - rt, N);
  r.s2 = mod_exp(ls - rs, N);
  r.t2 = mod_exp(lt - pair - rt, N);
  return r;
}

}  // namespace detail

// Whether (z, chi) realizes the braided structure: the single compatibility
// law over all (s,t,x,y), and, when it holds, agreement of the induced
// diagonal braiding with the canonical one. The implication checks certify
// that the law splits as (sigma part) + (tau part) in both possible ways, so
// any two of {law, sigma split, tau split} force the third.
inline Report check_braid_c_chi(const MatchedPair& mp, const SigmaTable& sg,
                                const TauTable& tu, const DiagonalRealization& dr,
                                FailMode mode = FailMode::CountAll) {
  if (sg.conductor != tu.conductor || sg.conductor != dr.conductor)
    throw Error(ErrorCode::ConductorMismatch,
                witness("sigma", sg.conductor, "tau", tu.conductor, "realization",
                        dr.conductor));
  const int nG = mp.nG(), nF = mp.nF(), N = sg.conductor;
  Report rep;

  Checker main_ck("braid-c-chi", mode);
  for (int s = 0; s < nG && main_ck.keep_going(); ++s)
    for (int t = 0; t < nG; ++t)
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF; ++y) {
          const auto r = detail::cchi_residues(mp, sg, tu, dr, s, t, x, y);
          if (!main_ck.expect(r.main == 0, [&] {
                return witness("s", s, "t", t, "x", x, "y", y, "residue", r.main);
              }))
            break;
        }
  const CheckResult main_res = main_ck.finish();
  rep.add(main_res);

  Checker imp1("naif-implication", mode);
  Checker imp2("naif-implication-2", mode);
  for (int s = 0; s < nG && imp1.keep_going() && imp2.keep_going(); ++s)
    for (int t = 0; t < nG; ++t)
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF; ++y) {
          const auto r = detail::cchi_residues(mp, sg, tu, dr, s, t, x, y);
          imp1.expect(mod_exp(static_cast<long long>(r.s) + r.t - r.main, N) == 0,
                      [&] { return witness("s", s, "t", t, "x", x, "y", y); });
          imp2.expect(mod_exp(static_cast<long long>(r.s2) + r.t2 - r.main, N) == 0,
                      [&] { return witness("s", s, "t", t, "x", x, "y", y); });
        }
  rep.add(imp1.finish());
  rep.add(imp2.finish());

  if (main_res.pass) {
    const BraidingTable q = compute_q(mp, sg, tu);
    Checker tc("tak-comp", mode);
    for (int g = 0; g < nG && tc.keep_going(); ++g)
      for (int h = 0; h < nG; ++h)
        for (int x = 0; x < nF; ++x)
          for (int y = 0; y < nF; ++y)
            if (!tc.expect(dr.pair_exp(g, h, x, y) == q.exp(g, h, x, y), [&] {
                  return witness("g", g, "h", h, "x", x, "y", y, "pairing",
                                 dr.pair_exp(g, h, x, y), "q", q.exp(g, h, x, y));
                }))
              break;
    rep.add(tc.finish());
  }
  return rep;
}

// Verdicts of the four sufficient split conditions themselves. Kept out of
// check_braid_c_chi: a perfectly good realization may satisfy only one
// family (or neither), so these must not gate an ok() verdict.
inline Report naif_split_report(const MatchedPair& mp, const SigmaTable& sg,
                                const TauTable& tu, const DiagonalRealization& dr,
                                FailMode mode = FailMode::CountAll) {
  const int nG = mp.nG(), nF = mp.nF();
  Report rep;
  const char* names[4] = {"split-sigma", "split-tau", "split-sigma2", "split-tau2"};
  for (int which = 0; which < 4; ++which) {
    Checker ck(names[which], mode);
    for (int s = 0; s < nG && ck.keep_going(); ++s)
      for (int t = 0; t < nG; ++t)
        for (int x = 0; x < nF; ++x)
          for (int y = 0; y < nF; ++y) {
            const auto r = detail::cchi_residues(mp, sg, tu, dr, s, t, x, y);
            const int res = which == 0 ? r.s : which == 1 ? r.t : which == 2 ? r.s2 : r.t2;
            if (!ck.expect(res == 0, [&] {
                  return witness("s", s, "t", t, "x", x, "y", y, "residue", res);
                }))
              break;
          }
    rep.add(ck.finish());
  }
  return rep;
}

// --- Semidirect case (▷ trivial) -------------------------------------------

// sigma multiplicativity in the group slot up to the (z, chi) pairing, written
// exactly as displayed for the semidirect construction:
//   sigma_{ts}(x,y) = <chi(s◁x, y), z(t,x)> sigma_s(x,y) sigma_t(x,y).
// Note the pairing couples s with chi and t with z; the specialization of the
// general compatibility law couples them the other way around. For the
// families built here the pairing is symmetric enough that both agree; the
// gen-som report cross-checks the verdicts rather than preferring one.
inline CheckResult check_cond_som(const MatchedPair& mp, const SigmaTable& sg,
                                  const DiagonalRealization& dr,
                                  FailMode mode = FailMode::CountAll) {
  if (!mp.lact_trivial())
    throw Error(ErrorCode::NotSemidirect, "left action of G on F is nontrivial");
  if (sg.conductor != dr.conductor)
    throw Error(ErrorCode::ConductorMismatch,
                witness("sigma", sg.conductor, "realization", dr.conductor));
  const int nG = mp.nG(), nF = mp.nF(), N = sg.conductor;
  Checker ck("cond-som", mode);
  for (int s = 0; s < nG && ck.keep_going(); ++s)
    for (int t = 0; t < nG; ++t)
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF; ++y) {
          const long long lhs = sg.exp(mp.G.mul(t, s), x, y);
          const long long rhs = dr.pair_exp(t, mp.act_g(s, x), x, y) +
                                sg.exp(s, x, y) + sg.exp(t, x, y);
          if (!ck.expect(mod_exp(lhs - rhs, N) == 0,
                         [&] { return witness("s", s, "t", t, "x", x, "y", y); }))
            break;
        }
  return ck.finish();
}

// tau as a map F -> Z^2(G) being a 1-cocycle for the translation action:
//   tau_{xy}(t, s) = tau_x(t, s) tau_y(t◁x, s◁x).
inline CheckResult check_tau_tilde_cocycle(const MatchedPair& mp, const TauTable& tu,
                                           FailMode mode = FailMode::CountAll) {
  if (!mp.lact_trivial())
    throw Error(ErrorCode::NotSemidirect, "left action of G on F is nontrivial");
  const int nG = mp.nG(), nF = mp.nF(), N = tu.conductor;
  Checker ck("tau-tilde-cocycle", mode);
  for (int x = 0; x < nF && ck.keep_going(); ++x)
    for (int y = 0; y < nF; ++y)
      for (int t = 0; t < nG; ++t)
        for (int s = 0; s < nG; ++s) {
          const long long lhs = tu.exp(mp.F.mul(x, y), t, s);
          const long long rhs =
              tu.exp(x, t, s) + tu.exp(y, mp.act_g(t, x), mp.act_g(s, x));
          if (!ck.expect(mod_exp(lhs - rhs, N) == 0,
                         [&] { return witness("x", x, "y", y, "t", t, "s", s); }))
            break;
        }
  return ck.finish();
}

// Semidirect-case criterion: given cond-som, the full compatibility law holds
// iff tau-tilde is a 1-cocycle. The agreement check compares the two verdicts
// and fails loudly on any dataset where they differ.
inline Report gen_som_report(const MatchedPair& mp, const SigmaTable& sg,
                             const TauTable& tu, const DiagonalRealization& dr,
                             FailMode mode = FailMode::CountAll) {
  Report rep;
  const CheckResult som = check_cond_som(mp, sg, dr, mode);
  const CheckResult tt = check_tau_tilde_cocycle(mp, tu, mode);
  const Report braid = check_braid_c_chi(mp, sg, tu, dr, mode);
  const CheckResult* law = braid.find("braid-c-chi");

  CheckResult agree;
  agree.name = "gen-som-agreement";
  agree.checked = 1;
  if (!som.pass) {
    agree.pass = true;
    agree.witness = "cond-som fails, criterion not applicable";
  } else {
    agree.pass = law != nullptr && law->pass == tt.pass;
    if (!agree.pass) {
      agree.failed = 1;
      agree.witness = witness("law", law && law->pass ? 1 : 0, "tau_tilde",
                              tt.pass ? 1 : 0);
    }
  }
  rep.add(som);
  rep.add(tt);
  rep.add(agree);
  return rep;
}

// --- Universal realization ---------------------------------------------------

// Builds the realization over C = (Z/N)^{G x F} / (relations of the z-cocycle
// laws), N = lcm of the orders of the braiding values. z(g,x) is the class of
// the canonical generator e(g,x); chi(g,x) is defined on classes by
// chi(g,x)(e(h,y)) = Q^{y,x}_{h,g}, so that the induced braiding
// <chi(h,y), z(g,x)> equals Q^{x,y}_{g,h} on the nose. Well-definedness is
// exactly the multiplicativity laws of Q in its first index pair; all four
// laws are checked up front.
inline DiagonalRealization universal_realization_from_q(const MatchedPair& mp,
                                                        const BraidingTable& q) {
  if (!q.shape_ok(mp)) throw Error(ErrorCode::BadTable, "braiding table shape");
  const int nG = mp.nG(), nF = mp.nF(), Nq = q.conductor;
  const int n = nG * nF;

  int N = 1;
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF; ++y) N = lcm_int(N, exponent_order(Nq, q.exp(g, h, x, y)));

  auto qn = [&](int g, int h, int x, int y) -> long long {
    const long long prod = static_cast<long long>(q.exp(g, h, x, y)) * N;
    if (prod % Nq != 0)
      throw Error(ErrorCode::InternalCheck, witness("q_exp", q.exp(g, h, x, y), "N", N));
    return prod / Nq % N;
  };

  // the four scalar laws, mod N; character construction is meaningless without
  // them
  for (int g = 0; g < nG; ++g)
    for (int s = 0; s < nG; ++s)
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF; ++y) {
          for (int zz = 0; zz < nF; ++zz) {
            if (mod_exp(qn(g, s, x, mp.F.mul(y, zz)) - qn(g, s, x, y) -
                            qn(g, mp.act_g(s, y), x, zz),
                        N) != 0)
              throw Error(ErrorCode::CharacterIllDefined,
                          witness("law", "mult-y", "g", g, "s", s, "x", x, "y", y, "z", zz));
            if (mod_exp(qn(g, s, mp.F.mul(x, y), zz) - qn(g, s, x, zz) -
                            qn(mp.act_g(g, x), s, y, zz),
                        N) != 0)
              throw Error(ErrorCode::CharacterIllDefined,
                          witness("law", "mult-x", "g", g, "s", s, "x", x, "y", y, "z", zz));
          }
          for (int t = 0; t < nG; ++t) {
            if (mod_exp(qn(g, mp.G.mul(t, s), x, y) - qn(g, t, x, mp.act_f(s, y)) -
                            qn(g, s, x, y),
                        N) != 0)
              throw Error(ErrorCode::CharacterIllDefined,
                          witness("law", "comult-h", "g", g, "t", t, "s", s, "x", x, "y", y));
            if (mod_exp(qn(mp.G.mul(t, s), g, x, y) - qn(t, g, mp.act_f(s, x), y) -
                            qn(s, g, x, y),
                        N) != 0)
              throw Error(ErrorCode::CharacterIllDefined,
                          witness("law", "comult-g", "g", g, "t", t, "s", s, "x", x, "y", y));
          }
        }

  // relation lattice, one column per relation, plus N*e_i to cut to Z/N
  std::set<std::vector<long long>> cols;
  auto push_rel = [&](std::vector<long long> col) {
    for (long long v : col)
      if (v != 0) {
        cols.insert(std::move(col));
        return;
      }
  };
  const auto at = [&](int g, int x) { return g * nF + x; };
  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x)
      for (int y = 0; y < nF; ++y) {
        std::vector<long long> col(n, 0);
        col[at(g, mp.F.mul(x, y))] += 1;
        col[at(g, x)] -= 1;
        col[at(mp.act_g(g, x), y)] -= 1;
        push_rel(std::move(col));
      }
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      for (int x = 0; x < nF; ++x) {
        std::vector<long long> col(n, 0);
        col[at(mp.G.mul(g, h), x)] += 1;
        col[at(g, mp.act_f(h, x))] -= 1;
        col[at(h, x)] -= 1;
        push_rel(std::move(col));
      }
  for (int i = 0; i < n; ++i) {
    std::vector<long long> col(n, 0);
    col[i] = N;
    cols.insert(std::move(col));
  }

  Matrix A(n, std::vector<Int>(cols.size(), 0));
  {
    int j = 0;
    for (const auto& col : cols) {
      for (int i = 0; i < n; ++i) A[i][j] = col[i];
      ++j;
    }
  }
  const SmithDecomposition sd = smith_normal_form(A);

  std::vector<int> kept;      // diagonal positions with d > 1
  std::vector<int> factors;   // their invariant factors
  for (int i = 0; i < n; ++i) {
    const Int d = sd.diag[i];
    if (d <= 0 || N % d != 0)
      throw Error(ErrorCode::InternalCheck, witness("diag", static_cast<int>(d), "N", N));
    if (d > 1) {
      kept.push_back(i);
      factors.push_back(static_cast<int>(d));
    }
  }

  DiagonalRealization dr;
  dr.C = AbelianGroup(factors);
  dr.conductor = Nq;
  dr.nG = nG;
  dr.nF = nF;
  dr.z.reserve(n);
  dr.chi.reserve(n);

  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x) {
      std::vector<int> coords(kept.size());
      for (size_t j = 0; j < kept.size(); ++j) {
        Int v = sd.U[kept[j]][at(g, x)] % factors[j];
        if (v < 0) v += factors[j];
        coords[j] = static_cast<int>(v);
      }
      dr.z.push_back(dr.C.index_of(coords));
    }
  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x) {
      std::vector<int> exps(kept.size());
      for (size_t j = 0; j < kept.size(); ++j) {
        // value on the j-th generator: the class of column kept[j] of U^{-1}
        Int c = 0;
        for (int w = 0; w < n; ++w)
          c += sd.Uinv[w][kept[j]] % N * qn(w / nF, g, w % nF, x) % N;
        c %= N;
        if (c < 0) c += N;
        const int step = N / factors[j];
        if (c % step != 0)
          throw Error(ErrorCode::InternalCheck,
                      witness("generator", static_cast<int>(kept[j]), "value",
                              static_cast<int>(c)));
        exps[j] = static_cast<int>(c / step % factors[j]);
      }
      dr.chi.push_back(Character::make(dr.C, Nq, exps));
    }

  // the construction must reproduce the braiding exactly
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF; ++y)
          if (dr.pair_exp(g, h, x, y) != q.exp(g, h, x, y))
            throw Error(ErrorCode::InternalCheck,
                        witness("g", g, "h", h, "x", x, "y", y, "pairing",
                                dr.pair_exp(g, h, x, y), "q", q.exp(g, h, x, y)));
  return dr;
}

inline DiagonalRealization universal_realization(const MatchedPair& mp,
                                                 const SigmaTable& sg,
                                                 const TauTable& tu) {
  DiagonalRealization dr = universal_realization_from_q(mp, compute_q(mp, sg, tu));
  if (!validate_realization(mp, dr).ok())
    throw Error(ErrorCode::InternalCheck, "universal realization fails validation");
  if (!check_braid_c_chi(mp, sg, tu, dr).ok())
    throw Error(ErrorCode::InternalCheck, "universal realization fails compatibility");
  return dr;
}

// --- Semidirect z enumeration ------------------------------------------------

namespace detail {

// Greedy generating sequence: repeatedly adjoin the smallest element outside
// the subgroup generated so far.
inline std::vector<int> group_generators(const FiniteGroup& g) {
  const int n = g.size();
  std::vector<char> in(n, 0);
  std::vector<int> span{0}, gens;
  in[0] = 1;
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      const size_t sz = span.size();
      for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < span.size(); ++j) {
          const int w = g.mul(span[i], span[j]);
          if (!in[w]) {
            in[w] = 1;
            span.push_back(w);
            grew = true;
          }
        }
    }
  };
  while (static_cast<int>(span.size()) < n) {
    int a = 0;
    while (in[a]) ++a;
    gens.push_back(a);
    in[a] = 1;
    span.push_back(a);
    close();
  }
  return gens;
}

}  // namespace detail

// All homomorphisms G -> A as per-element tables of A-indices, enumerated by
// generator images and closed under products.
inline std::vector<std::vector<int>> enumerate_homs(const FiniteGroup& G,
                                                    const AbelianGroup& A) {
  const std::vector<int> gens = detail::group_generators(G);
  const int n = G.size(), na = A.size();
  auto a_add = [&](int i, int j) { return A.index_of(A.add(A.element(i), A.element(j))); };

  std::vector<std::vector<int>> out;
  std::vector<int> pick(gens.size(), 0);
  for (;;) {
    std::vector<int> phi(n, -1);
    phi[0] = 0;
    bool good = true;
    for (size_t k = 0; k < gens.size() && good; ++k) {
      if (phi[gens[k]] >= 0 && phi[gens[k]] != pick[k]) good = false;
      phi[gens[k]] = pick[k];
    }
    while (good) {
      bool grew = false;
      for (int u = 0; u < n && good; ++u) {
        if (phi[u] < 0) continue;
        for (int v = 0; v < n; ++v) {
          if (phi[v] < 0) continue;
          const int w = G.mul(u, v);
          const int img = a_add(phi[u], phi[v]);
          if (phi[w] < 0) {
            phi[w] = img;
            grew = true;
          } else if (phi[w] != img) {
            good = false;
            break;
          }
        }
      }
      if (!grew) break;
    }
    if (good) {
      for (int u = 0; u < n; ++u)
        if (phi[u] < 0)
          throw Error(ErrorCode::InternalCheck, witness("unreached", u));
      out.push_back(std::move(phi));
    }
    size_t k = 0;
    for (; k < pick.size(); ++k) {
      if (++pick[k] < na) break;
      pick[k] = 0;
    }
    if (k == pick.size()) break;
  }
  return out;
}

// All tables z: G x F -> A satisfying both z-cocycle laws when ▷ is trivial,
// enumerated as 1-cocycles F -> Hom(G, A) for the translated action
// (x.phi)(g) = phi(g ◁ x). Returns flattened tables z[g*|F|+x] of A-indices.
inline std::vector<std::vector<int>> enumerate_semidirect_z(const MatchedPair& mp,
                                                            const AbelianGroup& A) {
  if (!mp.lact_trivial())
    throw Error(ErrorCode::NotSemidirect, "left action of G on F is nontrivial");
  const int nG = mp.nG(), nF = mp.nF();
  const std::vector<std::vector<int>> homs = enumerate_homs(mp.G, A);
  std::map<std::vector<int>, int> hom_index;
  for (size_t i = 0; i < homs.size(); ++i) hom_index[homs[i]] = static_cast<int>(i);
  const int M = static_cast<int>(homs.size());
  auto a_add = [&](int i, int j) { return A.index_of(A.add(A.element(i), A.element(j))); };
  auto hom_add = [&](int i, int j) {
    std::vector<int> r(nG);
    for (int g = 0; g < nG; ++g) r[g] = a_add(homs[i][g], homs[j][g]);
    return hom_index.at(r);
  };
  auto hom_act = [&](int x, int i) {  // (x.phi)(g) = phi(g ◁ x)
    std::vector<int> r(nG);
    for (int g = 0; g < nG; ++g) r[g] = homs[i][mp.act_g(g, x)];
    return hom_index.at(r);
  };
  const int triv = hom_index.at(std::vector<int>(nG, 0));
  const std::vector<int> fgens = detail::group_generators(mp.F);

  std::vector<std::vector<int>> out;
  std::vector<int> pick(fgens.size(), 0);
  for (;;) {
    std::vector<int> u(nF, -1);
    u[0] = triv;
    bool good = true;
    for (size_t k = 0; k < fgens.size() && good; ++k) {
      if (u[fgens[k]] >= 0 && u[fgens[k]] != pick[k]) good = false;
      u[fgens[k]] = pick[k];
    }
    while (good) {
      bool grew = false;
      for (int x = 0; x < nF && good; ++x) {
        if (u[x] < 0) continue;
        for (int y = 0; y < nF; ++y) {
          if (u[y] < 0) continue;
          const int w = mp.F.mul(x, y);
          const int img = hom_add(u[x], hom_act(x, u[y]));  // u(xy) = u(x) + x.u(y)
          if (u[w] < 0) {
            u[w] = img;
            grew = true;
          } else if (u[w] != img) {
            good = false;
            break;
          }
        }
      }
      if (!grew) break;
    }
    // generator images only pin the values along products; re-verify the
    // cocycle identity on every pair before accepting
    if (good)
      for (int x = 0; x < nF && good; ++x)
        for (int y = 0; y < nF; ++y)
          if (u[mp.F.mul(x, y)] != hom_add(u[x], hom_act(x, u[y]))) {
            good = false;
            break;
          }
    if (good) {
      std::vector<int> z(static_cast<size_t>(nG) * nF);
      for (int g = 0; g < nG; ++g)
        for (int x = 0; x < nF; ++x) z[g * nF + x] = homs[u[x]][g];
      // enumeration soundness: both table-level laws must hold
      for (int g = 0; g < nG; ++g)
        for (int x = 0; x < nF; ++x)
          for (int y = 0; y < nF; ++y)
            if (z[g * nF + mp.F.mul(x, y)] !=
                a_add(z[g * nF + x], z[mp.act_g(g, x) * nF + y]))
              throw Error(ErrorCode::InternalCheck, witness("g", g, "x", x, "y", y));
      for (int g = 0; g < nG; ++g)
        for (int h = 0; h < nG; ++h)
          for (int x = 0; x < nF; ++x)
            if (z[mp.G.mul(g, h) * nF + x] != a_add(z[g * nF + x], z[h * nF + x]))
              throw Error(ErrorCode::InternalCheck, witness("g", g, "h", h, "x", x));
      out.push_back(std::move(z));
    }
    size_t k = 0;
    for (; k < pick.size(); ++k) {
      if (++pick[k] < M) break;
      pick[k] = 0;
    }
    if (k == pick.size()) break;
  }
  return out;
}

// --- Radford biproduct -------------------------------------------------------

// Ordinary Hopf algebra on basis delta_g x # u (u in C):
//   (delta_g x # u)(delta_h y # v) =
//        [g◁x = h] <chi(h,y), u> sigma_g(x,y) delta_g(xy) # uv,
//   Delta(delta_g x # u) = sum_t tau_x(t, t^{-1}g)
//        (delta_t (t^{-1}g ▷ x) # z(t^{-1}g, x)u) (x) (delta_{t^{-1}g} x # u),
//   eps(delta_g x # u) = [g = 1],   1 = sum_g delta_g 1 # 1.
struct Biproduct {
  MatchedPair mp;
  DiagonalRealization dr;
  int conductor = 1;
  int nC = 1;
  int dim = 0;

  struct Term {
    int left, right, exp;
  };

  std::vector<int> mult_target, mult_exp;  // dim x dim, target -1 = zero
  std::vector<std::vector<Term>> comult;   // exactly |G| terms per basis
  std::vector<int> antipode_target, antipode_exp;

  int nG() const { return mp.nG(); }
  int nF() const { return mp.nF(); }
  int index(int g, int x, int u) const { return (g * nF() + x) * nC + u; }
  int gof(int b) const { return b / nC / nF(); }
  int xof(int b) const { return b / nC % nF(); }
  int uof(int b) const { return b % nC; }
  bool counit_one(int b) const { return gof(b) == 0; }
};

namespace detail {

struct BPMono {
  int target = -1;
  int exp = 0;
};

inline BPMono bp_mul(const Biproduct& B, const BPMono& a, int b) {
  if (a.target < 0) return {};
  const size_t k = static_cast<size_t>(a.target) * B.dim + b;
  if (B.mult_target[k] < 0) return {};
  return {B.mult_target[k], mod_exp(static_cast<long long>(a.exp) + B.mult_exp[k],
                                    B.conductor)};
}

inline void bp_acc(std::map<int, CycInt>& acc, int conductor, int target, int exp) {
  if (target < 0) return;
  auto it = acc.emplace(target, CycInt::zero(conductor)).first;
  it->second = it->second + CycInt::from_root(RootOfUnity::make(conductor, exp));
  if (it->second.is_zero()) acc.erase(it);
}

}  // namespace detail

// Materializes the biproduct tables. Only cheap internal re-checks run here;
// the full Hopf sweeps live in biproduct_verify so that deliberately broken
// realizations can be built and then watched failing.
inline Biproduct build_biproduct(const BicrossedProduct& R, const DiagonalRealization& dr) {
  const MatchedPair& mp = R.mp;
  const int nG = mp.nG(), nF = mp.nF();
  if (dr.nG != nG || dr.nF != nF ||
      dr.z.size() != static_cast<size_t>(nG) * nF ||
      dr.chi.size() != static_cast<size_t>(nG) * nF)
    throw Error(ErrorCode::BadParameters, witness("nG", dr.nG, "nF", dr.nF));
  if (R.conductor != dr.conductor)
    throw Error(ErrorCode::ConductorMismatch,
                witness("product", R.conductor, "realization", dr.conductor));

  Biproduct B;
  B.mp = mp;
  B.dr = dr;
  B.conductor = R.conductor;
  B.nC = dr.C.size();
  B.dim = nG * nF * B.nC;
  const int N = B.conductor, nC = B.nC;
  auto c_add = [&](int i, int j) {
    return dr.C.index_of(dr.C.add(dr.C.element(i), dr.C.element(j)));
  };

  B.mult_target.assign(static_cast<size_t>(B.dim) * B.dim, -1);
  B.mult_exp.assign(static_cast<size_t>(B.dim) * B.dim, 0);
  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x) {
      const int h = mp.act_g(g, x);
      for (int y = 0; y < nF; ++y) {
        const int sig = R.sigma.exp(g, x, y);
        const int xy = mp.F.mul(x, y);
        for (int u = 0; u < nC; ++u) {
          const int chiu = dr.chi_at(h, y).eval(dr.C.element(u)).exp;
          for (int v = 0; v < nC; ++v) {
            const size_t k =
                static_cast<size_t>(B.index(g, x, u)) * B.dim + B.index(h, y, v);
            B.mult_target[k] = B.index(g, xy, c_add(u, v));
            B.mult_exp[k] = mod_exp(static_cast<long long>(sig) + chiu, N);
          }
        }
      }
    }

  B.comult.resize(B.dim);
  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x)
      for (int u = 0; u < nC; ++u) {
        auto& terms = B.comult[B.index(g, x, u)];
        terms.reserve(nG);
        for (int t = 0; t < nG; ++t) {
          const int k = mp.G.mul(mp.G.inv(t), g);
          terms.push_back({B.index(t, mp.act_f(k, x), c_add(dr.z_index(k, x), u)),
                           B.index(k, x, u), R.tau.exp(x, t, k)});
        }
      }

  B.antipode_target.resize(B.dim);
  B.antipode_exp.resize(B.dim);
  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x) {
      const int rb = R.basis(g, x);
      const int rt = R.antipode_target[rb];
      const int g2 = R.gof(rt), x2 = R.xof(rt);
      for (int u = 0; u < nC; ++u) {
        const int w = dr.C.index_of(dr.C.neg(dr.C.element(c_add(dr.z_index(g, x), u))));
        const int b = B.index(g, x, u);
        B.antipode_target[b] = B.index(g2, x2, w);
        B.antipode_exp[b] =
            mod_exp(static_cast<long long>(R.antipode_exp[rb]) +
                        dr.chi_at(g2, x2).eval(dr.C.element(w)).exp,
                    N);
      }
    }

  // counit multiplicative on the mult table
  for (int b1 = 0; b1 < B.dim; ++b1)
    for (int b2 = 0; b2 < B.dim; ++b2) {
      const size_t k = static_cast<size_t>(b1) * B.dim + b2;
      const bool lhs = B.mult_target[k] >= 0 && B.counit_one(B.mult_target[k]);
      const bool rhs = B.counit_one(b1) && B.counit_one(b2);
      if (lhs != rhs)
        throw Error(ErrorCode::InternalCheck, witness("b1", b1, "b2", b2));
    }
  // Delta(1) = 1 (x) 1
  {
    std::map<std::pair<int, int>, CycInt> acc;
    for (int g = 0; g < nG; ++g)
      for (const auto& t : B.comult[B.index(g, 0, 0)]) {
        auto key = std::make_pair(t.left, t.right);
        auto it = acc.emplace(key, CycInt::zero(N)).first;
        it->second = it->second + CycInt::from_root(RootOfUnity::make(N, t.exp));
        if (it->second.is_zero()) acc.erase(it);
      }
    const CycInt one = CycInt::one(N);
    for (int g = 0; g < nG; ++g)
      for (int h = 0; h < nG; ++h) {
        auto it = acc.find({B.index(g, 0, 0), B.index(h, 0, 0)});
        if (it == acc.end() || !(it->second == one))
          throw Error(ErrorCode::InternalCheck, witness("g", g, "h", h));
        acc.erase(it);
      }
    if (!acc.empty()) throw Error(ErrorCode::InternalCheck, "unit comultiplication");
  }
  return B;
}

// Full ordinary-Hopf verification of a biproduct, plus the canonical maps of
// its two exact sequences.
inline Report biproduct_verify(const Biproduct& B, FailMode mode = FailMode::CountAll) {
  Report rep;
  const int N = B.conductor, nG = B.nG(), nF = B.nF(), nC = B.nC, dim = B.dim;
  auto mono = [&](int b1, int b2) {
    return detail::bp_mul(B, detail::BPMono{b1, 0}, b2);
  };

  Checker assoc("bp-mult-assoc", mode);
  for (int a = 0; a < dim && assoc.keep_going(); ++a)
    for (int b = 0; b < dim; ++b) {
      const detail::BPMono ab = mono(a, b);
      for (int c = 0; c < dim; ++c) {
        const detail::BPMono l = detail::bp_mul(B, ab, c);
        const detail::BPMono bc = mono(b, c);
        detail::BPMono r = bc.target < 0 ? detail::BPMono{} : mono(a, bc.target);
        if (r.target >= 0) r.exp = mod_exp(static_cast<long long>(r.exp) + bc.exp, N);
        const bool eq = l.target == r.target && (l.target < 0 || l.exp == r.exp);
        if (!assoc.expect(eq, [&] { return witness("a", a, "b", b, "c", c); })) break;
      }
    }
  rep.add(assoc.finish());

  Checker unit("bp-mult-unit", mode);
  for (int b = 0; b < dim && unit.keep_going(); ++b) {
    std::map<int, CycInt> left, right;
    for (int g = 0; g < nG; ++g) {
      const detail::BPMono l = mono(B.index(g, 0, 0), b);
      detail::bp_acc(left, N, l.target, l.exp);
      const detail::BPMono r = mono(b, B.index(g, 0, 0));
      detail::bp_acc(right, N, r.target, r.exp);
    }
    std::map<int, CycInt> expect;
    detail::bp_acc(expect, N, b, 0);
    unit.expect(left == expect && right == expect, [&] { return witness("b", b); });
  }
  rep.add(unit.finish());

  Checker com("bp-comult-coassoc", mode);
  for (int b = 0; b < dim && com.keep_going(); ++b) {
    std::map<std::array<int, 3>, CycInt> l, r;
    for (const auto& t : B.comult[b])
      for (const auto& t2 : B.comult[t.left]) {
        std::array<int, 3> key{t2.left, t2.right, t.right};
        auto it = l.emplace(key, CycInt::zero(N)).first;
        it->second = it->second + CycInt::from_root(RootOfUnity::make(
                                      N, static_cast<long long>(t.exp) + t2.exp));
        if (it->second.is_zero()) l.erase(it);
      }
    for (const auto& t : B.comult[b])
      for (const auto& t2 : B.comult[t.right]) {
        std::array<int, 3> key{t.left, t2.left, t2.right};
        auto it = r.emplace(key, CycInt::zero(N)).first;
        it->second = it->second + CycInt::from_root(RootOfUnity::make(
                                      N, static_cast<long long>(t.exp) + t2.exp));
        if (it->second.is_zero()) r.erase(it);
      }
    com.expect(l == r, [&] { return witness("b", b); });
  }
  rep.add(com.finish());

  Checker cu("bp-comult-counit", mode);
  for (int b = 0; b < dim && cu.keep_going(); ++b) {
    std::map<int, CycInt> l, r, expect;
    for (const auto& t : B.comult[b]) {
      if (B.counit_one(t.left)) detail::bp_acc(l, N, t.right, t.exp);
      if (B.counit_one(t.right)) detail::bp_acc(r, N, t.left, t.exp);
    }
    detail::bp_acc(expect, N, b, 0);
    cu.expect(l == expect && r == expect, [&] { return witness("b", b); });
  }
  rep.add(cu.finish());

  Checker dm("bp-comult-mult", mode);
  for (int b1 = 0; b1 < dim && dm.keep_going(); ++b1)
    for (int b2 = 0; b2 < dim; ++b2) {
      std::map<std::pair<int, int>, CycInt> lhs, rhs;
      const detail::BPMono p = mono(b1, b2);
      if (p.target >= 0)
        for (const auto& t : B.comult[p.target]) {
          auto it = lhs.emplace(std::make_pair(t.left, t.right), CycInt::zero(N)).first;
          it->second = it->second + CycInt::from_root(RootOfUnity::make(
                                        N, static_cast<long long>(p.exp) + t.exp));
          if (it->second.is_zero()) lhs.erase(it);
        }
      for (const auto& s : B.comult[b1])
        for (const auto& t : B.comult[b2]) {
          const detail::BPMono l = mono(s.left, t.left);
          if (l.target < 0) continue;
          const detail::BPMono r = mono(s.right, t.right);
          if (r.target < 0) continue;
          auto it = rhs.emplace(std::make_pair(l.target, r.target), CycInt::zero(N)).first;
          it->second =
              it->second + CycInt::from_root(RootOfUnity::make(
                               N, static_cast<long long>(s.exp) + t.exp + l.exp + r.exp));
          if (it->second.is_zero()) rhs.erase(it);
        }
      if (!dm.expect(lhs == rhs, [&] { return witness("b1", b1, "b2", b2); })) break;
    }
  rep.add(dm.finish());

  std::map<int, CycInt> one;
  for (int g = 0; g < nG; ++g) detail::bp_acc(one, N, B.index(g, 0, 0), 0);

  Checker al("bp-antipode-left", mode);
  Checker ar("bp-antipode-right", mode);
  for (int b = 0; b < dim; ++b) {
    std::map<int, CycInt> l, r;
    for (const auto& t : B.comult[b]) {
      const detail::BPMono sl =
          detail::bp_mul(B, detail::BPMono{B.antipode_target[t.left],
                                           mod_exp(static_cast<long long>(t.exp) +
                                                       B.antipode_exp[t.left],
                                                   N)},
                         t.right);
      detail::bp_acc(l, N, sl.target, sl.exp);
      detail::BPMono sr = mono(t.left, B.antipode_target[t.right]);
      if (sr.target >= 0)
        sr.exp = mod_exp(
            static_cast<long long>(sr.exp) + t.exp + B.antipode_exp[t.right], N);
      detail::bp_acc(r, N, sr.target, sr.exp);
    }
    const std::map<int, CycInt> expect = B.counit_one(b) ? one : std::map<int, CycInt>{};
    al.expect(l == expect, [&] { return witness("b", b); });
    ar.expect(r == expect, [&] { return witness("b", b); });
  }
  rep.add(al.finish());
  rep.add(ar.finish());

  // canonical maps. iota1: functions on G, delta_g -> delta_g 1 # 1.
  Checker i1("ses1-iota", mode);
  for (int g = 0; g < nG && i1.keep_going(); ++g) {
    for (int h = 0; h < nG; ++h) {
      const detail::BPMono p = mono(B.index(g, 0, 0), B.index(h, 0, 0));
      const bool want = g == h;
      const bool eq = want ? (p.target == B.index(g, 0, 0) && p.exp == 0) : p.target < 0;
      if (!i1.expect(eq, [&] { return witness("g", g, "h", h); })) break;
    }
    std::map<std::pair<int, int>, CycInt> got, expect;
    for (const auto& t : B.comult[B.index(g, 0, 0)]) {
      auto it = got.emplace(std::make_pair(t.left, t.right), CycInt::zero(N)).first;
      it->second = it->second + CycInt::from_root(RootOfUnity::make(N, t.exp));
      if (it->second.is_zero()) got.erase(it);
    }
    for (int t = 0; t < nG; ++t)
      expect.emplace(std::make_pair(B.index(t, 0, 0),
                                    B.index(B.mp.G.mul(B.mp.G.inv(t), g), 0, 0)),
                     CycInt::one(N));
    i1.expect(got == expect, [&] { return witness("g", g, "slot", "comult"); });
  }
  rep.add(i1.finish());

  // pi1: delta_g x # u -> [g = 1] x (x) u onto kF (x) kC
  auto pi1 = [&](int b) { return B.gof(b) == 0 ? B.xof(b) * nC + B.uof(b) : -1; };
  auto c_add = [&](int i, int j) {
    return B.dr.C.index_of(B.dr.C.add(B.dr.C.element(i), B.dr.C.element(j)));
  };
  Checker p1("ses1-pi", mode);
  for (int b1 = 0; b1 < dim && p1.keep_going(); ++b1)
    for (int b2 = 0; b2 < dim; ++b2) {
      const detail::BPMono p = mono(b1, b2);
      const int li = p.target < 0 ? -1 : pi1(p.target);
      const int ri = pi1(b1) < 0 || pi1(b2) < 0
                         ? -1
                         : B.mp.F.mul(B.xof(b1), B.xof(b2)) * nC + c_add(B.uof(b1), B.uof(b2));
      const bool eq = li == ri && (li < 0 || p.exp == 0);
      if (!p1.expect(eq, [&] { return witness("b1", b1, "b2", b2); })) break;
    }
  for (int b = 0; b < dim && p1.keep_going(); ++b) {
    // (pi1 (x) pi1) Delta = Delta pi1: the group-like diagonal on kF (x) kC
    std::map<std::pair<int, int>, CycInt> got, expect;
    for (const auto& t : B.comult[b]) {
      const int l = pi1(t.left), r = pi1(t.right);
      if (l < 0 || r < 0) continue;
      auto it = got.emplace(std::make_pair(l, r), CycInt::zero(N)).first;
      it->second = it->second + CycInt::from_root(RootOfUnity::make(N, t.exp));
      if (it->second.is_zero()) got.erase(it);
    }
    if (pi1(b) >= 0) expect.emplace(std::make_pair(pi1(b), pi1(b)), CycInt::one(N));
    p1.expect(got == expect, [&] { return witness("b", b, "slot", "comult"); });
  }
  rep.add(p1.finish());

  Checker e1("ses1-exact", mode);
  for (int g = 0; g < nG; ++g)
    e1.expect(pi1(B.index(g, 0, 0)) == (g == 0 ? 0 : -1),
              [&] { return witness("g", g, "slot", "normality"); });
  for (int b = 0; b < dim && e1.keep_going(); ++b) {
    const bool killed = pi1(b) < 0;
    e1.expect(killed == (B.gof(b) != 0), [&] { return witness("b", b); });
    if (killed) {
      const detail::BPMono p = mono(B.index(B.gof(b), 0, 0), b);
      e1.expect(p.target == b && p.exp == 0,
                [&] { return witness("b", b, "slot", "ideal"); });
    }
  }
  for (int x = 0; x < nF; ++x)
    for (int u = 0; u < nC; ++u)
      e1.expect(pi1(B.index(0, x, u)) == x * nC + u,
                [&] { return witness("x", x, "u", u, "slot", "onto"); });
  rep.add(e1.finish());

  // iota2: functions on G tensor kC, delta_g (x) u -> delta_g 1 # u
  Checker i2("ses2-iota", mode);
  for (int g = 0; g < nG && i2.keep_going(); ++g)
    for (int u = 0; u < nC; ++u) {
      for (int h = 0; h < nG; ++h)
        for (int v = 0; v < nC; ++v) {
          const detail::BPMono p = mono(B.index(g, 0, u), B.index(h, 0, v));
          const bool want = g == h;
          const bool eq = want ? (p.target == B.index(g, 0, c_add(u, v)) && p.exp == 0)
                               : p.target < 0;
          if (!i2.expect(eq, [&] { return witness("g", g, "u", u, "h", h, "v", v); }))
            break;
        }
      std::map<std::pair<int, int>, CycInt> got, expect;
      for (const auto& t : B.comult[B.index(g, 0, u)]) {
        auto it = got.emplace(std::make_pair(t.left, t.right), CycInt::zero(N)).first;
        it->second = it->second + CycInt::from_root(RootOfUnity::make(N, t.exp));
        if (it->second.is_zero()) got.erase(it);
      }
      for (int t = 0; t < nG; ++t)
        expect.emplace(std::make_pair(B.index(t, 0, u),
                                      B.index(B.mp.G.mul(B.mp.G.inv(t), g), 0, u)),
                       CycInt::one(N));
      i2.expect(got == expect, [&] { return witness("g", g, "u", u, "slot", "comult"); });
    }
  rep.add(i2.finish());

  // pi2: delta_g x # u -> [g = 1] x onto kF
  auto pi2 = [&](int b) { return B.gof(b) == 0 ? B.xof(b) : -1; };
  Checker p2("ses2-pi", mode);
  for (int b1 = 0; b1 < dim && p2.keep_going(); ++b1)
    for (int b2 = 0; b2 < dim; ++b2) {
      const detail::BPMono p = mono(b1, b2);
      const int li = p.target < 0 ? -1 : pi2(p.target);
      const int ri =
          pi2(b1) < 0 || pi2(b2) < 0 ? -1 : B.mp.F.mul(B.xof(b1), B.xof(b2));
      const bool eq = li == ri && (li < 0 || p.exp == 0);
      if (!p2.expect(eq, [&] { return witness("b1", b1, "b2", b2); })) break;
    }
  for (int b = 0; b < dim && p2.keep_going(); ++b) {
    std::map<std::pair<int, int>, CycInt> got, expect;
    for (const auto& t : B.comult[b]) {
      const int l = pi2(t.left), r = pi2(t.right);
      if (l < 0 || r < 0) continue;
      auto it = got.emplace(std::make_pair(l, r), CycInt::zero(N)).first;
      it->second = it->second + CycInt::from_root(RootOfUnity::make(N, t.exp));
      if (it->second.is_zero()) got.erase(it);
    }
    if (pi2(b) >= 0) expect.emplace(std::make_pair(pi2(b), pi2(b)), CycInt::one(N));
    p2.expect(got == expect, [&] { return witness("b", b, "slot", "comult"); });
  }
  rep.add(p2.finish());

  Checker e2("ses2-exact", mode);
  for (int g = 0; g < nG; ++g)
    for (int u = 0; u < nC; ++u)
      e2.expect(pi2(B.index(g, 0, u)) == (g == 0 ? 0 : -1),
                [&] { return witness("g", g, "u", u, "slot", "normality"); });
  for (int b = 0; b < dim && e2.keep_going(); ++b) {
    const bool killed = pi2(b) < 0;
    e2.expect(killed == (B.gof(b) != 0), [&] { return witness("b", b); });
    if (killed) {
      const detail::BPMono p = mono(B.index(B.gof(b), 0, 0), b);
      e2.expect(p.target == b && p.exp == 0,
                [&] { return witness("b", b, "slot", "ideal"); });
    }
  }
  for (int x = 0; x < nF; ++x)
    e2.expect(pi2(B.index(0, x, 0)) == x, [&] { return witness("x", x, "slot", "onto"); });
  rep.add(e2.finish());

  return rep;
}

}  // namespace bicross
