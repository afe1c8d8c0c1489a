#pragma once

#include <utility>
#include <vector>

#include "bicross/braiding.hpp"
#include "bicross/cocycles.hpp"
#include "bicross/matched_pair.hpp"
#include "bicross/smith.hpp"

namespace bicross {

// Exhaustive enumeration of braided-compatible pairs (sigma, tau) over mu_N.
struct SearchResult {
  Int total = 0;                 // exact number of valid pairs
  std::vector<GaugePair> found;  // the first min(total, limit), kernel order
  bool truncated = false;
};

// Every constraint on (sigma, tau) is linear in the exponents: normalization,
// both twisted cocycle identities, and the four braided-compatibility
// conditions. Stack them into one integer matrix and parameterize the kernel
// mod N; the parameterization is bijective, so total() is exact even when the
// solution set is far too large to list. Emitted pairs are re-validated
// through the ordinary checkers as a transcription guard.
inline SearchResult search_pairs(const MatchedPair& mp, int conductor, long long limit) {
  if (conductor < 1) throw Error(ErrorCode::BadParameters, "conductor must be positive");
  if (limit < 0) throw Error(ErrorCode::BadParameters, "negative result limit");
  if (mp.nG() * mp.nF() > 12)
    throw Error(ErrorCode::BadParameters, "search requires |G|*|F| <= 12");

  PairVars v(mp);
  Matrix A;
  auto push = [&](const LinRel& rel) {
    std::vector<Int> row(v.total(), 0);
    for (const auto& term : rel) row[term.var] += term.coef;
    A.push_back(std::move(row));
  };
  for_each_sigma_relation(mp, [&](ErrorCode, const LinRel& rel, auto&&) { push(rel); });
  for_each_tau_relation(mp, [&](ErrorCode, const LinRel& rel, auto&&) { push(rel); });
  for_each_braided_compat_relation(mp, [&](int, const LinRel& rel, auto&&) { push(rel); });

  ModKernel ker = kernel_mod(A, conductor);

  SearchResult out;
  out.total = ker.total();
  const Int want = out.total < limit ? out.total : Int(limit);
  out.truncated = want < out.total;

  std::vector<Int> t(ker.count.size(), 0);
  for (Int produced = 0; produced < want; ++produced) {
    std::vector<Int> x = ker.solution(t);
    GaugePair gp{SigmaTable::trivial(mp.nG(), mp.nF(), conductor),
                 TauTable::trivial(mp.nF(), mp.nG(), conductor)};
    for (int i = 0; i < v.sigma_count(); ++i) gp.sigma.e[i] = x[i].convert_to<int>();
    for (int i = 0; i < v.tau_count(); ++i)
      gp.tau.e[i] = x[v.sigma_count() + i].convert_to<int>();
    if (!validate_pair(gp.sigma, gp.tau, mp).ok() ||
        !check_theorem_conditions(mp, gp.sigma, gp.tau).ok())
      throw Error(ErrorCode::InternalCheck, "search produced an invalid pair");
    out.found.push_back(std::move(gp));

    // mixed-radix odometer over the kernel parameters
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (++t[i] < ker.count[i]) break;
      t[i] = 0;
    }
  }
  return out;
}

}  // namespace bicross
