#include <catch2/catch_amalgamated.hpp>

#include "bicross/braiding.hpp"
#include "bicross/cocycles.hpp"
#include "bicross/matched_pair.hpp"
#include "support/oracles.hpp"
#include "support/tables.hpp"

using namespace bicross;

namespace {

MatchedPair s3_pair() {
  auto s3 = testutil::symmetric_group(3);
  const std::vector<int> f = testutil::cyclic_span(s3, testutil::cycle({0, 1}, 3));
  const std::vector<int> g = testutil::cyclic_span(s3, testutil::cycle({0, 1, 2}, 3));
  return from_factorization(s3.group, f, g).mp;
}

MatchedPair s4_pair() {
  auto s4 = testutil::symmetric_group(4);
  const std::vector<int> f = testutil::cyclic_span(s4, testutil::cycle({0, 1, 2, 3}, 4));
  std::vector<int> g;  // permutations fixing the last point
  for (int i = 0; i < 24; ++i)
    if (s4.elems[i][3] == 3) g.push_back(i);
  return from_factorization(s4.group, f, g).mp;
}

// Q-law exponents computed from the def-q transcription. Tuple orders match
// the emission order of for_each_braided_compat_relation.
long long law_exponent(const MatchedPair& mp, const SigmaTable& s, const TauTable& t,
                       int k, int g, int s2, int t2, int x, int y, int z) {
  auto q = [&](int a, int b, int c, int d) { return q_exponent(mp, s, t, a, b, c, d); };
  switch (k) {
    case 1:
      return q(g, s2, x, mp.F.mul(y, z)) - q(g, s2, x, y) -
             q(g, mp.act_g(s2, y), x, z);
    case 2:
      return q(g, s2, mp.F.mul(x, y), z) - q(g, s2, x, z) -
             q(mp.act_g(g, x), s2, y, z);
    case 3:
      return q(g, mp.G.mul(t2, s2), x, y) - q(g, t2, x, mp.act_f(s2, y)) -
             q(g, s2, x, y);
    case 4:
      return q(mp.G.mul(g, t2), s2, x, y) - q(g, s2, mp.act_f(t2, x), y) -
             q(t2, s2, x, y);
  }
  FAIL("bad condition index");
  return 0;
}

}  // namespace

TEST_CASE("braiding normalization and the pinned value") {
  auto ds = testutil::bilinear_family(3, 1, 1);
  const BraidingTable q = compute_q(ds.mp, ds.sigma, ds.tau);
  CHECK(check_q_normalization(q, ds.mp).ok());

  // Indices follow (u, v) -> u*p + v on both factors.
  const int e10 = 3, e01 = 1;
  CHECK(q.exp(e10, e10, e10, e01) == 2);  // a primitive cube root squared
  CHECK(q.val(e10, e10, e10, e01) == RootOfUnity::make(3, 2));

  // Closed form across the full index range, two parameter choices.
  for (int a = 1; a <= 2; ++a) {
    auto d2 = testutil::bilinear_family(3, a, 1);
    const BraidingTable q2 = compute_q(d2.mp, d2.sigma, d2.tau);
    for (int g = 0; g < 9; ++g)
      for (int h = 0; h < 9; ++h)
        for (int x = 0; x < 9; ++x)
          for (int y = 0; y < 9; ++y) {
            const int al = g / 3, be = g % 3, al2 = h / 3, be2 = h % 3;
            const int x1 = x / 3, x2 = x % 3, y1 = y / 3, y2 = y % 3;
            const long long want = 2LL * (a * al * al2 + be * be2) * (x1 * y2 - x2 * y1);
            REQUIRE(q2.exp(g, h, x, y) == mod_exp(want, 3));
          }
  }
}

TEST_CASE("conditions (1)-(4) match the Q-law expansions tuple by tuple") {
  auto rng = testutil::rng(2024);
  std::vector<MatchedPair> pairs = {
      trivial_actions_pair(cyclic_group(3), cyclic_group(4)), s3_pair(), s4_pair()};
  for (const auto& mp : pairs)
    for (int iter = 0; iter < 3; ++iter) {
      const int N = 12;
      // Unnormalized tables on purpose: the identity is formal.
      const SigmaTable s = testutil::random_sigma(mp, N, rng, /*normalized=*/false);
      const TauTable t = testutil::random_tau(mp, N, rng, /*normalized=*/false);

      std::vector<std::vector<long long>> got(5);
      PairVars v(mp);
      for_each_braided_compat_relation(mp, [&](int k, const LinRel& rel, auto&&) {
        got[k].push_back(eval_rel(rel, v, s, t));
      });

      std::vector<std::vector<long long>> want(5);
      const int nG = mp.nG(), nF = mp.nF();
      for (int g = 0; g < nG; ++g)
        for (int s2 = 0; s2 < nG; ++s2)
          for (int x = 0; x < nF; ++x)
            for (int y = 0; y < nF; ++y)
              for (int z = 0; z < nF; ++z)
                want[1].push_back(mod_exp(law_exponent(mp, s, t, 1, g, s2, 0, x, y, z), N));
      for (int g = 0; g < nG; ++g)
        for (int s2 = 0; s2 < nG; ++s2)
          for (int x = 0; x < nF; ++x)
            for (int y = 0; y < nF; ++y)
              for (int z = 0; z < nF; ++z)
                want[2].push_back(mod_exp(law_exponent(mp, s, t, 2, g, s2, 0, x, y, z), N));
      for (int g = 0; g < nG; ++g)
        for (int s2 = 0; s2 < nG; ++s2)
          for (int t2 = 0; t2 < nG; ++t2)
            for (int x = 0; x < nF; ++x)
              for (int y = 0; y < nF; ++y)
                want[3].push_back(mod_exp(law_exponent(mp, s, t, 3, g, s2, t2, x, y, 0), N));
      for (int g = 0; g < nG; ++g)
        for (int t2 = 0; t2 < nG; ++t2)
          for (int s2 = 0; s2 < nG; ++s2)
            for (int x = 0; x < nF; ++x)
              for (int y = 0; y < nF; ++y)
                want[4].push_back(mod_exp(law_exponent(mp, s, t, 4, g, s2, t2, x, y, 0), N));

      for (int k = 1; k <= 4; ++k) {
        REQUIRE(got[k].size() == want[k].size());
        REQUIRE(got[k] == want[k]);
      }
    }
}

TEST_CASE("theorem conditions and Q-multiplicativity pass on compatible data") {
  auto ds = testutil::bilinear_family(3, 1, 1);
  const Report cond = check_theorem_conditions(ds.mp, ds.sigma, ds.tau);
  CHECK(cond.ok());
  for (const auto& c : cond.checks) CHECK(c.checked > 0);

  const BraidingTable q = compute_q(ds.mp, ds.sigma, ds.tau);
  CHECK(check_q_multiplicativity(q, ds.mp).ok());

  // Trivial tables on a pair with non-trivial actions.
  const MatchedPair mp = s4_pair();
  const SigmaTable s0 = SigmaTable::trivial(mp.nG(), mp.nF(), 6);
  const TauTable t0 = TauTable::trivial(mp.nF(), mp.nG(), 6);
  CHECK(check_theorem_conditions(mp, s0, t0).ok());
  CHECK(check_q_multiplicativity(compute_q(mp, s0, t0), mp).ok());
}

TEST_CASE("gauge transforms of the trivial pair stay compatible") {
  auto rng = testutil::rng(77);
  const MatchedPair mp = s4_pair();
  const int N = 6;
  for (int iter = 0; iter < 4; ++iter) {
    const NuTable nu = testutil::random_nu(mp, N, rng);
    const GaugePair gp = apply_gauge(mp, SigmaTable::trivial(mp.nG(), mp.nF(), N),
                                     TauTable::trivial(mp.nF(), mp.nG(), N), nu);
    REQUIRE(validate_pair(gp.sigma, gp.tau, mp).ok());
    CHECK(check_theorem_conditions(mp, gp.sigma, gp.tau).ok());
    const BraidingTable q = compute_q(mp, gp.sigma, gp.tau);
    CHECK(check_q_normalization(q, mp).ok());
    CHECK(check_q_multiplicativity(q, mp).ok());
    CHECK(check_prebraided_scalar(mp, gp.sigma, gp.tau, q).ok());
  }
}

TEST_CASE("verdicts of the two condition routes coincide on any tables") {
  auto rng = testutil::rng(4096);
  const MatchedPair mp = s3_pair();
  for (int iter = 0; iter < 20; ++iter) {
    const SigmaTable s = testutil::random_sigma(mp, 4, rng, true);
    const TauTable t = testutil::random_tau(mp, 4, rng, true);
    const bool via_conditions = check_theorem_conditions(mp, s, t).ok();
    const bool via_q = check_q_multiplicativity(compute_q(mp, s, t), mp).ok();
    REQUIRE(via_conditions == via_q);
  }
}

TEST_CASE("corrupted tables break the conditions with a witness") {
  auto ds = testutil::bilinear_family(3, 1, 1);

  SECTION("single tau entry") {
    TauTable bad = ds.tau;
    bad.set(1, 1, 2, bad.exp(1, 1, 2) + 1);
    const Report cond = check_theorem_conditions(ds.mp, ds.sigma, bad);
    REQUIRE_FALSE(cond.ok());
    bool witnessed = false;
    for (const auto& c : cond.checks)
      if (!c.pass) {
        CHECK(c.failed > 0);
        CHECK_FALSE(c.witness.empty());
        witnessed = true;
      }
    CHECK(witnessed);
    CHECK(check_theorem_conditions(ds.mp, ds.sigma, bad).ok() ==
          check_q_multiplicativity(compute_q(ds.mp, ds.sigma, bad), ds.mp).ok());
  }

  SECTION("single Q entry") {
    BraidingTable q = compute_q(ds.mp, ds.sigma, ds.tau);
    q.set(1, 1, 1, 2, q.exp(1, 1, 1, 2) + 1);
    const Report laws = check_q_multiplicativity(q, ds.mp);
    REQUIRE_FALSE(laws.ok());
    for (const auto& c : laws.checks)
      if (!c.pass) CHECK_FALSE(c.witness.empty());
  }

  SECTION("fail-fast stops at the first witness") {
    TauTable bad = ds.tau;
    bad.set(1, 1, 2, bad.exp(1, 1, 2) + 1);
    const Report rep = check_theorem_conditions(ds.mp, ds.sigma, bad, FailMode::FailFast);
    for (const auto& c : rep.checks)
      if (!c.pass) CHECK(c.failed == 1);
  }
}

TEST_CASE("prebraided condition singles out the canonical braiding") {
  auto ds = testutil::bilinear_family(3, 1, 1);
  const BraidingTable q = compute_q(ds.mp, ds.sigma, ds.tau);
  CHECK(check_prebraided_scalar(ds.mp, ds.sigma, ds.tau, q).ok());

  const BraidingTable ones = BraidingTable::trivial(ds.mp.nG(), ds.mp.nF(), 3);
  const Report rep = check_prebraided_scalar(ds.mp, ds.sigma, ds.tau, ones);
  REQUIRE_FALSE(rep.ok());
  CHECK_FALSE(rep.checks.front().witness.empty());

  // Trivial tables with the all-ones braiding: the ordinary Hopf case.
  const MatchedPair mp = s3_pair();
  const SigmaTable s0 = SigmaTable::trivial(mp.nG(), mp.nF(), 2);
  const TauTable t0 = TauTable::trivial(mp.nF(), mp.nG(), 2);
  CHECK(check_prebraided_scalar(mp, s0, t0,
                                BraidingTable::trivial(mp.nG(), mp.nF(), 2))
            .ok());
}
