#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "bicross/examples.hpp"
#include "bicross/search.hpp"
#include "support/oracles.hpp"
#include "support/tables.hpp"

using namespace bicross;

namespace {

MatchedPair s3_pair() {
  auto s3 = testutil::symmetric_group(3);
  std::vector<int> f = testutil::cyclic_span(s3, testutil::cycle({0, 1}, 3));
  std::vector<int> g = testutil::cyclic_span(s3, testutil::cycle({0, 1, 2}, 3));
  return from_factorization(s3.group, f, g).mp;
}

bool next_table(std::vector<int>& e, int N) {
  for (auto& v : e) {
    if (++v < N) return true;
    v = 0;
  }
  return false;
}

// every (sigma, tau) over mu_N, filtered through the ordinary validators
std::set<std::pair<std::vector<int>, std::vector<int>>> brute_force(const MatchedPair& mp,
                                                                    int N) {
  std::vector<SigmaTable> sigmas;
  SigmaTable s = SigmaTable::trivial(mp.nG(), mp.nF(), N);
  do {
    if (validate_sigma(s, mp, FailMode::FailFast).ok()) sigmas.push_back(s);
  } while (next_table(s.e, N));

  std::vector<TauTable> taus;
  TauTable t = TauTable::trivial(mp.nF(), mp.nG(), N);
  do {
    if (validate_tau(t, mp, FailMode::FailFast).ok()) taus.push_back(t);
  } while (next_table(t.e, N));

  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& sg : sigmas)
    for (const auto& tu : taus)
      if (check_theorem_conditions(mp, sg, tu, FailMode::FailFast).ok())
        out.emplace(sg.e, tu.e);
  return out;
}

std::set<std::pair<std::vector<int>, std::vector<int>>> as_set(
    const std::vector<GaugePair>& found) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& gp : found) out.emplace(gp.sigma.e, gp.tau.e);
  return out;
}

}  // namespace

TEST_CASE("search agrees with brute force on tiny pairs", "[search]") {
  struct Case {
    MatchedPair mp;
    int conductor;
  };
  std::vector<Case> cases;
  cases.push_back({trivial_actions_pair(cyclic_group(2), cyclic_group(2)), 2});
  cases.push_back({trivial_actions_pair(cyclic_group(2), cyclic_group(2)), 3});
  cases.push_back({trivial_actions_pair(cyclic_group(2), cyclic_group(2)), 4});
  cases.push_back({trivial_actions_pair(cyclic_group(3), cyclic_group(2)), 2});
  cases.push_back({s3_pair(), 2});

  for (const auto& c : cases) {
    CAPTURE(c.mp.nG(), c.mp.nF(), c.conductor);
    auto oracle = brute_force(c.mp, c.conductor);
    SearchResult res = search_pairs(c.mp, c.conductor, 1'000'000);
    CHECK(res.total == Int(oracle.size()));
    CHECK_FALSE(res.truncated);
    REQUIRE(res.found.size() == oracle.size());
    CHECK(as_set(res.found) == oracle);
  }
}

TEST_CASE("search enumeration starts at the trivial pair and truncates", "[search]") {
  MatchedPair mp = s3_pair();
  SearchResult all = search_pairs(mp, 6, 1'000'000);
  REQUIRE(!all.found.empty());
  CHECK(std::all_of(all.found[0].sigma.e.begin(), all.found[0].sigma.e.end(),
                    [](int v) { return v == 0; }));
  CHECK(std::all_of(all.found[0].tau.e.begin(), all.found[0].tau.e.end(),
                    [](int v) { return v == 0; }));

  // distinct results, and the count matches the parameterization exactly
  CHECK(as_set(all.found).size() == all.found.size());
  CHECK(all.total == Int(all.found.size()));

  SearchResult cut = search_pairs(mp, 6, 3);
  REQUIRE(cut.found.size() == 3);
  CHECK(cut.truncated);
  CHECK(cut.total == all.total);
  for (int i = 0; i < 3; ++i) {
    CHECK(cut.found[i].sigma == all.found[i].sigma);
    CHECK(cut.found[i].tau == all.found[i].tau);
  }

  SearchResult none = search_pairs(mp, 6, 0);
  CHECK(none.found.empty());
  CHECK(none.truncated);
  CHECK(none.total == all.total);

  CHECK(all.total == search_pairs(mp, 2, 0).total * search_pairs(mp, 3, 0).total);
}

TEST_CASE("search finds the cyclic carry datasets", "[search]") {
  ExampleDataset cyc = cyclic_example(3, 2, 1, 1);
  SearchResult res = search_pairs(cyc.mp, 6, 1'000'000);
  REQUIRE_FALSE(res.truncated);
  REQUIRE(res.found.size() >= 2);
  auto members = as_set(res.found);

  // every parameter choice of the family is a solution
  for (int w = 0; w < 6; ++w)
    for (int m = 0; m < 6; ++m) {
      ExampleDataset d = cyclic_example(3, 2, w, m);
      CHECK(members.count({d.sigma.e, d.tau.e}) == 1);
    }

  // the constraints are homogeneous linear, so solutions form a group
  const auto& a = res.found[1];
  const auto& b = res.found.back();
  GaugePair sum{SigmaTable::trivial(cyc.mp.nG(), cyc.mp.nF(), 6),
                TauTable::trivial(cyc.mp.nF(), cyc.mp.nG(), 6)};
  for (size_t i = 0; i < sum.sigma.e.size(); ++i)
    sum.sigma.e[i] = (a.sigma.e[i] + b.sigma.e[i]) % 6;
  for (size_t i = 0; i < sum.tau.e.size(); ++i)
    sum.tau.e[i] = (a.tau.e[i] + b.tau.e[i]) % 6;
  CHECK(members.count({sum.sigma.e, sum.tau.e}) == 1);

  // composite-conductor count splits over the prime parts
  CHECK(res.total == search_pairs(cyc.mp, 2, 0).total * search_pairs(cyc.mp, 3, 0).total);
}

TEST_CASE("search guards its input", "[search]") {
  MatchedPair big = trivial_actions_pair(cyclic_group(4), cyclic_group(4));
  CHECK_THROWS_AS(search_pairs(big, 2, 10), Error);
  MatchedPair ok = trivial_actions_pair(cyclic_group(2), cyclic_group(2));
  CHECK_THROWS_AS(search_pairs(ok, 0, 10), Error);
  CHECK_THROWS_AS(search_pairs(ok, 2, -1), Error);
  try {
    search_pairs(big, 2, 10);
    FAIL("expected BadParameters");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadParameters);
  }
}
