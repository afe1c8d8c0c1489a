#include <catch2/catch_amalgamated.hpp>

#include "bicross/cohomology.hpp"
#include "support/oracles.hpp"
#include "support/tables.hpp"

using namespace bicross;

namespace {

MatchedPair s3_pair() {
  auto s3 = testutil::symmetric_group(3);
  return from_factorization(
             s3.group, testutil::cyclic_span(s3, testutil::cycle({0, 1}, 3)),
             testutil::cyclic_span(s3, testutil::cycle({0, 1, 2}, 3)))
      .mp;
}

MatchedPair s4_pair() {
  auto s4 = testutil::symmetric_group(4);
  std::vector<int> f = testutil::cyclic_span(s4, testutil::cycle({0, 1, 2, 3}, 4));
  std::vector<int> g;
  for (size_t i = 0; i < s4.elems.size(); ++i)
    if (s4.elems[i][3] == 3) g.push_back(static_cast<int>(i));
  return from_factorization(s4.group, f, g).mp;
}

}  // namespace

TEST_CASE("differentials square to one and commute") {
  std::vector<MatchedPair> pairs = {
      trivial_actions_pair(cyclic_group(3), cyclic_group(4)), s3_pair(), s4_pair()};
  auto g = testutil::rng(160914);
  const int bidegrees[][2] = {{1, 1}, {2, 1}, {1, 2}};
  int total = 0;
  for (const MatchedPair& mp : pairs)
    for (int N : {2, 5, 8})
      for (const auto& d : bidegrees)
        for (int iter = 0; iter < 5; ++iter) {
          Cochain f = testutil::random_cochain(mp, d[0], d[1], N, g);
          INFO("pair " << mp.nG() << "x" << mp.nF() << " bidegree (" << d[0] << ","
                       << d[1] << ") N=" << N);
          REQUIRE(delta_h(mp, delta_h(mp, f)).is_trivial());
          REQUIRE(delta_v(mp, delta_v(mp, f)).is_trivial());
          REQUIRE(delta_h(mp, delta_v(mp, f)) == delta_v(mp, delta_h(mp, f)));
          ++total;
        }
  REQUIRE(total >= 100);
}

TEST_CASE("differentials reject unsupported bidegrees") {
  MatchedPair mp = s3_pair();
  Cochain c = Cochain::trivial(mp, 1, 4, 3);
  REQUIRE_THROWS_AS(delta_h(mp, c), Error);
  Cochain c2 = Cochain::trivial(mp, 4, 1, 3);
  try {
    delta_v(mp, c2);
    FAIL("expected BidegreeUnsupported");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::BidegreeUnsupported);
  }
  Cochain c3 = Cochain::trivial(mp, 2, 2, 3);  // supported corner still works
  REQUIRE(delta_h(mp, c3).is_trivial());
  REQUIRE(delta_v(mp, c3).is_trivial());
}

TEST_CASE("embedded tables are cocycles exactly when validators pass") {
  MatchedPair mp = s3_pair();
  auto g = testutil::rng(424242);
  int sigma_valid = 0, tau_valid = 0;
  for (int iter = 0; iter < 150; ++iter) {
    SigmaTable s = testutil::random_sigma(mp, 2, g, true);
    bool flat = delta_h(mp, sigma_hat(mp, s)).is_trivial();
    REQUIRE(flat == validate_sigma(s, mp).ok());
    if (flat) ++sigma_valid;

    TauTable t = testutil::random_tau(mp, 2, g, true);
    bool tflat = delta_v(mp, tau_hat(mp, t)).is_trivial();
    REQUIRE(tflat == validate_tau(t, mp).ok());
    if (tflat) ++tau_valid;
  }
  REQUIRE(sigma_valid > 0);
  REQUIRE(tau_valid > 0);
}

TEST_CASE("braiding equals the middle component of the total coboundary") {
  testutil::InlineDataset d = testutil::bilinear_family(3, 1, 1);
  Report rep = verify_corollary_q(d.mp, d.sigma, d.tau);
  REQUIRE(rep.ok());
  REQUIRE(rep.find("corollary-q") != nullptr);
  REQUIRE(rep.find("p1-trivial")->pass);
  REQUIRE(rep.find("p3-trivial")->pass);

  testutil::InlineDataset d2 = testutil::bilinear_family(3, 2, 1);
  REQUIRE(verify_corollary_q(d2.mp, d2.sigma, d2.tau).ok());

  // corrupting tau breaks the p1 component but not p3
  TauTable bad = d.tau;
  bad.set(1, 1, 1, bad.exp(1, 1, 1) + 1);
  Report broken = verify_corollary_q(d.mp, d.sigma, bad);
  REQUIRE_FALSE(broken.find("p1-trivial")->pass);
  REQUIRE(broken.find("p3-trivial")->pass);
}

TEST_CASE("total differential matches the gauge action componentwise") {
  testutil::InlineDataset d = testutil::bilinear_family(3, 1, 1);
  auto g = testutil::rng(271828);
  for (int iter = 0; iter < 8; ++iter) {
    NuTable nu = testutil::random_nu(d.mp, 3, g);
    GaugePair gp = apply_gauge(d.mp, d.sigma, d.tau, nu);
    TotalDegree2 dn = delta_tot1(d.mp, nu);
    REQUIRE(sigma_hat(d.mp, gp.sigma) ==
            sigma_hat(d.mp, d.sigma) * dn.c12.pow(-1));
    REQUIRE(tau_hat(d.mp, gp.tau) == tau_hat(d.mp, d.tau) * dn.c21.pow(-1));

    // total coboundaries are total cocycles
    TotalDegree3 dd = delta_tot2(d.mp, dn);
    REQUIRE(dd.c31.is_trivial());
    REQUIRE(dd.c22.is_trivial());
    REQUIRE(dd.c13.is_trivial());

    // hence the braiding is gauge invariant
    REQUIRE(compute_q(d.mp, gp.sigma, gp.tau) == compute_q(d.mp, d.sigma, d.tau));
  }
}

TEST_CASE("solve_equivalence recovers a planted gauge") {
  testutil::InlineDataset d = testutil::bilinear_family(3, 1, 2);
  auto g = testutil::rng(1618);
  for (int iter = 0; iter < 5; ++iter) {
    NuTable nu = testutil::random_nu(d.mp, 3, g);
    GaugePair gp = apply_gauge(d.mp, d.sigma, d.tau, nu);
    auto found = solve_equivalence(d.mp, d.sigma, d.tau, gp.sigma, gp.tau);
    REQUIRE(found.has_value());
    // solve_equivalence internally asserts apply_gauge(found) hits the target;
    // re-check against an independently applied gauge anyway
    GaugePair redo = apply_gauge(d.mp, d.sigma, d.tau, *found);
    REQUIRE(redo.sigma == gp.sigma);
    REQUIRE(redo.tau == gp.tau);
    // returned gauge is normalized
    REQUIRE(validate_nu(*found, d.mp).ok());
  }
}

TEST_CASE("solve_equivalence rejects inequivalent data") {
  testutil::InlineDataset d = testutil::bilinear_family(3, 1, 1);
  SigmaTable s1 = SigmaTable::trivial(d.mp.nG(), d.mp.nF(), 3);
  TauTable t1 = TauTable::trivial(d.mp.nF(), d.mp.nG(), 3);
  // equivalence to the trivial pair would make sigma a coboundary, which the
  // alternating bilinear class is not
  REQUIRE_FALSE(solve_equivalence(d.mp, s1, t1, d.sigma, d.tau).has_value());
  REQUIRE_FALSE(solve_equivalence(d.mp, d.sigma, d.tau, s1, t1).has_value());

  SigmaTable wrong = SigmaTable::trivial(d.mp.nG(), d.mp.nF(), 6);
  REQUIRE_THROWS_AS(solve_equivalence(d.mp, wrong, t1, d.sigma, d.tau), Error);
}
