#include <catch2/catch_amalgamated.hpp>

#include "bicross/bicrossed.hpp"
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
  std::vector<int> g;
  for (int i = 0; i < 24; ++i)
    if (s4.elems[i][3] == 3) g.push_back(i);
  return from_factorization(s4.group, f, g).mp;
}

BicrossedProduct trivial_tables_product(const MatchedPair& mp, int N) {
  return build_bicrossed(mp, SigmaTable::trivial(mp.nG(), mp.nF(), N),
                         TauTable::trivial(mp.nF(), mp.nG(), N));
}

RElement scaled_basis(const BicrossedProduct& R, int g, int x, int exp) {
  return r_scaled(r_basis(R, g, x),
                  CycInt::from_root(RootOfUnity::make(R.conductor, exp)));
}

}  // namespace

TEST_CASE("structure constants of the bilinear example") {
  auto ds = testutil::bilinear_family(3, 1, 1);
  const BicrossedProduct R = build_bicrossed(ds.mp, ds.sigma, ds.tau);
  REQUIRE(R.dim == 81);

  // (delta_{(1,0)}(1,0)) (delta_{(1,0)}(0,1)) = zeta_3 delta_{(1,0)}(1,1)
  const int e10 = 3, e01 = 1, e11 = 4;
  CHECK(multiply(r_basis(R, e10, e10), r_basis(R, e10, e01)) ==
        scaled_basis(R, e10, e11, 1));

  // Support condition: zero whenever h differs from g (trivial actions).
  CHECK(multiply(r_basis(R, 1, 1), r_basis(R, 2, 1)) == r_zero(R));

  // Comultiplication has exactly |G| terms with pairwise distinct left legs.
  for (int b = 0; b < R.dim; ++b) {
    REQUIRE(R.comult_terms[b].size() == 9);
    std::set<int> lefts;
    for (const auto& t : R.comult_terms[b]) lefts.insert(t.left);
    CHECK(lefts.size() == 9);
  }
}

TEST_CASE("products against normalized cocycles on a nontrivial pair") {
  const MatchedPair mp = s4_pair();
  const BicrossedProduct R = trivial_tables_product(mp, 6);
  REQUIRE(R.dim == 24);

  // (delta_g 1)(delta_h y) = [g = h] delta_g y.
  for (int g = 0; g < mp.nG(); ++g)
    for (int h = 0; h < mp.nG(); ++h)
      for (int y = 0; y < mp.nF(); ++y) {
        const RElement p = multiply(r_basis(R, g, 0), r_basis(R, h, y));
        if (g == h)
          CHECK(p == r_basis(R, g, y));
        else
          CHECK(p == r_zero(R));
      }

  // (delta_g x)(delta_h y) vanishes unless h = g<x.
  for (int g = 0; g < mp.nG(); ++g)
    for (int x = 0; x < mp.nF(); ++x)
      for (int h = 0; h < mp.nG(); ++h)
        if (h != mp.act_g(g, x))
          CHECK(multiply(r_basis(R, g, x), r_basis(R, h, 0)) == r_zero(R));
}

TEST_CASE("build rejects invalid data and mismatched parents") {
  auto ds = testutil::bilinear_family(3, 1, 1);

  SigmaTable bad = ds.sigma;
  bad.set(1, 1, 2, bad.exp(1, 1, 2) + 1);  // breaks the cocycle identity
  CHECK_THROWS_AS(build_bicrossed(ds.mp, bad, ds.tau), Error);

  const BicrossedProduct R1 = build_bicrossed(ds.mp, ds.sigma, ds.tau);
  const BicrossedProduct R2 = build_bicrossed(ds.mp, ds.sigma, ds.tau);
  CHECK_THROWS_AS(multiply(r_basis(R1, 0), r_basis(R2, 0)), Error);
  try {
    multiply(r_basis(R1, 0), r_basis(R2, 0));
    FAIL("expected a parent mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParentMismatch);
  }
}

TEST_CASE("bialgebra sweeps pass with the canonical braiding") {
  auto ds = testutil::bilinear_family(3, 1, 1);
  const BicrossedProduct R = build_bicrossed(ds.mp, ds.sigma, ds.tau);
  const BraidingTable q = compute_q(ds.mp, ds.sigma, ds.tau);

  const Report rep = verify_bialgebra(R, q);
  INFO(report_to_string(rep));
  CHECK(rep.ok());

  // Replacing Q by all-ones must break Delta-multiplicativity and only it.
  const BraidingTable ones = BraidingTable::trivial(ds.mp.nG(), ds.mp.nF(), 3);
  const Report rep2 = verify_bialgebra(R, ones);
  REQUIRE_FALSE(rep2.ok());
  for (const auto& c : rep2.checks) {
    if (c.name == "comult-mult") {
      CHECK_FALSE(c.pass);
      CHECK_FALSE(c.witness.empty());
    } else {
      CHECK(c.pass);
    }
  }
}

TEST_CASE("bialgebra sweeps on trivial tables over nontrivial pairs") {
  for (const MatchedPair& mp : {s3_pair(), s4_pair()}) {
    const BicrossedProduct R = trivial_tables_product(mp, 4);
    const BraidingTable q = BraidingTable::trivial(mp.nG(), mp.nF(), 4);
    CHECK(verify_bialgebra(R, q).ok());
    CHECK(antipode_checks(R).ok());
    CHECK(check_prebraided(R, q).ok());
  }
}

TEST_CASE("antipode agrees with both oracles") {
  SECTION("bilinear example") {
    auto ds = testutil::bilinear_family(3, 1, 1);
    const BicrossedProduct R = build_bicrossed(ds.mp, ds.sigma, ds.tau);
    const Report rep = antipode_checks(R);
    INFO(report_to_string(rep));
    CHECK(rep.ok());

    // S(delta_g 1) = delta_{g^-1} 1 and S(unit) = unit.
    for (int g = 0; g < 9; ++g)
      CHECK(antipode(r_basis(R, g, 0)) == r_basis(R, ds.mp.G.inv(g), 0));
    CHECK(antipode(r_unit(R)) == r_unit(R));
  }

  SECTION("gauge pairs on the S4-derived pair") {
    auto rng = testutil::rng(11);
    const MatchedPair mp = s4_pair();
    const int N = 6;
    for (int iter = 0; iter < 3; ++iter) {
      const NuTable nu = testutil::random_nu(mp, N, rng);
      const GaugePair gp = apply_gauge(mp, SigmaTable::trivial(mp.nG(), mp.nF(), N),
                                       TauTable::trivial(mp.nF(), mp.nG(), N), nu);
      const BicrossedProduct R = build_bicrossed(mp, gp.sigma, gp.tau);
      const Report rep = antipode_checks(R);
      INFO(report_to_string(rep));
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("prebraided report keeps the scalar and tensor routes in sync") {
  auto ds = testutil::bilinear_family(3, 1, 1);
  const BicrossedProduct R = build_bicrossed(ds.mp, ds.sigma, ds.tau);

  const BraidingTable q = compute_q(ds.mp, ds.sigma, ds.tau);
  const Report good = check_prebraided(R, q);
  CHECK(good.ok());

  const BraidingTable ones = BraidingTable::trivial(ds.mp.nG(), ds.mp.nF(), 3);
  const Report bad = check_prebraided(R, ones);
  REQUIRE_FALSE(bad.ok());
  REQUIRE(bad.find("prebraided-agreement") != nullptr);
  CHECK(bad.find("prebraided-agreement")->pass);
  CHECK_FALSE(bad.find("prebraided-compat")->pass);
  CHECK_FALSE(bad.find("prebraided-delta-mult")->pass);
}

TEST_CASE("commutativity flags distinguish the ordinary and braided senses") {
  SECTION("trivial everything") {
    const MatchedPair mp = trivial_actions_pair(cyclic_group(3), cyclic_group(4));
    const BicrossedProduct R = trivial_tables_product(mp, 3);
    const auto fl = commutativity_flags(R, BraidingTable::trivial(3, 4, 3));
    CHECK(fl.commutative);
    CHECK(fl.cocommutative);
    CHECK(fl.braided_commutative);
    CHECK(fl.braided_cocommutative);
  }

  SECTION("bilinear example") {
    auto ds = testutil::bilinear_family(3, 1, 1);
    const BicrossedProduct R = build_bicrossed(ds.mp, ds.sigma, ds.tau);
    const auto fl = commutativity_flags(R, compute_q(ds.mp, ds.sigma, ds.tau));
    CHECK_FALSE(fl.commutative);
    CHECK_FALSE(fl.cocommutative);
    // The braiding exactly compensates the antisymmetric part of sigma but
    // not of tau.
    CHECK(fl.braided_commutative);
    CHECK_FALSE(fl.braided_cocommutative);
  }

  SECTION("nontrivial actions, trivial tables") {
    const BicrossedProduct R = trivial_tables_product(s4_pair(), 4);
    const auto fl =
        commutativity_flags(R, BraidingTable::trivial(R.nG(), R.nF(), 4));
    CHECK_FALSE(fl.commutative);
    CHECK_FALSE(fl.cocommutative);
    CHECK_FALSE(fl.braided_commutative);
    CHECK_FALSE(fl.braided_cocommutative);
  }
}

TEST_CASE("braiding auxiliary checks") {
  auto ds = testutil::bilinear_family(3, 1, 1);
  const BicrossedProduct R = build_bicrossed(ds.mp, ds.sigma, ds.tau);
  const BraidingTable q = compute_q(ds.mp, ds.sigma, ds.tau);

  const Report rep = auxiliary_checks(R, q);
  INFO(report_to_string(rep));
  CHECK(rep.ok());

  // The symmetrization Q^{x,y}_{g,h} Q^{y,x}_{h,g} collapses here: swapping
  // both index pairs flips the sign of the exponent.
  CHECK(symmetrization_orders(ds.mp, q) == std::vector<int>{1});

  BraidingTable skew = q;
  skew.set(1, 2, 1, 1, skew.exp(1, 2, 1, 1) + 1);
  CHECK(symmetrization_orders(ds.mp, skew) == std::vector<int>{1, 3});
}

TEST_CASE("braided adjoint closed form and unit behaviour") {
  struct Case {
    BicrossedProduct R;
    BraidingTable q;
  };
  std::vector<Case> cases;
  {
    auto ds = testutil::bilinear_family(3, 1, 1);
    cases.push_back(
        {build_bicrossed(ds.mp, ds.sigma, ds.tau), compute_q(ds.mp, ds.sigma, ds.tau)});
  }
  {
    const MatchedPair mp = s3_pair();
    cases.push_back({trivial_tables_product(mp, 2),
                     BraidingTable::trivial(mp.nG(), mp.nF(), 2)});
    auto rng = testutil::rng(5);
    const NuTable nu = testutil::random_nu(mp, 4, rng);
    const GaugePair gp = apply_gauge(mp, SigmaTable::trivial(mp.nG(), mp.nF(), 4),
                                     TauTable::trivial(mp.nF(), mp.nG(), 4), nu);
    const MatchedPair mp2 = mp;
    cases.push_back({build_bicrossed(mp2, gp.sigma, gp.tau),
                     compute_q(mp2, gp.sigma, gp.tau)});
  }

  for (const auto& cs : cases) {
    const BicrossedProduct& R = cs.R;
    const MatchedPair& mp = R.mp;
    // ad_c(delta_g x)(delta_h 1) = [g = 1] delta_{(h^-1 < x^-1)^-1} 1.
    for (int g = 0; g < mp.nG(); ++g)
      for (int x = 0; x < mp.nF(); ++x)
        for (int h = 0; h < mp.nG(); ++h) {
          const RElement got =
              braided_adjoint(R, cs.q, R.basis(g, x), R.basis(h, 0));
          if (g != 0) {
            CHECK(got == r_zero(R));
          } else {
            const int tgt = mp.G.inv(mp.act_g(mp.G.inv(h), mp.F.inv(x)));
            CHECK(got == r_basis(R, tgt, 0));
          }
        }
    // Summing the adjoint of the unit's components acts as the identity.
    for (int b = 0; b < R.dim; ++b) {
      RElement sum = r_zero(R);
      for (int g = 0; g < mp.nG(); ++g)
        r_accumulate(sum, braided_adjoint(R, cs.q, R.basis(g, 0), b),
                     CycInt::one(R.conductor));
      CHECK(sum == r_basis(R, b));
    }
  }
}

TEST_CASE("theta equivalence") {
  const MatchedPair mp = s4_pair();
  const int N = 6;

  SECTION("identity gauge on equal products") {
    const BicrossedProduct R = trivial_tables_product(mp, N);
    const NuTable one = NuTable::trivial(mp.nG(), mp.nF(), N);
    CHECK(theta_equivalence(R, R, one).ok());
  }

  SECTION("a planted gauge is an isomorphism of extensions") {
    auto rng = testutil::rng(31);
    for (int iter = 0; iter < 3; ++iter) {
      const NuTable nu = testutil::random_nu(mp, N, rng);
      const SigmaTable s0 = SigmaTable::trivial(mp.nG(), mp.nF(), N);
      const TauTable t0 = TauTable::trivial(mp.nF(), mp.nG(), N);
      const GaugePair gp = apply_gauge(mp, s0, t0, nu);
      const BicrossedProduct R = build_bicrossed(mp, s0, t0);
      const BicrossedProduct R2 = build_bicrossed(mp, gp.sigma, gp.tau);
      const Report rep = theta_equivalence(R, R2, nu);
      INFO(report_to_string(rep));
      CHECK(rep.ok());
    }
  }

  SECTION("non-equivalent data fails with a witness, routes agreeing") {
    auto ds = testutil::bilinear_family(3, 1, 1);
    const BicrossedProduct R = build_bicrossed(ds.mp, ds.sigma, ds.tau);
    const BicrossedProduct R2 = trivial_tables_product(ds.mp, 3);
    auto rng = testutil::rng(99);
    const NuTable nu = testutil::random_nu(ds.mp, 3, rng);
    const Report rep = theta_equivalence(R, R2, nu);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.find("theta-cohomology-agreement")->pass);
    bool witnessed = false;
    for (const auto& c : rep.checks)
      if (!c.pass && !c.witness.empty()) witnessed = true;
    CHECK(witnessed);
  }

  SECTION("mismatched shapes are rejected") {
    const BicrossedProduct R = trivial_tables_product(mp, N);
    const BicrossedProduct R2 = trivial_tables_product(s3_pair(), N);
    const NuTable one = NuTable::trivial(mp.nG(), mp.nF(), N);
    CHECK_THROWS_AS(theta_equivalence(R, R2, one), Error);
  }
}
