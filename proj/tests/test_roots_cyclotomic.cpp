#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bicross/cyclotomic.hpp"
#include "bicross/roots.hpp"

using namespace bicross;

TEST_CASE("root of unity arithmetic") {
  RootOfUnity a = RootOfUnity::make(12, 5);
  RootOfUnity b = RootOfUnity::make(12, 9);
  REQUIRE((a * b).exp == 2);
  REQUIRE((a / b).exp == 8);
  REQUIRE(a.inverse().exp == 7);
  REQUIRE(a.pow(12).is_one());
  REQUIRE(a.pow(-1) == a.inverse());
  REQUIRE(RootOfUnity::make(12, -5).exp == 7);
  REQUIRE(RootOfUnity::make(12, 29).exp == 5);
  REQUIRE(a.order() == 12);
  REQUIRE(RootOfUnity::make(12, 8).order() == 3);
  REQUIRE(RootOfUnity::one(12).order() == 1);
  REQUIRE_THROWS_AS(a * RootOfUnity::one(6), Error);
  REQUIRE_THROWS_AS(RootOfUnity::make(0, 0), Error);
}

TEST_CASE("conductor rescaling") {
  RootOfUnity z3 = RootOfUnity::make(3, 1);
  RootOfUnity z12 = rescale_conductor(z3, 12);
  REQUIRE(z12.conductor == 12);
  REQUIRE(z12.exp == 4);
  // back down: zeta_12^4 lives in mu_3
  RootOfUnity back = rescale_conductor(z12, 3);
  REQUIRE(back == z3);
  // zeta_12 itself does not live in mu_3
  REQUIRE_THROWS_AS(rescale_conductor(RootOfUnity::make(12, 1), 3), Error);
  REQUIRE(rescale_exp(2, 3, 12) == 8);
  REQUIRE_THROWS_AS(rescale_exp(1, 4, 6), Error);

  REQUIRE(exponent_order(12, 8) == 3);
  REQUIRE(exponent_order(12, 0) == 1);
  REQUIRE(exponent_order(7, 3) == 7);
}

TEST_CASE("cyclotomic polynomials, frozen values") {
  using V = std::vector<long long>;
  REQUIRE(cyclotomic_polynomial(1) == V{-1, 1});
  REQUIRE(cyclotomic_polynomial(2) == V{1, 1});
  REQUIRE(cyclotomic_polynomial(3) == V{1, 1, 1});
  REQUIRE(cyclotomic_polynomial(4) == V{1, 0, 1});
  REQUIRE(cyclotomic_polynomial(5) == V{1, 1, 1, 1, 1});
  REQUIRE(cyclotomic_polynomial(6) == V{1, -1, 1});
  REQUIRE(cyclotomic_polynomial(8) == V{1, 0, 0, 0, 1});
  REQUIRE(cyclotomic_polynomial(9) == V{1, 0, 0, 1, 0, 0, 1});
  REQUIRE(cyclotomic_polynomial(10) == V{1, -1, 1, -1, 1});
  REQUIRE(cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
  // degree is euler_phi(n)
  for (int n = 1; n <= 30; ++n)
    REQUIRE(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("euler phi") {
  REQUIRE(euler_phi(1) == 1);
  REQUIRE(euler_phi(2) == 1);
  REQUIRE(euler_phi(9) == 6);
  REQUIRE(euler_phi(12) == 4);
  REQUIRE(euler_phi(97) == 96);
  REQUIRE(euler_phi(100) == 40);
}

TEST_CASE("cyclotomic integers embed roots of unity faithfully") {
  for (int n = 1; n <= 12; ++n) {
    // distinct powers of zeta_n stay distinct after reduction mod Phi_n
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        REQUIRE(CycInt::from_root(RootOfUnity::make(n, i)) !=
                CycInt::from_root(RootOfUnity::make(n, j)));
    // multiplicativity: the embedding is a homomorphism mu_n -> Z[zeta_n]^*
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        REQUIRE(CycInt::from_root(RootOfUnity::make(n, i)) *
                    CycInt::from_root(RootOfUnity::make(n, j)) ==
                CycInt::from_root(RootOfUnity::make(n, i + j)));
  }
}

TEST_CASE("vanishing sums of all n-th roots") {
  for (int n = 2; n <= 24; ++n) {
    CycInt s = CycInt::zero(n);
    for (int k = 0; k < n; ++k) s = s + CycInt::from_root(RootOfUnity::make(n, k));
    INFO("n = " << n);
    REQUIRE(s.is_zero());
  }
}

TEST_CASE("cyclotomic integer ring operations") {
  CycInt one = CycInt::one(5);
  CycInt z = CycInt::from_root(RootOfUnity::make(5, 1));
  CycInt p = one + z + z * z + z * z * z + z * z * z * z;
  REQUIRE(p.is_zero());
  REQUIRE((z - z).is_zero());
  REQUIRE(-(-z) == z);
  REQUIRE(CycInt::integer(5, 3) + CycInt::integer(5, -3) == CycInt::zero(5));
  REQUIRE(CycInt::integer(5, 2) * CycInt::integer(5, 3) == CycInt::integer(5, 6));
  REQUIRE_THROWS_AS(CycInt::one(5) + CycInt::one(7), Error);
  // 1 - zeta_4 squared = -2 zeta_4: (1-i)^2 = -2i
  CycInt i4 = CycInt::from_root(RootOfUnity::make(4, 1));
  CycInt d = CycInt::one(4) - i4;
  REQUIRE(d * d == -(i4 + i4));
}
