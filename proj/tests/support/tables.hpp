#pragma once

// Random and structured cocycle/braiding tables for tests, plus test-side
// re-implementations of the defining identities (kept deliberately independent
// of the library's relation enumerators so the two transcriptions check each
// other).

#include <random>

#include "bicross/cocycles.hpp"
#include "bicross/cohomology.hpp"
#include "bicross/matched_pair.hpp"
#include "support/oracles.hpp"

namespace testutil {

using namespace bicross;

inline SigmaTable random_sigma(const MatchedPair& mp, int N, std::mt19937_64& g,
                               bool normalized) {
  SigmaTable s = SigmaTable::trivial(mp.nG(), mp.nF(), N);
  for (int gg = 0; gg < s.nG; ++gg)
    for (int x = 0; x < s.nF; ++x)
      for (int y = 0; y < s.nF; ++y) {
        if (normalized && (gg == 0 || x == 0 || y == 0)) continue;
        s.set(gg, x, y, rand_int(g, 0, N - 1));
      }
  return s;
}

inline TauTable random_tau(const MatchedPair& mp, int N, std::mt19937_64& g,
                           bool normalized) {
  TauTable t = TauTable::trivial(mp.nF(), mp.nG(), N);
  for (int x = 0; x < t.nF; ++x)
    for (int gg = 0; gg < t.nG; ++gg)
      for (int h = 0; h < t.nG; ++h) {
        if (normalized && (x == 0 || gg == 0 || h == 0)) continue;
        t.set(x, gg, h, rand_int(g, 0, N - 1));
      }
  return t;
}

inline NuTable random_nu(const MatchedPair& mp, int N, std::mt19937_64& g) {
  NuTable nu = NuTable::trivial(mp.nG(), mp.nF(), N);
  for (int gg = 1; gg < nu.nG; ++gg)
    for (int x = 1; x < nu.nF; ++x) nu.set(gg, x, rand_int(g, 0, N - 1));
  return nu;
}

inline Cochain random_cochain(const MatchedPair& mp, int q, int p, int N,
                              std::mt19937_64& g) {
  Cochain c = Cochain::trivial(mp, q, p, N);
  for (int& v : c.e) v = rand_int(g, 0, N - 1);
  return c;
}

// sigma_g(x,y) := f(g,x) f(g◁x,y) f(g,xy)^{-1}, written out from scratch.
inline SigmaTable sigma_coboundary_of(const MatchedPair& mp, const NuTable& f) {
  SigmaTable s = SigmaTable::trivial(mp.nG(), mp.nF(), f.conductor);
  for (int g = 0; g < s.nG; ++g)
    for (int x = 0; x < s.nF; ++x)
      for (int y = 0; y < s.nF; ++y)
        s.set(g, x, y,
              static_cast<long long>(f.exp(g, x)) + f.exp(mp.act_g(g, x), y) -
                  f.exp(g, mp.F.mul(x, y)));
  return s;
}

// Direct check of the sigma identities with RootOfUnity arithmetic.
inline bool direct_sigma_ok(const MatchedPair& mp, const SigmaTable& s) {
  const FiniteGroup& F = mp.F;
  for (int g = 0; g < mp.nG(); ++g)
    for (int x = 0; x < mp.nF(); ++x)
      if (!s.val(g, x, 0).is_one() || !s.val(g, 0, x).is_one()) return false;
  for (int x = 0; x < mp.nF(); ++x)
    for (int y = 0; y < mp.nF(); ++y)
      if (!s.val(0, x, y).is_one()) return false;
  for (int g = 0; g < mp.nG(); ++g)
    for (int x = 0; x < mp.nF(); ++x)
      for (int y = 0; y < mp.nF(); ++y)
        for (int z = 0; z < mp.nF(); ++z) {
          RootOfUnity lhs = s.val(mp.act_g(g, x), y, z) * s.val(g, x, F.mul(y, z));
          RootOfUnity rhs = s.val(g, F.mul(x, y), z) * s.val(g, x, y);
          if (lhs != rhs) return false;
        }
  return true;
}

inline bool direct_tau_ok(const MatchedPair& mp, const TauTable& t) {
  const FiniteGroup& G = mp.G;
  for (int x = 0; x < mp.nF(); ++x)
    for (int g = 0; g < mp.nG(); ++g)
      if (!t.val(x, g, 0).is_one() || !t.val(x, 0, g).is_one()) return false;
  for (int g = 0; g < mp.nG(); ++g)
    for (int h = 0; h < mp.nG(); ++h)
      if (!t.val(0, g, h).is_one()) return false;
  for (int x = 0; x < mp.nF(); ++x)
    for (int g = 0; g < mp.nG(); ++g)
      for (int h = 0; h < mp.nG(); ++h)
        for (int k = 0; k < mp.nG(); ++k) {
          RootOfUnity lhs = t.val(x, G.mul(g, h), k) * t.val(mp.act_f(k, x), g, h);
          RootOfUnity rhs = t.val(x, h, k) * t.val(x, g, G.mul(h, k));
          if (lhs != rhs) return false;
        }
  return true;
}

// The two-parameter family on G = F = (Z/p)^2 with both actions trivial:
//   sigma_{(α,β)}((x,y),(x',y')) = zeta_p^{(aα²+bβ²)(xy'-x'y)}
//   tau_{(x,y)}((α,β),(α',β'))   = zeta_p^{(x+y)(αβ'-α'β)}
// Built here from the closed forms, independent of the library's example
// constructors.
struct InlineDataset {
  MatchedPair mp;
  SigmaTable sigma;
  TauTable tau;
};

inline InlineDataset bilinear_family(int p, int a, int b) {
  InlineDataset d;
  FiniteGroup zp2 = direct_product(cyclic_group(p), cyclic_group(p));
  d.mp = trivial_actions_pair(zp2, zp2);
  const int n = p * p;
  d.sigma = SigmaTable::trivial(n, n, p);
  d.tau = TauTable::trivial(n, n, p);
  auto c1 = [p](int v) { return v / p; };  // first coordinate
  auto c2 = [p](int v) { return v % p; };  // second coordinate
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        long long alpha = c1(g), beta = c2(g);
        long long det = c1(x) * c2(y) - c1(y) * c2(x);
        d.sigma.set(g, x, y, (a * alpha * alpha + b * beta * beta) % p * det);
      }
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        long long sum = c1(x) + c2(x);
        long long det = c1(g) * c2(h) - c1(h) * c2(g);
        d.tau.set(x, g, h, sum % p * det);
      }
  return d;
}

}  // namespace testutil
