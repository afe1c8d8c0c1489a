#pragma once

// Shared test helpers: permutation groups built from scratch (independent of
// the library's constructors), exact determinants, and RNG plumbing.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "bicross/group.hpp"
#include "bicross/smith.hpp"

namespace testutil {

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& p, const Perm& q) {  // (p∘q)(i) = p[q[i]]
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline std::vector<Perm> all_permutations(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;  // identity is lexicographically first
}

struct PermGroup {
  std::vector<Perm> elems;
  bicross::FiniteGroup group;

  int index_of(const Perm& p) const {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == p) return static_cast<int>(i);
    throw std::runtime_error("permutation not in group");
  }
};

inline PermGroup symmetric_group(int n) {
  PermGroup sg;
  sg.elems = all_permutations(n);
  const int m = static_cast<int>(sg.elems.size());
  std::map<Perm, int> pos;
  for (int i = 0; i < m; ++i) pos[sg.elems[i]] = i;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      rows[i][j] = pos.at(perm_compose(sg.elems[i], sg.elems[j]));
  sg.group = bicross::make_group(rows);
  return sg;
}

// Cycle notation helper: cycle({0,1,2}, 4) is the permutation 0->1->2->0 on
// 4 points.
inline Perm cycle(const std::vector<int>& pts, int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  for (size_t i = 0; i < pts.size(); ++i)
    p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

inline std::vector<int> cyclic_span(const PermGroup& sg, const Perm& gen) {
  std::vector<int> out;
  Perm cur = gen;
  Perm id(gen.size());
  std::iota(id.begin(), id.end(), 0);
  out.push_back(sg.index_of(id));
  while (cur != id) {
    out.push_back(sg.index_of(cur));
    cur = perm_compose(cur, gen);
  }
  return out;
}

// Fraction-free exact determinant (Bareiss).
inline bicross::Int bareiss_det(bicross::Matrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  bicross::Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline int rand_int(std::mt19937_64& g, int lo, int hi) {  // inclusive
  return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(g));
}

}  // namespace testutil
