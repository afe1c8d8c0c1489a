#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bicross/group.hpp"
#include "bicross/report.hpp"

namespace bicross {

// Matched pair (F, G, ▷, ◁): a right action ◁ of F on the set G and a left
// action ▷ of G on the set F, compatible with both group laws:
//   g ▷ (xy) = (g▷x)((g◁x)▷y)      and      (gh) ◁ x = (g◁(h▷x))(h◁x),
// together with g▷1 = 1 and 1◁x = 1. JSON field "act_l" is the ◁ table
// (G-valued), "act_r" the ▷ table (F-valued), both |G| x |F|.
struct MatchedPair {
  FiniteGroup F, G;
  std::vector<int> ract;  // g ◁ x, flattened [g * |F| + x] -> G index
  std::vector<int> lact;  // g ▷ x, flattened [g * |F| + x] -> F index

  int act_g(int g, int x) const { return ract[g * F.size() + x]; }  // g ◁ x
  int act_f(int g, int x) const { return lact[g * F.size() + x]; }  // g ▷ x
  int nF() const { return F.size(); }
  int nG() const { return G.size(); }

  bool ract_trivial() const {
    for (int g = 0; g < nG(); ++g)
      for (int x = 0; x < nF(); ++x)
        if (act_g(g, x) != g) return false;
    return true;
  }
  bool lact_trivial() const {
    for (int g = 0; g < nG(); ++g)
      for (int x = 0; x < nF(); ++x)
        if (act_f(g, x) != x) return false;
    return true;
  }

  bool same_shape(const MatchedPair& o) const {
    return F.table() == o.F.table() && G.table() == o.G.table() && ract == o.ract &&
           lact == o.lact;
  }
};

inline MatchedPair trivial_actions_pair(const FiniteGroup& G, const FiniteGroup& F) {
  MatchedPair mp;
  mp.F = F;
  mp.G = G;
  mp.ract.resize(G.size() * F.size());
  mp.lact.resize(G.size() * F.size());
  for (int g = 0; g < G.size(); ++g)
    for (int x = 0; x < F.size(); ++x) {
      mp.ract[g * F.size() + x] = g;
      mp.lact[g * F.size() + x] = x;
    }
  return mp;
}

inline ValidationReport validate_matched_pair(const MatchedPair& mp) {
  ValidationReport rep;
  const int nG = mp.nG(), nF = mp.nF();
  if (static_cast<int>(mp.ract.size()) != nG * nF ||
      static_cast<int>(mp.lact.size()) != nG * nF) {
    rep.add(ErrorCode::BadTable, "action table size");
    return rep;
  }
  for (int v : mp.ract)
    if (v < 0 || v >= nG) {
      rep.add(ErrorCode::BadTable, witness("ract_entry", v));
      return rep;
    }
  for (int v : mp.lact)
    if (v < 0 || v >= nF) {
      rep.add(ErrorCode::BadTable, witness("lact_entry", v));
      return rep;
    }

  // ◁ is a right F-action on G, with 1 ◁ x = 1
  for (int g = 0; g < nG; ++g)
    if (mp.act_g(g, 0) != g) rep.add(ErrorCode::NotRightAction, witness("g", g, "x", 0));
  for (int x = 0; x < nF; ++x)
    if (mp.act_g(0, x) != 0) rep.add(ErrorCode::NotRightAction, witness("g", 0, "x", x));
  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x)
      for (int y = 0; y < nF; ++y)
        if (mp.act_g(mp.act_g(g, x), y) != mp.act_g(g, mp.F.mul(x, y)))
          rep.add(ErrorCode::NotRightAction, witness("g", g, "x", x, "y", y));

  // ▷ is a left G-action on F, with g ▷ 1 = 1
  for (int x = 0; x < nF; ++x)
    if (mp.act_f(0, x) != x) rep.add(ErrorCode::NotLeftAction, witness("g", 0, "x", x));
  for (int g = 0; g < nG; ++g)
    if (mp.act_f(g, 0) != 0) rep.add(ErrorCode::NotLeftAction, witness("g", g, "x", 0));
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      for (int x = 0; x < nF; ++x)
        if (mp.act_f(mp.G.mul(g, h), x) != mp.act_f(g, mp.act_f(h, x)))
          rep.add(ErrorCode::NotLeftAction, witness("g", g, "h", h, "x", x));

  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x)
      for (int y = 0; y < nF; ++y)
        if (mp.act_f(g, mp.F.mul(x, y)) !=
            mp.F.mul(mp.act_f(g, x), mp.act_f(mp.act_g(g, x), y)))
          rep.add(ErrorCode::Comp1Fails, witness("g", g, "x", x, "y", y));

  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      for (int x = 0; x < nF; ++x)
        if (mp.act_g(mp.G.mul(g, h), x) !=
            mp.G.mul(mp.act_g(g, mp.act_f(h, x)), mp.act_g(h, x)))
          rep.add(ErrorCode::Comp2Fails, witness("g", g, "h", h, "x", x));

  return rep;
}

// Factorization result: the abstract matched pair plus the embeddings of
// F and G back into Sigma (index lists, identity first).
struct FactorizationResult {
  MatchedPair mp;
  std::vector<int> f_embed, g_embed;
};

// Builds the matched pair induced by an exact factorization Sigma = F G:
// every product g*x (in Sigma) factors uniquely as (g▷x)(g◁x) with
// g▷x in F, g◁x in G.
inline FactorizationResult from_factorization(const FiniteGroup& sigma,
                                              std::vector<int> f_elems,
                                              std::vector<int> g_elems) {
  auto check_subgroup = [&](std::vector<int>& elems, const char* tag) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<char> in(sigma.size(), 0);
    for (int e : elems) {
      if (e < 0 || e >= sigma.size())
        throw Error(ErrorCode::NotSubgroup, witness("set", tag, "element", e));
      in[e] = 1;
    }
    if (!in[0]) throw Error(ErrorCode::NotSubgroup, witness("set", tag, "missing", 0));
    for (int a : elems)
      for (int b : elems)
        if (!in[sigma.mul(a, b)])
          throw Error(ErrorCode::NotSubgroup, witness("set", tag, "a", a, "b", b));
    for (int a : elems)
      if (!in[sigma.inv(a)])
        throw Error(ErrorCode::NotSubgroup, witness("set", tag, "element", a));
    // identity first, remaining elements in ascending Sigma order
    std::vector<int> ordered;
    ordered.push_back(0);
    for (int e : elems)
      if (e != 0) ordered.push_back(e);
    elems = ordered;
  };
  check_subgroup(f_elems, "F");
  check_subgroup(g_elems, "G");

  const int nf = static_cast<int>(f_elems.size());
  const int ng = static_cast<int>(g_elems.size());
  if (nf * ng != sigma.size())
    throw Error(ErrorCode::NotExactFactorization,
                witness("|F|*|G|", nf * ng, "|Sigma|", sigma.size()));

  // unique factorization s = f * g
  std::vector<std::pair<int, int>> split(sigma.size(), {-1, -1});
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < ng; ++j) {
      int s = sigma.mul(f_elems[i], g_elems[j]);
      if (split[s].first != -1)
        throw Error(ErrorCode::NotExactFactorization, witness("element", s));
      split[s] = {i, j};
    }

  auto subtable = [&](const std::vector<int>& elems) {
    const int n = static_cast<int>(elems.size());
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[elems[i]] = i;
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) rows[a][b] = pos.at(sigma.mul(elems[a], elems[b]));
    return make_group(rows);
  };

  FactorizationResult out;
  out.f_embed = f_elems;
  out.g_embed = g_elems;
  out.mp.F = subtable(f_elems);
  out.mp.G = subtable(g_elems);
  out.mp.ract.resize(ng * nf);
  out.mp.lact.resize(ng * nf);
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nf; ++x) {
      auto [fi, gj] = split[sigma.mul(g_elems[g], f_elems[x])];
      out.mp.lact[g * nf + x] = fi;
      out.mp.ract[g * nf + x] = gj;
    }
  validate_matched_pair(out.mp).require();
  return out;
}

// ---------------------------------------------------------------------------
// Square calculus: the set of |G|*|F| squares with top edge g, right edge x,
// left edge v = g ▷ x and bottom edge t = g ◁ x (so that g x = v t in any
// group Sigma realizing the pair). Squares compose horizontally when
// right(A) = left(B) and vertically when bottom(A) = top(B).

struct Square {
  int g, v, x, t;  // top, left, right, bottom

  friend bool operator==(const Square& a, const Square& b) {
    return a.g == b.g && a.v == b.v && a.x == b.x && a.t == b.t;
  }
  friend bool operator!=(const Square& a, const Square& b) { return !(a == b); }
};

inline Square square_of(const MatchedPair& mp, int g, int x) {
  return Square{g, mp.act_f(g, x), x, mp.act_g(g, x)};
}

inline bool square_in_set(const MatchedPair& mp, const Square& s) {
  return s.v == mp.act_f(s.g, s.x) && s.t == mp.act_g(s.g, s.x);
}

inline std::vector<Square> all_squares(const MatchedPair& mp) {
  std::vector<Square> out;
  out.reserve(mp.nG() * mp.nF());
  for (int g = 0; g < mp.nG(); ++g)
    for (int x = 0; x < mp.nF(); ++x) out.push_back(square_of(mp, g, x));
  return out;
}

enum class Dir { Horizontal, Vertical };

inline bool can_compose(const MatchedPair& mp, const Square& a, const Square& b, Dir d) {
  (void)mp;
  return d == Dir::Horizontal ? a.x == b.v : a.t == b.g;
}

// Horizontal: A|B (right edge of A = left edge of B) gives the square with
// top g_A g_B and right edge x_B. Vertical: A over B (bottom of A = top of B)
// gives the square with top g_A and right edge x_A x_B.
inline Square square_compose(const MatchedPair& mp, const Square& a, const Square& b,
                             Dir d) {
  if (!can_compose(mp, a, b, d))
    throw Error(ErrorCode::NotComposable,
                witness("dir", d == Dir::Horizontal ? "horizontal" : "vertical", "A.g",
                        a.g, "A.x", a.x, "B.g", b.g, "B.x", b.x));
  if (d == Dir::Horizontal) return square_of(mp, mp.G.mul(a.g, b.g), b.x);
  return square_of(mp, a.g, mp.F.mul(a.x, b.x));
}

enum class InvKind { Horizontal, Vertical, Full };

// Horizontal inverse: (g, x) -> (g^{-1}, g▷x); vertical: (g, x) ->
// (g◁x, x^{-1}); full inverse = both, the square (( g◁x)^{-1}, (g▷x)^{-1}).
inline Square square_invert(const MatchedPair& mp, const Square& a, InvKind k) {
  switch (k) {
    case InvKind::Horizontal:
      return square_of(mp, mp.G.inv(a.g), mp.act_f(a.g, a.x));
    case InvKind::Vertical:
      return square_of(mp, mp.act_g(a.g, a.x), mp.F.inv(a.x));
    case InvKind::Full:
      return square_of(mp, mp.G.inv(mp.act_g(a.g, a.x)), mp.F.inv(mp.act_f(a.g, a.x)));
  }
  throw Error(ErrorCode::BadParameters, "invert kind");
}

// Unique completion of the 2x2 grid [A B / C D] from its off-diagonal B, C:
// A is forced by right(A) = left(B), bottom(A) = top(C); D by top(D) =
// bottom(B), left(D) = right(C).
inline std::pair<Square, Square> complete_square(const MatchedPair& mp, const Square& b,
                                                 const Square& c) {
  const int xa = b.v;                              // right edge of A
  const int ga = mp.act_g(c.g, mp.F.inv(xa));      // g_A ◁ x_A = g_C
  Square a = square_of(mp, ga, xa);
  const int gd = b.t;                              // top of D
  // left(D) = g_D ▷ x_D must equal right(C); invert the bijection x -> g_D ▷ x
  const int xd = mp.act_f(mp.G.inv(gd), c.x);
  Square d = square_of(mp, gd, xd);
  if (a.t != c.g || a.x != b.v || d.g != b.t || d.v != c.x)
    throw Error(ErrorCode::InternalCheck, "square completion");
  return {a, d};
}

}  // namespace bicross
