#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bicross/bicrossed.hpp"
#include "bicross/braiding.hpp"
#include "bicross/cocycles.hpp"
#include "bicross/group.hpp"
#include "bicross/matched_pair.hpp"
#include "bicross/realization.hpp"
#include "bicross/report.hpp"

// JSON import/export. Every file carries an explicit top-level "conductor";
// all scalars are exponents of zeta_conductor. Loaders validate structure and
// group axioms before handing anything to the math layer; cocycle *laws* are
// left to the verify pipeline.
namespace bicross {

using Json = nlohmann::json;

namespace detail_io {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::SchemaError, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer())
    throw Error(ErrorCode::SchemaError, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

template <class T>
std::vector<T> vec_of(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::SchemaError, std::string(what) + " must be an array");
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw Error(ErrorCode::SchemaError, std::string(what) + " entries must be integers");
    out.push_back(v.get<T>());
  }
  return out;
}

inline std::vector<std::vector<int>> rows_of(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::SchemaError, std::string(what) + " must be an array");
  std::vector<std::vector<int>> rows;
  rows.reserve(j.size());
  for (const auto& r : j) rows.push_back(vec_of<int>(r, what));
  return rows;
}

}  // namespace detail_io

// ---- groups: { "order": n, "mult": [[...]] } -------------------------------

inline Json group_to_json(const FiniteGroup& g) {
  std::vector<std::vector<int>> rows(g.size(), std::vector<int>(g.size()));
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) rows[a][b] = g.mul(a, b);
  return Json{{"order", g.size()}, {"mult", rows}};
}

inline FiniteGroup group_from_json(const Json& j) {
  using namespace detail_io;
  const int n = int_field(j, "order");
  auto rows = rows_of(field(j, "mult"), "mult");
  if (static_cast<int>(rows.size()) != n)
    throw Error(ErrorCode::SchemaError, "mult table size does not match order");
  return make_group(rows);  // validates associativity, identity, inverses
}

// ---- matched pairs: { "F", "G", "act_l", "act_r" } --------------------------
// act_l[g][x] = g |> x (an F index), act_r[g][x] = g <| x (a G index).

inline Json matched_pair_to_json(const MatchedPair& mp) {
  std::vector<std::vector<int>> al(mp.nG(), std::vector<int>(mp.nF()));
  std::vector<std::vector<int>> ar = al;
  for (int g = 0; g < mp.nG(); ++g)
    for (int x = 0; x < mp.nF(); ++x) {
      al[g][x] = mp.act_f(g, x);
      ar[g][x] = mp.act_g(g, x);
    }
  return Json{{"F", group_to_json(mp.F)},
              {"G", group_to_json(mp.G)},
              {"act_l", al},
              {"act_r", ar}};
}

inline MatchedPair matched_pair_from_json(const Json& j) {
  using namespace detail_io;
  MatchedPair mp;
  mp.F = group_from_json(field(j, "F"));
  mp.G = group_from_json(field(j, "G"));
  auto al = rows_of(field(j, "act_l"), "act_l");
  auto ar = rows_of(field(j, "act_r"), "act_r");
  const int nG = mp.nG(), nF = mp.nF();
  auto flatten = [&](const std::vector<std::vector<int>>& rows, const char* what, int range) {
    if (static_cast<int>(rows.size()) != nG)
      throw Error(ErrorCode::SchemaError, std::string(what) + " must have |G| rows");
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(nG) * nF);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != nF)
        throw Error(ErrorCode::SchemaError, std::string(what) + " rows must have |F| entries");
      for (int v : r) {
        if (v < 0 || v >= range)
          throw Error(ErrorCode::SchemaError, std::string(what) + " entry out of range");
        flat.push_back(v);
      }
    }
    return flat;
  };
  mp.lact = flatten(al, "act_l", nF);
  mp.ract = flatten(ar, "act_r", nG);
  validate_matched_pair(mp).require();
  return mp;
}

// ---- cocycle pairs: { "conductor", "sigma"[g][x][y], "tau"[x][g][h] } -------

inline Json cocycles_to_json(const SigmaTable& s, const TauTable& t) {
  Json sig = Json::array();
  for (int g = 0; g < s.nG; ++g) {
    Json slice = Json::array();
    for (int x = 0; x < s.nF; ++x) {
      Json row = Json::array();
      for (int y = 0; y < s.nF; ++y) row.push_back(s.exp(g, x, y));
      slice.push_back(std::move(row));
    }
    sig.push_back(std::move(slice));
  }
  Json ta = Json::array();
  for (int x = 0; x < t.nF; ++x) {
    Json slice = Json::array();
    for (int g = 0; g < t.nG; ++g) {
      Json row = Json::array();
      for (int h = 0; h < t.nG; ++h) row.push_back(t.exp(x, g, h));
      slice.push_back(std::move(row));
    }
    ta.push_back(std::move(slice));
  }
  return Json{{"conductor", s.conductor}, {"sigma", std::move(sig)}, {"tau", std::move(ta)}};
}

inline std::pair<SigmaTable, TauTable> cocycles_from_json(const Json& j, const MatchedPair& mp) {
  using namespace detail_io;
  const int N = int_field(j, "conductor");
  if (N < 1) throw Error(ErrorCode::SchemaError, "conductor must be positive");
  const int nG = mp.nG(), nF = mp.nF();
  SigmaTable s = SigmaTable::trivial(nG, nF, N);
  TauTable t = TauTable::trivial(nF, nG, N);
  const Json& sig = field(j, "sigma");
  if (!sig.is_array() || static_cast<int>(sig.size()) != nG)
    throw Error(ErrorCode::SchemaError, "sigma must have |G| slices");
  for (int g = 0; g < nG; ++g) {
    auto rows = rows_of(sig.at(g), "sigma");
    if (static_cast<int>(rows.size()) != nF)
      throw Error(ErrorCode::SchemaError, "sigma slices must be |F| x |F|");
    for (int x = 0; x < nF; ++x) {
      if (static_cast<int>(rows[x].size()) != nF)
        throw Error(ErrorCode::SchemaError, "sigma slices must be |F| x |F|");
      for (int y = 0; y < nF; ++y) s.set(g, x, y, rows[x][y]);
    }
  }
  const Json& ta = field(j, "tau");
  if (!ta.is_array() || static_cast<int>(ta.size()) != nF)
    throw Error(ErrorCode::SchemaError, "tau must have |F| slices");
  for (int x = 0; x < nF; ++x) {
    auto rows = rows_of(ta.at(x), "tau");
    if (static_cast<int>(rows.size()) != nG)
      throw Error(ErrorCode::SchemaError, "tau slices must be |G| x |G|");
    for (int g = 0; g < nG; ++g) {
      if (static_cast<int>(rows[g].size()) != nG)
        throw Error(ErrorCode::SchemaError, "tau slices must be |G| x |G|");
      for (int h = 0; h < nG; ++h) t.set(x, g, h, rows[g][h]);
    }
  }
  return {std::move(s), std::move(t)};
}

// ---- realizations: { "conductor", "C", "z"[g][x], "chi"[g][x] } -------------
// C is the invariant-factor list; z entries are coordinate vectors in C and
// chi entries are exponent vectors on the invariant-factor generators.

inline Json realization_to_json(const DiagonalRealization& dr) {
  Json z = Json::array(), chi = Json::array();
  for (int g = 0; g < dr.nG; ++g) {
    Json zrow = Json::array(), crow = Json::array();
    for (int x = 0; x < dr.nF; ++x) {
      zrow.push_back(dr.z_elem(g, x));
      crow.push_back(dr.chi_at(g, x).exps);
    }
    z.push_back(std::move(zrow));
    chi.push_back(std::move(crow));
  }
  return Json{{"conductor", dr.conductor},
              {"C", dr.C.factors()},
              {"z", std::move(z)},
              {"chi", std::move(chi)}};
}

inline DiagonalRealization realization_from_json(const Json& j, const MatchedPair& mp) {
  using namespace detail_io;
  DiagonalRealization dr;
  dr.conductor = int_field(j, "conductor");
  if (dr.conductor < 1) throw Error(ErrorCode::SchemaError, "conductor must be positive");
  dr.C = AbelianGroup(vec_of<int>(field(j, "C"), "C"));
  dr.nG = mp.nG();
  dr.nF = mp.nF();
  const Json& z = field(j, "z");
  const Json& chi = field(j, "chi");
  if (!z.is_array() || static_cast<int>(z.size()) != dr.nG || !chi.is_array() ||
      static_cast<int>(chi.size()) != dr.nG)
    throw Error(ErrorCode::SchemaError, "z and chi must have |G| rows");
  for (int g = 0; g < dr.nG; ++g) {
    if (static_cast<int>(z.at(g).size()) != dr.nF || static_cast<int>(chi.at(g).size()) != dr.nF)
      throw Error(ErrorCode::SchemaError, "z and chi rows must have |F| entries");
    for (int x = 0; x < dr.nF; ++x) {
      auto coord = vec_of<int>(z.at(g).at(x), "z");
      if (static_cast<int>(coord.size()) != dr.C.rank())
        throw Error(ErrorCode::SchemaError, "z entry rank does not match C");
      dr.z.push_back(dr.C.index_of(dr.C.normalize(coord)));
      auto exps = vec_of<int>(chi.at(g).at(x), "chi");
      if (static_cast<int>(exps.size()) != dr.C.rank())
        throw Error(ErrorCode::SchemaError, "chi entry rank does not match C");
      dr.chi.push_back(Character::make(dr.C, dr.conductor, std::move(exps)));
    }
  }
  return dr;
}

// ---- full dataset files ------------------------------------------------------
// One object with the matched-pair keys plus "conductor"/"sigma"/"tau" and an
// optional embedded "realization". `search --mp` accepts the same file (the
// cocycle keys are simply unused there).

struct Dataset {
  MatchedPair mp;
  SigmaTable sigma;
  TauTable tau;
  std::optional<DiagonalRealization> dr;

  int conductor() const { return sigma.conductor; }
};

inline Json dataset_to_json(const Dataset& d) {
  Json j = matched_pair_to_json(d.mp);
  Json c = cocycles_to_json(d.sigma, d.tau);
  j["conductor"] = c["conductor"];
  j["sigma"] = std::move(c["sigma"]);
  j["tau"] = std::move(c["tau"]);
  if (d.dr) j["realization"] = realization_to_json(*d.dr);
  return j;
}

inline Dataset dataset_from_json(const Json& j) {
  Dataset d;
  d.mp = matched_pair_from_json(j);
  auto [s, t] = cocycles_from_json(j, d.mp);
  d.sigma = std::move(s);
  d.tau = std::move(t);
  if (j.contains("realization")) d.dr = realization_from_json(j.at("realization"), d.mp);
  return d;
}

// ---- braiding tables: { "conductor", "q"[g][h][x][y] } -----------------------

inline Json qtable_to_json(const BraidingTable& q) {
  Json arr = Json::array();
  for (int g = 0; g < q.nG; ++g) {
    Json a = Json::array();
    for (int h = 0; h < q.nG; ++h) {
      Json b = Json::array();
      for (int x = 0; x < q.nF; ++x) {
        Json c = Json::array();
        for (int y = 0; y < q.nF; ++y) c.push_back(q.exp(g, h, x, y));
        b.push_back(std::move(c));
      }
      a.push_back(std::move(b));
    }
    arr.push_back(std::move(a));
  }
  return Json{{"conductor", q.conductor}, {"q", std::move(arr)}};
}

inline BraidingTable qtable_from_json(const Json& j) {
  using namespace detail_io;
  const int N = int_field(j, "conductor");
  if (N < 1) throw Error(ErrorCode::SchemaError, "conductor must be positive");
  const Json& arr = field(j, "q");
  if (!arr.is_array() || arr.empty()) throw Error(ErrorCode::SchemaError, "q must be a 4-d array");
  const int nG = static_cast<int>(arr.size());
  if (!arr.at(0).is_array() || arr.at(0).empty() || !arr.at(0).at(0).is_array() ||
      arr.at(0).at(0).empty())
    throw Error(ErrorCode::SchemaError, "q must be a 4-d array");
  const int nF = static_cast<int>(arr.at(0).at(0).size());
  BraidingTable q = BraidingTable::trivial(nG, nF, N);
  for (int g = 0; g < nG; ++g) {
    if (static_cast<int>(arr.at(g).size()) != nG)
      throw Error(ErrorCode::SchemaError, "q must be |G| x |G| x |F| x |F|");
    for (int h = 0; h < nG; ++h) {
      const Json& mid = arr.at(g).at(h);
      if (static_cast<int>(mid.size()) != nF)
        throw Error(ErrorCode::SchemaError, "q must be |G| x |G| x |F| x |F|");
      for (int x = 0; x < nF; ++x) {
        auto row = vec_of<int>(mid.at(x), "q");
        if (static_cast<int>(row.size()) != nF)
          throw Error(ErrorCode::SchemaError, "q must be |G| x |G| x |F| x |F|");
        for (int y = 0; y < nF; ++y) q.set(g, h, x, y, row[y]);
      }
    }
  }
  return q;
}

// ---- structure constants -----------------------------------------------------
// Basis labels are "(g_index, x_index)". mult target -1 marks a vanishing
// product (support mismatch).

inline Json structure_constants_to_json(const BicrossedProduct& R) {
  Json basis = Json::array();
  for (int b = 0; b < R.dim; ++b)
    basis.push_back("(" + std::to_string(R.gof(b)) + ", " + std::to_string(R.xof(b)) + ")");
  Json mt = Json::array(), me = Json::array();
  for (int b1 = 0; b1 < R.dim; ++b1) {
    Json trow = Json::array(), erow = Json::array();
    for (int b2 = 0; b2 < R.dim; ++b2) {
      trow.push_back(R.mult_target[b1 * R.dim + b2]);
      erow.push_back(R.mult_exp[b1 * R.dim + b2]);
    }
    mt.push_back(std::move(trow));
    me.push_back(std::move(erow));
  }
  Json co = Json::array();
  for (int b = 0; b < R.dim; ++b) {
    Json terms = Json::array();
    for (const auto& t : R.comult_terms[b])
      terms.push_back(Json{{"left", t.left}, {"right", t.right}, {"exp", t.exp}});
    co.push_back(std::move(terms));
  }
  Json counit = Json::array();
  for (int b = 0; b < R.dim; ++b) counit.push_back(R.counit_one[b] ? 1 : 0);
  return Json{{"conductor", R.conductor},
              {"basis", std::move(basis)},
              {"mult", Json{{"target", std::move(mt)}, {"exp", std::move(me)}}},
              {"comult", std::move(co)},
              {"antipode", Json{{"target", R.antipode_target}, {"exp", R.antipode_exp}}},
              {"counit", std::move(counit)}};
}

// Biproducts use the same schema with triple labels "(g_index, x_index, c_index)".
inline Json biproduct_to_json(const Biproduct& B) {
  Json basis = Json::array();
  for (int b = 0; b < B.dim; ++b)
    basis.push_back("(" + std::to_string(B.gof(b)) + ", " + std::to_string(B.xof(b)) + ", " +
                    std::to_string(B.uof(b)) + ")");
  Json mt = Json::array(), me = Json::array();
  for (int b1 = 0; b1 < B.dim; ++b1) {
    Json trow = Json::array(), erow = Json::array();
    for (int b2 = 0; b2 < B.dim; ++b2) {
      trow.push_back(B.mult_target[b1 * B.dim + b2]);
      erow.push_back(B.mult_exp[b1 * B.dim + b2]);
    }
    mt.push_back(std::move(trow));
    me.push_back(std::move(erow));
  }
  Json co = Json::array();
  for (int b = 0; b < B.dim; ++b) {
    Json terms = Json::array();
    for (const auto& t : B.comult[b])
      terms.push_back(Json{{"left", t.left}, {"right", t.right}, {"exp", t.exp}});
    co.push_back(std::move(terms));
  }
  Json counit = Json::array();
  for (int b = 0; b < B.dim; ++b) counit.push_back(B.counit_one(b) ? 1 : 0);
  return Json{{"conductor", B.conductor},
              {"basis", std::move(basis)},
              {"mult", Json{{"target", std::move(mt)}, {"exp", std::move(me)}}},
              {"comult", std::move(co)},
              {"antipode", Json{{"target", B.antipode_target}, {"exp", B.antipode_exp}}},
              {"counit", std::move(counit)}};
}

// ---- reports -----------------------------------------------------------------

inline Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"pass", c.pass},
                          {"checked", c.checked},
                          {"failed", c.failed},
                          {"witness", c.witness}});
  return Json{{"ok", r.ok()}, {"checks", std::move(checks)}};
}

inline Json report_to_json(const ValidationReport& r) {
  Json issues = Json::array();
  for (const auto& i : r.issues)
    issues.push_back(Json{{"code", error_code_name(i.code)}, {"witness", i.witness}});
  return Json{{"ok", r.ok()}, {"issues", std::move(issues)}};
}

// ---- files -------------------------------------------------------------------

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    throw Error(ErrorCode::SchemaError, path + ": " + msg);
  }
  return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::SchemaError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace bicross
