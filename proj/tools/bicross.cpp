// bicross: construct, verify, and export braided bicrossed-product data.
//
// Subcommands: example, verify, qtable, realize, equiv, search. All files are
// JSON with an explicit top-level "conductor"; every scalar is an exponent of
// zeta_conductor. Exit status: 0 when all requested checks pass, 1 when a
// check fails, 2 on usage/file/schema errors.

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bicross/examples.hpp"
#include "bicross/io.hpp"
#include "bicross/search.hpp"

using namespace bicross;

namespace {

struct Lines {
  bool ok = true;

  void validation(const std::string& name, const ValidationReport& rep) {
    if (rep.ok()) {
      std::cout << "[ ok ] " << name << "\n";
      return;
    }
    ok = false;
    for (size_t i = 0; i < rep.issues.size(); ++i) {
      if (i == 3) {
        std::cout << "       ... " << rep.issues.size() - i << " more issues\n";
        break;
      }
      std::cout << "[FAIL] " << name << ": " << error_code_name(rep.issues[i].code) << " "
                << rep.issues[i].witness << "\n";
    }
  }

  void report(const Report& rep) {
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name << " checked=" << c.checked;
      if (!c.pass) {
        std::cout << " failed=" << c.failed;
        if (!c.witness.empty()) std::cout << " " << c.witness;
        ok = false;
      }
      std::cout << "\n";
    }
  }

  // non-gating survey lines
  void info_report(const Report& rep) {
    for (const auto& c : rep.checks)
      std::cout << "[info] " << c.name << (c.pass ? " holds" : " does not hold")
                << " checked=" << c.checked << "\n";
  }

  void info(const std::string& s) { std::cout << "[info] " << s << "\n"; }
};

const std::set<std::string> kAllChecks = {"basic",      "theorem",   "cohomology",
                                          "bialgebra",  "antipode",  "prebraided",
                                          "auxiliary",  "flags",     "realization"};

std::set<std::string> parse_check_list(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "all") {
      out.insert(kAllChecks.begin(), kAllChecks.end());
      continue;
    }
    if (!kAllChecks.count(tok))
      throw Error(ErrorCode::BadParameters, "unknown check '" + tok + "'");
    out.insert(tok);
  }
  if (out.empty()) throw Error(ErrorCode::BadParameters, "empty check list");
  return out;
}

// A fixed nontrivial diagonal gauge: nu(g,x) = g*x mod N. It vanishes on both
// identity slices, so it is a legal rescaling for any pair.
NuTable canonical_gauge(const MatchedPair& mp, int N) {
  NuTable nu = NuTable::trivial(mp.nG(), mp.nF(), N);
  for (int g = 0; g < mp.nG(); ++g)
    for (int x = 0; x < mp.nF(); ++x) nu.set(g, x, static_cast<long long>(g) * x);
  return nu;
}

int run_checks(const Dataset& d, const std::set<std::string>& which, FailMode mode,
               bool realization_explicit) {
  Lines out;
  const MatchedPair& mp = d.mp;
  BraidingTable q = compute_q(mp, d.sigma, d.tau);

  if (which.count("basic")) {
    out.validation("matched-pair", validate_matched_pair(mp));
    out.validation("cocycle-pair", validate_pair(d.sigma, d.tau, mp));
  }
  if (which.count("theorem")) {
    out.report(check_theorem_conditions(mp, d.sigma, d.tau, mode));
    out.validation("q-normalization", check_q_normalization(q, mp));
    out.report(check_q_multiplicativity(q, mp, mode));
  }
  if (which.count("cohomology")) {
    NuTable nu = canonical_gauge(mp, d.conductor());
    GaugePair gauged = apply_gauge(mp, d.sigma, d.tau, nu);
    BraidingTable q2 = compute_q(mp, gauged.sigma, gauged.tau);
    std::cout << (q2 == q ? "[ ok ] " : "[FAIL] ") << "gauge-q-invariance\n";
    if (!(q2 == q)) out.ok = false;
    out.validation("gauge-revalidation", validate_pair(gauged.sigma, gauged.tau, mp));
    auto f = is_sigma_coboundary(d.sigma, mp);
    out.info(std::string("sigma-coboundary: ") + (f ? "yes" : "no"));
    if (f) {
      GaugePair killed = apply_gauge(mp, d.sigma, d.tau, *f);
      bool zero = std::all_of(killed.sigma.e.begin(), killed.sigma.e.end(),
                              [](int v) { return v == 0; });
      std::cout << (zero ? "[ ok ] " : "[FAIL] ") << "coboundary-witness\n";
      if (!zero) out.ok = false;
    }
  }

  const bool need_product = which.count("bialgebra") || which.count("antipode") ||
                            which.count("prebraided") || which.count("auxiliary") ||
                            which.count("flags");
  if (need_product) {
    BicrossedProduct R = build_bicrossed(mp, d.sigma, d.tau);
    if (which.count("bialgebra")) out.report(verify_bialgebra(R, q, mode));
    if (which.count("antipode")) out.report(antipode_checks(R, mode));
    if (which.count("prebraided")) out.report(check_prebraided(R, q, mode));
    if (which.count("auxiliary")) out.report(auxiliary_checks(R, q, mode));
    if (which.count("flags")) {
      CommutativityFlags fl = commutativity_flags(R, q);
      std::ostringstream os;
      os << "flags: commutative=" << (fl.commutative ? "true" : "false")
         << " cocommutative=" << (fl.cocommutative ? "true" : "false")
         << " braided_commutative=" << (fl.braided_commutative ? "true" : "false")
         << " braided_cocommutative=" << (fl.braided_cocommutative ? "true" : "false");
      out.info(os.str());
    }
  }

  if (which.count("realization")) {
    if (!d.dr) {
      if (realization_explicit)
        throw Error(ErrorCode::SchemaError, "input carries no realization");
      out.info("no realization present; skipping realization checks");
    } else {
      out.validation("realization", validate_realization(mp, *d.dr));
      out.report(check_braid_c_chi(mp, d.sigma, d.tau, *d.dr, mode));
      out.info_report(naif_split_report(mp, d.sigma, d.tau, *d.dr, mode));
      if (mp.lact_trivial()) out.report(gen_som_report(mp, d.sigma, d.tau, *d.dr, mode));
    }
  }
  std::cout << (out.ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.ok ? 0 : 1;
}

Dataset to_dataset(ExampleDataset ds) {
  return Dataset{std::move(ds.mp), std::move(ds.sigma), std::move(ds.tau), std::move(ds.dr)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braided bicrossed-product toolkit"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  // --- example
  std::string family, verify_level, export_path;
  int p = 3, qq = 2, a = 1, b = 1, N = 4, M = 2, n = 2, s3cond = 6;
  long long rr = 1, w = 0, m = 0;
  bool minus = false;
  auto* ex = app.add_subcommand("example", "build a named example dataset");
  ex->add_option("family", family, "trivial-actions | p4q | cyclic | kashina | s3")
      ->required()
      ->check(CLI::IsMember({"trivial-actions", "p4q", "cyclic", "kashina", "s3"}));
  ex->add_option("--p", p, "odd prime (trivial-actions, p4q)");
  ex->add_option("--q", qq, "prime with p = 1 mod q (p4q)");
  ex->add_option("--r", rr, "tau family parameter (p4q)");
  ex->add_option("--a", a, "first form coefficient (trivial-actions)");
  ex->add_option("--b", b, "second form coefficient (trivial-actions)");
  ex->add_option("--N", N, "order of F (cyclic)");
  ex->add_option("--M", M, "order of G (cyclic)");
  ex->add_option("--w", w, "omega exponent (cyclic)");
  ex->add_option("--m", m, "mu exponent (cyclic)");
  ex->add_option("--n", n, "G = Z/2^n (kashina)");
  ex->add_flag("--minus", minus, "kashina minus variant");
  ex->add_option("--conductor", s3cond, "scalar conductor (s3)");
  ex->add_option("--verify", verify_level, "all | basic | theorem | cohomology")
      ->check(CLI::IsMember({"all", "basic", "theorem", "cohomology"}));
  ex->add_option("--export", export_path, "write the dataset as JSON");

  // --- verify
  std::string in_path, check_list = "all";
  bool fail_fast = false;
  auto* ver = app.add_subcommand("verify", "run checks on a dataset file");
  ver->add_option("--input", in_path, "dataset JSON")->required();
  ver->add_option("--check", check_list, "comma-separated list, or 'all'");
  ver->add_flag("--fail-fast", fail_fast, "stop each sweep at the first witness");

  // --- qtable
  std::string qt_in, qt_out;
  auto* qt = app.add_subcommand("qtable", "compute the braiding table of a dataset");
  qt->add_option("--input", qt_in, "dataset JSON")->required();
  qt->add_option("--out", qt_out, "output JSON")->required();

  // --- realize
  std::string rz_in, rz_file, rz_out;
  bool universal = false, biproduct = false;
  auto* rz = app.add_subcommand("realize", "attach or compute a diagonal realization");
  rz->add_option("--input", rz_in, "dataset JSON")->required();
  rz->add_flag("--universal", universal, "compute the universal realization");
  rz->add_option("--realization", rz_file, "load a realization JSON instead");
  rz->add_flag("--biproduct", biproduct, "also build and verify the biproduct");
  rz->add_option("--out", rz_out, "write the realization (and biproduct) JSON");

  // --- equiv
  std::string left_path, right_path;
  auto* eq = app.add_subcommand("equiv", "search for a diagonal gauge equivalence");
  eq->add_option("--left", left_path, "dataset JSON")->required();
  eq->add_option("--right", right_path, "dataset JSON")->required();

  // --- search
  std::string mp_path;
  int conductor = 0;
  long long max_results = 0;
  auto* se = app.add_subcommand("search", "enumerate all compatible cocycle pairs");
  se->add_option("--mp", mp_path, "matched-pair JSON")->required();
  se->add_option("--conductor", conductor, "scalar conductor")->required();
  se->add_option("--max-results", max_results, "cap on listed pairs")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (ex->parsed()) {
      ExampleDataset ds;
      if (family == "trivial-actions") ds = trivial_actions_example(p, a, b);
      else if (family == "p4q") ds = p4q_example(p, qq, rr).ds;
      else if (family == "cyclic") ds = cyclic_example(N, M, w, m);
      else if (family == "kashina") ds = kashina_example(n, minus);
      else ds = s3_example(s3cond);
      Dataset d = to_dataset(std::move(ds));
      std::cout << "example " << family << ": |G|=" << d.mp.nG() << " |F|=" << d.mp.nF()
                << " dim=" << d.mp.nG() * d.mp.nF() << " conductor=" << d.conductor() << "\n";
      if (!export_path.empty()) {
        write_json_file(export_path, dataset_to_json(d));
        std::cout << "wrote " << export_path << "\n";
      }
      if (verify_level.empty()) return 0;
      std::set<std::string> which{"basic"};
      if (verify_level == "theorem") which.insert("theorem");
      if (verify_level == "cohomology") which.insert({"theorem", "cohomology"});
      if (verify_level == "all") which = kAllChecks;
      return run_checks(d, which, FailMode::CountAll, false);
    }

    if (ver->parsed()) {
      Dataset d = dataset_from_json(read_json_file(in_path));
      bool explicit_realization = check_list.find("realization") != std::string::npos;
      return run_checks(d, parse_check_list(check_list),
                        fail_fast ? FailMode::FailFast : FailMode::CountAll,
                        explicit_realization);
    }

    if (qt->parsed()) {
      Dataset d = dataset_from_json(read_json_file(qt_in));
      write_json_file(qt_out, qtable_to_json(compute_q(d.mp, d.sigma, d.tau)));
      std::cout << "wrote " << qt_out << " (conductor=" << d.conductor() << ")\n";
      return 0;
    }

    if (rz->parsed()) {
      if (universal == !rz_file.empty())
        throw Error(ErrorCode::BadParameters,
                    "choose exactly one of --universal / --realization FILE");
      Dataset d = dataset_from_json(read_json_file(rz_in));
      DiagonalRealization dr;
      if (universal) {
        dr = universal_realization(d.mp, d.sigma, d.tau);
      } else {
        Json j = read_json_file(rz_file);
        dr = realization_from_json(j.contains("realization") ? j.at("realization") : j, d.mp);
      }
      std::ostringstream cs;
      for (size_t i = 0; i < dr.C.factors().size(); ++i)
        cs << (i ? ", " : "") << dr.C.factors()[i];
      std::cout << "realization: C = [" << cs.str() << "] conductor=" << dr.conductor << "\n";
      Lines out;
      out.validation("realization", validate_realization(d.mp, dr));
      out.report(check_braid_c_chi(d.mp, d.sigma, d.tau, dr, FailMode::CountAll));
      Json export_json = realization_to_json(dr);
      if (biproduct) {
        BicrossedProduct R = build_bicrossed(d.mp, d.sigma, d.tau);
        Biproduct B = build_biproduct(R, dr);
        std::cout << "biproduct: dim=" << B.dim << "\n";
        out.report(biproduct_verify(B, FailMode::CountAll));
        export_json = Json{{"realization", std::move(export_json)},
                           {"biproduct", biproduct_to_json(B)}};
      }
      if (!rz_out.empty()) {
        write_json_file(rz_out, export_json);
        std::cout << "wrote " << rz_out << "\n";
      }
      std::cout << (out.ok ? "all checks passed" : "CHECKS FAILED") << "\n";
      return out.ok ? 0 : 1;
    }

    if (eq->parsed()) {
      Dataset L = dataset_from_json(read_json_file(left_path));
      Dataset R = dataset_from_json(read_json_file(right_path));
      if (!L.mp.same_shape(R.mp))
        throw Error(ErrorCode::BadParameters, "matched pairs differ between --left and --right");
      if (L.conductor() != R.conductor())
        throw Error(ErrorCode::ConductorMismatch, "left and right conductors differ");
      auto nu = solve_equivalence(L.mp, L.sigma, L.tau, R.sigma, R.tau);
      if (!nu) {
        std::cout << "equiv: no diagonal gauge equivalence\n";
        return 1;
      }
      BicrossedProduct RL = build_bicrossed(L.mp, L.sigma, L.tau);
      BicrossedProduct RR = build_bicrossed(R.mp, R.sigma, R.tau);
      Report theta = theta_equivalence(RL, RR, *nu);
      if (!theta.ok())
        throw Error(ErrorCode::InternalCheck, "solved gauge failed the equivalence sweep");
      std::cout << "equiv: equivalent via nu (rows = G, cols = F):\n";
      for (int g = 0; g < L.mp.nG(); ++g) {
        std::cout << " ";
        for (int x = 0; x < L.mp.nF(); ++x) std::cout << " " << nu->exp(g, x);
        std::cout << "\n";
      }
      return 0;
    }

    if (se->parsed()) {
      MatchedPair mp = matched_pair_from_json(read_json_file(mp_path));
      SearchResult res = search_pairs(mp, conductor, max_results);
      std::cout << "search: total=" << res.total << " shown=" << res.found.size()
                << (res.truncated ? " (truncated)" : "") << "\n";
      for (const auto& gp : res.found)
        std::cout << cocycles_to_json(gp.sigma, gp.tau).dump() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "bicross: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "bicross: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
