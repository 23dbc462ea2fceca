#include "wco/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wco/config.hpp"
#include "wco/corpus.hpp"
#include "wco/scenarios.hpp"
#include "wco/quantities.hpp"
#include "wco/report.hpp"

namespace wco {

namespace {

namespace fs = std::filesystem;

void write_report(const fs::path& dir, const std::string& stem,
                  const CriterionReport& rep, std::uint64_t seed,
                  std::ostringstream& summary) {
  write_file_atomic((dir / (stem + ".csv")).string(),
                    "# criterion=" + stem + " seed=" + std::to_string(seed) +
                        "\n" + criterion_csv(rep));
  summary << criterion_summary(rep) << '\n';
  std::cout << stem << ": " << to_string(rep.verdict) << '\n';
  for (const auto& t : rep.traces)
    write_file_atomic((dir / (stem + "_" + t.name + ".svg")).string(),
                      trace_svg(t, stem + " " + t.name));
}

int cmd_analyze(const std::string& config_arg, const std::string& out_dir,
                std::optional<int> n0, std::optional<int> max_m,
                std::optional<int> dirs, std::optional<std::uint64_t> seed) {
  RunConfig cfg;
  try {
    if (is_builtin_config(config_arg)) {
      cfg = parse_config_json(builtin_config(config_arg));
    } else {
      cfg = parse_config_text(read_file(config_arg));
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "config: " << e.what() << '\n';
    return 2;
  }
  if (n0) cfg.n0 = n0;
  if (max_m) cfg.grid.m_hi = *max_m;
  if (dirs) cfg.grid.directions = *dirs;
  if (seed) cfg.grid.seed = *seed;

  fs::create_directories(out_dir);
  std::ostringstream summary;
  summary << "run: " << cfg.name << "\n";
  summary << "orders: n=" << cfg.n << " m=" << cfg.m << " p=" << cfg.pair.p
          << "\n";
  summary << "weights: nu=" << cfg.nu.name << " mu=" << cfg.mu.name << "\n";
  summary << "grid: directions=" << cfg.grid.directions
          << " m=" << cfg.grid.m_lo << ".." << cfg.grid.m_hi
          << " seed=" << cfg.grid.seed << "\n\n";

  try {
    write_report(out_dir, "A1",
                 boundedness_A1(cfg.pair, cfg.nu, cfg.mu, cfg.n, cfg.m,
                                cfg.grid),
                 cfg.grid.seed, summary);
    write_report(out_dir, "A2",
                 boundedness_A2(cfg.pair, cfg.nu, cfg.mu, cfg.n, cfg.m,
                                cfg.grid),
                 cfg.grid.seed, summary);
    try {
      write_report(out_dir, "C1",
                   compactness_C1(cfg.pair, cfg.nu, cfg.mu, cfg.n, cfg.m,
                                  cfg.n0, cfg.grid),
                   cfg.grid.seed, summary);
    } catch (const HypothesisMismatch& e) {
      summary << "criterion C1: " << e.what() << "\n\n";
      std::cout << "C1: " << e.what() << '\n';
    }
    try {
      write_report(out_dir, "C2",
                   compactness_C2(cfg.pair, cfg.nu, cfg.mu, cfg.n, cfg.m,
                                  cfg.n0, cfg.grid),
                   cfg.grid.seed, summary);
    } catch (const HypothesisMismatch& e) {
      summary << "criterion C2: " << e.what() << "\n\n";
      std::cout << "C2: " << e.what() << '\n';
    }
  } catch (const std::length_error& e) {
    std::cerr << "resource cap exceeded: " << e.what() << '\n';
    return 3;
  }
  write_file_atomic((fs::path(out_dir) / "summary.txt").string(),
                    summary.str());
  std::cout << "reports written to " << out_dir << '\n';
  return 0;
}

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

double rel_err(cdouble got, cdouble want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// Randomized identity checks shared by `verify identities`.
std::vector<VerifyCheck> identity_checks(bool inject_fault) {
  std::vector<VerifyCheck> out;
  std::mt19937_64 rng(20240817ull);

  double worst_chain = 0.0, worst_product = 0.0, worst_expansion = 0.0,
         worst_eval = 0.0;
  std::string counter;
  for (int trial = 0; trial < 40; ++trial) {
    const int N = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    const MultiPoly f = random_poly(N, 3, rng);
    const MultiPoly psi_poly = random_poly(N, 2, rng);
    const SelfMap phi = random_self_map(N, 2, rng);
    const SymbolPair pair = SymbolPair::from_map(Symbol(psi_poly), phi,
                                                 1 + static_cast<int>(rng() % N));
    const MultiPoly composed = f.compose(phi.components());
    const MultiPoly product = psi_poly * composed;
    for (const Point& z : random_points(N, 5, 0.8, rng)) {
      const cdouble chain = radial_compose_at(f, phi, n, z);
      const cdouble chain_oracle = composed.radial(n).eval(z);
      worst_chain = std::max(worst_chain, rel_err(chain, chain_oracle));
      const cdouble prod =
          radial_weighted_compose_at(Symbol(psi_poly), f, phi, n, z);
      const cdouble prod_oracle = product.radial(n).eval(z);
      worst_product = std::max(worst_product, rel_err(prod, prod_oracle));
      for (int j0 = 0; j0 <= n; ++j0) {
        cdouble expansion = psi_phi_power_radial(pair, n, j0, z);
        if (inject_fault) expansion *= 1.0 + 1e-6;
        const MultiPoly direct =
            psi_poly * phi.component(pair.p).pow(j0);
        const cdouble expansion_oracle = direct.radial(n).eval(z);
        const double err = rel_err(expansion, expansion_oracle);
        if (err > worst_expansion) {
          worst_expansion = err;
          if (err > 1e-10) {
            std::ostringstream c;
            c << "{\"trial\":" << trial << ",\"n\":" << n << ",\"j0\":" << j0
              << ",\"z0_re\":" << format_double(z[0].real())
              << ",\"got\":" << format_double(std::abs(expansion))
              << ",\"want\":" << format_double(std::abs(expansion_oracle))
              << "}";
            counter = c.str();
          }
        }
      }
      const cdouble via_compose = composed.eval(z);
      const cdouble direct_eval = f.eval(phi.eval(z));
      worst_eval = std::max(worst_eval, rel_err(via_compose, direct_eval));
    }
  }
  out.push_back({"radial_chain_rule_vs_symbolic", worst_chain <= 1e-10,
                 "max_rel_err=" + format_double(worst_chain)});
  out.push_back({"radial_product_rule_vs_symbolic", worst_product <= 1e-10,
                 "max_rel_err=" + format_double(worst_product)});
  out.push_back({"expansion_identity_vs_symbolic", worst_expansion <= 1e-10,
                 "max_rel_err=" + format_double(worst_expansion) +
                     (counter.empty() ? "" : " counterexample=" + counter)});
  out.push_back({"composition_evaluation_commutes", worst_eval <= 1e-12,
                 "max_rel_err=" + format_double(worst_eval)});

  // combinatorial identities
  bool comb_ok = true;
  std::string comb_detail;
  for (int i = 1; i <= 10 && comb_ok; ++i)
    for (int j = 1; j <= i && comb_ok; ++j)
      if (static_cast<std::int64_t>(compositions(i, j).size()) !=
          binomial(i - 1, j - 1)) {
        comb_ok = false;
        comb_detail = "composition count failed at i=" + std::to_string(i) +
                      " j=" + std::to_string(j);
      }
  for (int n = 1; n <= 8 && comb_ok; ++n)
    for (int j = 1; j <= 4 && comb_ok; ++j) {
      std::int64_t sum = 0;
      for (const auto& k : weak_compositions(n, j)) sum += multinomial(n, k);
      std::int64_t jn = 1;
      for (int t = 0; t < n; ++t) jn *= j;
      if (sum != jn) {
        comb_ok = false;
        comb_detail = "multinomial theorem failed at n=" + std::to_string(n) +
                      " j=" + std::to_string(j);
      }
    }
  out.push_back({"multiindex_identities", comb_ok, comb_detail});

  // closed-form nested integrals
  double worst_unit = 0.0;
  for (int k = 1; k <= 3; ++k)
    for (double r : {0.3, 0.6, 0.9}) {
      double rk = 1.0;
      for (int t = 0; t < k; ++t) rk *= r;
      const double expect = rk / static_cast<double>(factorial(k));
      worst_unit = std::max(
          worst_unit,
          std::abs(nested_integral(unit_weight(), k, r) - expect) / expect);
    }
  const double atanh_err =
      std::abs(nested_integral(standard_weight(1.0), 1, 0.9) -
               std::atanh(0.9)) /
      std::atanh(0.9);
  out.push_back({"nested_integral_closed_forms",
                 worst_unit <= 1e-12 && atanh_err <= 1e-9,
                 "unit=" + format_double(worst_unit) +
                     " atanh=" + format_double(atanh_err)});
  return out;
}

int cmd_verify(const std::string& suite, const std::string& out_dir,
               bool inject_fault) {
  std::filesystem::create_directories(out_dir);
  std::vector<VerifyCheck> checks;
  if (suite == "identities" || suite == "all") {
    auto c = identity_checks(inject_fault);
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (suite == "examples" || suite == "all") {
    for (const auto& sc : scenario_registry()) {
      const ScenarioResult res = sc.run();
      for (const auto& ch : res.checks)
        checks.push_back({res.id + "/" + ch.name, ch.pass,
                          "expected=" + ch.expected + " actual=" + ch.actual});
    }
  }
  if (checks.empty()) {
    std::cerr << "unknown suite: " << suite << '\n';
    return 2;
  }
  std::ostringstream csv;
  csv << "check,pass,detail\n";
  bool all = true;
  std::string first_failure;
  for (const auto& c : checks) {
    std::string detail = c.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    csv << c.name << ',' << (c.pass ? 1 : 0) << ',' << detail << '\n';
    if (!c.pass && all) {
      all = false;
      first_failure = c.name + ": " + c.detail;
    }
  }
  write_file_atomic(
      (std::filesystem::path(out_dir) / ("verify_" + suite + ".csv")).string(),
      csv.str());
  std::cout << csv.str();
  if (!all) {
    std::cerr << "first failing check: " << first_failure << '\n';
    return 1;
  }
  return 0;
}

int cmd_scenarios(bool list, const std::string& run_id,
                  const std::string& out_dir) {
  if (list) {
    for (const auto& s : scenario_registry())
      std::cout << s.id << "  -  " << s.description << '\n';
    return 0;
  }
  std::filesystem::create_directories(out_dir);
  try {
    const ScenarioResult res = run_scenario(run_id);
    write_file_atomic(
        (std::filesystem::path(out_dir) / (res.id + ".csv")).string(),
        scenario_csv(res));
    for (const auto& c : res.checks)
      std::cout << res.id << "/" << c.name << ": "
                << (c.pass ? "ok" : "DIFF") << " expected=" << c.expected
                << " actual=" << c.actual << '\n';
    return res.pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"growth-space composition operator laboratory"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "run the criterion suite");
  std::string config_arg, out_dir = "out";
  int n0_val = -1, max_m = -1, dirs = -1;
  std::int64_t seed = -1;
  analyze->add_option("--config", config_arg, "config file or builtin name")
      ->required();
  analyze->add_option("--out", out_dir, "output directory");
  analyze->add_option("--n0", n0_val, "compactness hypothesis index");
  analyze->add_option("--max-m", max_m, "deepest dyadic radius exponent");
  analyze->add_option("--dirs", dirs, "direction count");
  analyze->add_option("--seed", seed, "sampling seed");

  auto* verify = app.add_subcommand("verify", "run property suites");
  std::string suite;
  std::string verify_out = "out";
  bool inject_fault = false;
  verify->add_option("--suite", suite, "identities|examples|all")->required();
  verify->add_option("--out", verify_out, "output directory");
  verify->add_flag("--inject-fault", inject_fault,
                   "perturb one identity to exercise the failure path");

  auto* scenarios = app.add_subcommand("scenarios", "scenario registry");
  bool list = false;
  std::string run_id;
  std::string scen_out = "out";
  scenarios->add_flag("--list", list, "list scenario ids");
  scenarios->add_option("--run", run_id, "scenario id to run");
  scenarios->add_option("--out", scen_out, "output directory");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (analyze->parsed())
    return cmd_analyze(config_arg, out_dir,
                       n0_val >= 0 ? std::optional<int>(n0_val) : std::nullopt,
                       max_m > 0 ? std::optional<int>(max_m) : std::nullopt,
                       dirs > 0 ? std::optional<int>(dirs) : std::nullopt,
                       seed >= 0 ? std::optional<std::uint64_t>(seed)
                                 : std::nullopt);
  if (verify->parsed()) return cmd_verify(suite, verify_out, inject_fault);
  if (scenarios->parsed()) {
    if (!list && run_id.empty()) {
      std::cerr << "scenarios: need --list or --run <id>\n";
      return 2;
    }
    return cmd_scenarios(list, run_id, scen_out);
  }
  return 2;
}

}  // namespace wco
