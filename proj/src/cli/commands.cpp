#include "zdx/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdx/bounds/catalog.hpp"
#include "zdx/bounds/serialize.hpp"
#include "zdx/cli/config.hpp"
#include "zdx/lab/bprocess.hpp"
#include "zdx/lab/exact_checks.hpp"
#include "zdx/lab/harness.hpp"
#include "zdx/lab/poly.hpp"
#include "zdx/lab/pointset.hpp"
#include "zdx/lab/report.hpp"
#include "zdx/optimizer/certificate_json.hpp"
#include "zdx/optimizer/tabulate.hpp"

#ifndef ZDX_VERSION
#define ZDX_VERSION "0.0.0"
#endif

namespace zdx::cli {

using nlohmann::ordered_json;

std::string version() { return ZDX_VERSION; }

namespace {

struct Context {
  RunConfig cfg;
  std::string command;
  std::ostream& out;
};

void csv_header(const Context& c) {
  c.out << "# zdx " << version() << "\n# command: " << c.command << "\n# seed: " << c.cfg.seed << "\n";
}

ordered_json json_header(const Context& c) {
  return {{"tool", "zdx"}, {"version", version()}, {"command", c.command}, {"seed", c.cfg.seed}};
}

std::string join(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? ", " : "") + cells[i];
  return s;
}

Rat parse_rat(const std::string& text, const std::string& what) {
  try {
    return Rat::parse(text);
  } catch (const std::exception&) {
    throw UsageError(what + " must be an exact rational p/q, got '" + text + "'");
  }
}

// ---- density ----

struct DensityArgs {
  std::string sigma, grid, strategy = "all";
  bool compare = false;
};

std::vector<Rat> density_grid(const DensityArgs& a) {
  if (a.sigma.empty() == a.grid.empty()) throw UsageError("density needs exactly one of --sigma or --grid");
  if (!a.sigma.empty()) return {parse_rat(a.sigma, "--sigma")};
  std::vector<std::string> parts;
  std::stringstream ss(a.grid);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw UsageError("--grid must be lo:hi:step, got '" + a.grid + "'");
  const Rat lo = parse_rat(parts[0], "grid lo"), hi = parse_rat(parts[1], "grid hi"), step = parse_rat(parts[2], "grid step");
  if (step.sign() <= 0) throw UsageError("grid step must be positive");
  if (hi >= lo && ((hi - lo) / step).to_double() > 100000) throw UsageError("grid has more than 100000 points");
  return rational_grid(lo, hi, step);
}

int cmd_density(const Context& c, const DensityArgs& a) {
  std::vector<Strategy> strategies;
  if (a.strategy == "all")
    strategies = {Strategy::zd1, Strategy::zd2};
  else if (a.strategy == "zd1" || a.strategy == "zd2")
    strategies = {strategy_from_name(a.strategy)};
  else
    throw UsageError("--strategy must be zd1, zd2 or all");
  const std::vector<Rat> grid = density_grid(a);

  std::vector<Rat> inside;
  for (const Rat& s : grid)
    if (s > Rat(1, 2) && s < Rat(1)) inside.push_back(s);
  TabulateOptions opts;
  opts.strategies = strategies;
  opts.compare = a.compare;
  const std::vector<TableRow> rows = tabulate(inside, opts);
  std::vector<std::string> compare_ids;
  if (a.compare)
    for (const auto& b : table_bounds(true))
      if (b.id != "zerodensity1" && b.id != "zerodensity2") compare_ids.push_back(cell_id(b));

  bool all_pass = true;
  std::vector<std::vector<std::string>> table;
  ordered_json jrows = ordered_json::array();
  std::size_t next = 0;
  for (const Rat& sigma : grid) {
    const TableRow* row = nullptr;
    if (next < rows.size() && rows[next].sigma == sigma) row = &rows[next++];
    std::vector<std::string> line{sigma.str()};
    ordered_json jr{{"sigma", sigma.str()}};
    ordered_json jrep = ordered_json::array();
    std::optional<Rat> best;
    std::string best_id = "none";
    auto consider = [&](const std::string& id, const Rat& v) {
      if (!best || v < *best) best = v, best_id = id;
    };
    for (std::size_t i = 0; i < strategies.size(); ++i) {
      const StrategyCertificate* cert = row && row->replays[i].cert ? &*row->replays[i].cert : nullptr;
      if (!cert) {
        line.insert(line.end(), {"out of range", "n/a"});
        jrep.push_back({{"strategy", strategy_name(strategies[i])}, {"status", "out of range"}});
        continue;
      }
      all_pass = all_pass && cert->pass;
      line.insert(line.end(), {cert->target.str(), cert->pass ? "pass" : "fail"});
      jrep.push_back(ordered_json::parse(to_json(*cert)));
      consider(strategy_name(strategies[i]), cert->target);
    }
    jr["replays"] = jrep;
    if (a.compare) {
      ordered_json cells = ordered_json::object();
      for (const auto& id : compare_ids) {
        std::optional<Rat> v;
        if (row)
          for (const auto& cell : row->cells)
            if (cell.id == id) v = cell.value;
        line.push_back(v ? v->str() : "out of range");
        cells[id] = v ? ordered_json(v->str()) : ordered_json(nullptr);
        if (v) consider(id, *v);
      }
      jr["compare"] = cells;
    }
    line.push_back(best_id);
    jr["best"] = best_id;
    table.push_back(std::move(line));
    jrows.push_back(std::move(jr));
  }

  if (c.cfg.format == Format::json) {
    ordered_json doc = json_header(c);
    doc["rows"] = jrows;
    doc["verdict"] = all_pass ? "pass" : "fail";
    c.out << doc.dump(2) << "\n";
  } else {
    csv_header(c);
    std::vector<std::string> head{"sigma"};
    for (Strategy s : strategies) head.insert(head.end(), {strategy_name(s), strategy_name(s) + "_verdict"});
    head.insert(head.end(), compare_ids.begin(), compare_ids.end());
    head.push_back("best");
    c.out << join(head) << "\n";
    for (const auto& line : table) c.out << join(line) << "\n";
  }
  return all_pass ? 0 : 1;
}

// ---- catalog ----

int cmd_catalog(const Context& c, bool as_json) {
  if (as_json || c.cfg.format == Format::json) {
    auto doc = nlohmann::json::parse(catalog_to_json(catalog()));
    doc["generator"] = json_header(c);
    c.out << doc.dump(2) << "\n";
    return 0;
  }
  csv_header(c);
  c.out << "# " << catalog().size() << " large-value bounds\n";
  for (const auto& b : catalog()) c.out << "\n" << describe(b);
  return 0;
}

// ---- lab verify ----

int cmd_verify(const Context& c, const std::string& suite) {
  if (suite != "exact" && suite != "asymptotic" && suite != "all")
    throw UsageError("--suite must be exact, asymptotic or all");
  const bool exact = suite != "asymptotic", asym = suite != "exact";
  const std::uint64_t seed = c.cfg.seed;
  bool ok = true;
  ordered_json doc = json_header(c);
  std::ostringstream csv;

  if (exact) {
    std::vector<SuiteLine> lines = exact_suite(seed, 1000);
    lines.push_back(energy_oracle_suite(seed, 100));
    ordered_json arr = ordered_json::array();
    csv << "# exact suites\nsuite, instances, failures, verdict\n";
    for (const auto& l : lines) {
      ok = ok && l.failures == 0;
      arr.push_back(to_json(l));
      csv << join({l.name, std::to_string(l.instances), std::to_string(l.failures), l.failures ? "fail" : "pass"}) << "\n";
    }
    doc["exact"] = arr;
    doc["fejer"] = to_json(fejer_facts());
  }
  if (asym) {
    const double slack = c.cfg.tolerance("harness", c.cfg.slack_budget);
    const AsymptoticSuite s = asymptotic_suite(seed, slack);
    ok = ok && s.ok();
    ordered_json entries = ordered_json::array(), trends = ordered_json::array(), bp = ordered_json::array();
    csv << "# harness entries\nid, lhs, rhs_main, ratio, slack_budget, verdict\n";
    for (const auto& e : s.entries) {
      entries.push_back(to_json(e));
      csv << join({e.id, decimal(e.lhs), decimal(e.rhs_main), decimal(e.ratio), decimal(e.slack_budget), e.verdict}) << "\n";
    }
    csv << "# trends\nid, ratio_256, ratio_512, ratio_1024, verdict\n";
    for (const auto& t : s.trends) {
      trends.push_back(to_json(t));
      std::vector<std::string> row{t.id};
      for (double r : t.ratios) row.push_back(decimal(r));
      row.push_back(t.ok() ? "pass" : "fail");
      csv << join(row) << "\n";
    }
    const auto batch = b_process_batch(seed, 20, c.cfg.tolerance("bprocess", 10));
    csv << "# b-process\nt, N, deviation, budget, verdict\n";
    for (const auto& b : batch) {
      ok = ok && b.ok;
      bp.push_back(to_json(b));
      csv << join({decimal(b.t), std::to_string(b.N), decimal(b.deviation), decimal(b.budget), b.ok ? "pass" : "fail"}) << "\n";
    }
    doc["harness"] = entries;
    doc["trends"] = trends;
    doc["bprocess"] = bp;
  }
  doc["verdict"] = ok ? "pass" : "fail";
  if (c.cfg.format == Format::json) {
    c.out << doc.dump(2) << "\n";
  } else {
    csv_header(c);
    c.out << csv.str() << "# verdict: " << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? 0 : 1;
}

// ---- lab largevalues ----

struct LargeArgs {
  long n = 64;
  std::string v_exp = "4/5";
  double t = 4096;
  std::string grid_csv;
};

int cmd_largevalues(const Context& c, const LargeArgs& a) {
  const Rat q = parse_rat(a.v_exp, "--v-exp");
  if (a.n < 2 || a.n > kHarnessMaxN) throw UsageError("window: 2 <= N <= 4096");
  if (!(a.t >= 2 && a.t <= kHarnessMaxT)) throw UsageError("window: 2 <= T <= 1e5");
  if (!(q > Rat(1, 2) && q < Rat(1))) throw UsageError("window: 1/2 < v-exp < 1");
  const double N = static_cast<double>(a.n);
  const double V = std::pow(N, q.to_double());
  const SamplePoly p = SamplePoly::random_unimodular(a.n, c.cfg.seed);
  const auto grid = eval_grid(p, a.t, 0.25);
  if (!a.grid_csv.empty()) {
    std::ofstream f(a.grid_csv);
    if (!f) throw UsageError("cannot write '" + a.grid_csv + "'");
    f << grid_csv(grid);
  }
  const PointSet A = extract_large_values(grid, V);
  const double count = static_cast<double>(A.size());
  const double logT = std::log(a.t);
  // exponents in units of log T; nu is rounded to a rational with denominator 10^6
  const double nu_d = std::log(N) / logT;
  const Rat nu(std::llround(nu_d * 1e6), 1000000);

  std::vector<std::string> head{"N", "T", "V", "count", "count_exponent"};
  std::vector<std::string> row{std::to_string(a.n), decimal(a.t), decimal(V), std::to_string(A.size()),
                               count > 0 ? decimal(std::log(count) / logT) : "-inf"};
  ordered_json preds = ordered_json::array();
  for (const auto& b : catalog()) {
    const BoundEvaluation e = evaluate(b, q, nu, Rat(0), b.k_min);
    const double predicted = std::exp(e.exponent.to_double() * logT);
    head.insert(head.end(), {b.id + "_exponent", b.id + "_predicted", b.id + "_constraints"});
    row.insert(row.end(), {decimal(e.exponent.to_double()), decimal(predicted), e.ok ? "ok" : "violated"});
    preds.push_back({{"id", b.id},
                     {"k", b.k_min ? ordered_json(*b.k_min) : ordered_json(nullptr)},
                     {"exponent", e.exponent.str()},
                     {"predicted", decimal(predicted)},
                     {"constraints", e.ok ? "ok" : "violated"}});
  }
  if (c.cfg.format == Format::json) {
    ordered_json doc = json_header(c);
    doc["instance"] = {{"N", a.n}, {"T", decimal(a.t)}, {"v_exp", q.str()}, {"V", decimal(V)}, {"nu", nu.str()}, {"d", "0"}};
    doc["count"] = A.size();
    doc["greedy_oracle_max"] = max_spaced_count(grid, V);
    doc["predictions"] = preds;
    c.out << doc.dump(2) << "\n";
  } else {
    csv_header(c);
    c.out << "# nu = " << nu.str() << ", sigma = " << q.str() << ", d = 0\n" << join(head) << "\n" << join(row) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponent calculus and numerical laboratory for large values of Dirichlet polynomials", "zdx"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format_flag;
  std::optional<std::uint64_t> seed_flag;
  std::string seed_text;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--format", format_flag, "csv or json");
  app.add_option("--seed", seed_text, "Seed (falls back to the config file, then ZDX_SEED)");

  DensityArgs dargs;
  auto* density = app.add_subcommand("density", "Density exponents and replay certificates");
  density->add_option("--sigma", dargs.sigma, "sigma as p/q");
  density->add_option("--grid", dargs.grid, "lo:hi:step, all p/q");
  density->add_option("--strategy", dargs.strategy, "zd1, zd2 or all");
  density->add_flag("--compare", dargs.compare, "Add ivic and jutila(2..8) columns");

  bool catalog_json = false;
  auto* cat = app.add_subcommand("catalog", "Large-value bound definitions");
  cat->add_flag("--json", catalog_json, "JSON document");

  auto* lab = app.add_subcommand("lab", "Numerical laboratory");
  lab->require_subcommand(1);
  std::string suite = "all";
  auto* verify = lab->add_subcommand("verify", "Exact and asymptotic check suites");
  verify->add_option("--suite", suite, "exact, asymptotic or all");
  LargeArgs largs;
  auto* large = lab->add_subcommand("largevalues", "Empirical large-value count against catalog predictions");
  large->add_option("--n", largs.n, "N");
  large->add_option("--v-exp", largs.v_exp, "V = N^q, q as p/q");
  large->add_option("--t", largs.t, "T");
  large->add_option("--grid-csv", largs.grid_csv, "Write the |value| grid as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (!seed_text.empty()) seed_flag = parse_seed(seed_text, "--seed");
    cfg.seed = resolve_seed(seed_flag, cfg.seed_set ? std::optional(cfg.seed) : std::nullopt);
    if (!format_flag.empty()) cfg.format = parse_format(format_flag);
    std::string command;
    for (const auto& a : args) command += (command.empty() ? "" : " ") + a;
    Context ctx{cfg, command, out};
    if (*density) return cmd_density(ctx, dargs);
    if (*cat) return cmd_catalog(ctx, catalog_json);
    if (*verify) return cmd_verify(ctx, suite);
    if (*large) return cmd_largevalues(ctx, largs);
    throw UsageError("no command");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zdx::cli
