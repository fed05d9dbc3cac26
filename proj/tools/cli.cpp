#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "tropmc/errors.hpp"
#include "tropmc/hepp.hpp"
#include "tropmc/montecarlo.hpp"
#include "tropmc/rational.hpp"
#include "tropmc/sampler.hpp"
#include "tropmc/series.hpp"
#include "tropmc/tables.hpp"

namespace tropmc::cli {

namespace {

constexpr const char* kWorkersVariable = "TROPMC_WORKERS";

struct RunConfig {
  int k = 3;
  std::string dimension = "3";
  std::string mode = "plain";
  int loops = 1;
  int legs = -1;  // per-subcommand default
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out_path;
  std::string tables_path;
  std::string format = "json";
  bool timing = false;
  double mass_ratio = 1.0;
  // subcommand specific
  bool beaded = false;
  bool projective = false;
  std::string top = "half";
  std::string graph_text;
  std::string couplings = "3";
  int weight = -1;
  bool allow_singular = false;
};

int default_workers() {
  if (const char* env = std::getenv(kWorkersVariable)) {
    try {
      int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

CoefficientTables obtain_tables(const RunConfig& cfg, const TableSpec& spec) {
  if (!cfg.tables_path.empty()) return load_tables(cfg.tables_path, spec);
  return CoefficientTables::build(spec);
}

void emit(const RunConfig& cfg, const std::string& line, std::ostream& out) {
  out << line << '\n';
  if (!cfg.out_path.empty()) {
    std::ofstream file(cfg.out_path, std::ios::app);
    if (!file) throw FormatError("cannot open '" + cfg.out_path + "' for appending");
    file << line << '\n';
  }
}

std::string report_json(const EstimateReport& r, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["quantity"] = r.quantity;
  j["k"] = r.k;
  j["dimension"] = format_double(r.dimension);
  j["loops"] = r.loops;
  j["legs"] = r.legs;
  j["samples"] = r.samples;
  j["seed"] = cfg.seed;
  j["aux_hits"] = r.aux_hits;
  j["value"] = r.value;
  j["stderr"] = r.standard_error;
  j["normalization"] = r.normalization;
  if (!r.secondary_quantity.empty()) {
    j["secondary_quantity"] = r.secondary_quantity;
    j["secondary_value"] = r.secondary_value;
    j["secondary_stderr"] = r.secondary_error;
  }
  if (cfg.timing) j["wall_seconds"] = r.wall_seconds;
  return j.dump();
}

std::string report_csv(const EstimateReport& r, const RunConfig& cfg) {
  std::ostringstream line;
  const std::string time = cfg.timing ? format_double(r.wall_seconds) : "";
  if (r.secondary_quantity.empty()) {
    line << "L,samples,value,stderr,time\n";
    line << r.loops << ',' << r.samples << ',' << format_double(r.value) << ','
         << format_double(r.standard_error) << ',' << time;
  } else {
    line << "L,samples,value,stderr,hepp_value,hepp_stderr,hits,time\n";
    line << r.loops << ',' << r.samples << ',' << format_double(r.value) << ','
         << format_double(r.standard_error) << ',' << format_double(r.secondary_value) << ','
         << format_double(r.secondary_error) << ',' << r.aux_hits << ',' << time;
  }
  return line.str();
}

void emit_report(const EstimateReport& r, const RunConfig& cfg, std::ostream& out) {
  emit(cfg, cfg.format == "csv" ? report_csv(r, cfg) : report_json(r, cfg), out);
}

RunOptions run_options(const RunConfig& cfg) {
  RunOptions o;
  o.samples = cfg.samples;
  o.seed = cfg.seed;
  o.workers = cfg.workers;
  return o;
}

double dimension_value(const RunConfig& cfg) { return parse_rational(cfg.dimension).get_d(); }

void cmd_tables(const RunConfig& cfg, std::ostream& out) {
  TableSpec spec{cfg.k, dimension_value(cfg), parse_mode(cfg.mode), cfg.loops,
                 cfg.legs < 0 ? cfg.k : cfg.legs};
  CoefficientTables t = CoefficientTables::build(spec);
  const std::string path = cfg.out_path.empty() ? "tables.json" : cfg.out_path;
  save_tables(t, path);
  out << "wrote " << path << " (k=" << spec.k << ", dimension=" << format_double(spec.dimension)
      << ", mode=" << to_string(spec.mode) << ", l_max=" << spec.l_max << ", n_max=" << spec.n_max
      << ")\n";
}

void cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const int legs = cfg.legs < 0 ? cfg.k : cfg.legs;
  TableSpec spec{cfg.k, dimension_value(cfg), parse_mode(cfg.mode), cfg.loops, std::max(legs, 2)};
  CoefficientTables tables = obtain_tables(cfg, spec);
  Sampler sampler(tables);
  Rng rng(cfg.seed, 0);
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    MetricGraphSample s = cfg.beaded ? sampler.sample_beaded(cfg.loops, legs, rng)
                                     : sampler.sample_one_pi(cfg.loops, legs, rng);
    if (cfg.projective && s.graph.edge_count() > 0) s = to_projective(s);
    std::string line = to_text(s.graph) + " COORDS=";
    for (std::size_t e = 0; e < s.coords.size(); ++e) {
      if (e) line += ',';
      line += format_double(s.coords[e]);
    }
    emit(cfg, line, out);
  }
}

void cmd_estimate_phi3(const RunConfig& cfg, std::ostream& out) {
  const int legs = cfg.legs < 0 ? 3 : cfg.legs;
  TableSpec spec{3, 3.0, Mode::plain, cfg.loops, std::max(legs, 2)};
  CoefficientTables tables = obtain_tables(cfg, spec);
  EstimateReport r = estimate_one_pi(tables, cfg.loops, legs, run_options(cfg), cfg.mass_ratio);
  r.quantity = legs == 3 ? "phi3_vertex" : "phi3_one_pi";
  emit_report(r, cfg, out);
}

void cmd_estimate_beta(const RunConfig& cfg, std::ostream& out) {
  TableSpec spec{4, 4.0, Mode::positive, cfg.loops, 4};
  CoefficientTables tables = obtain_tables(cfg, spec);
  const TopNormalization top = cfg.top == "full" ? TopNormalization::full_beaded : TopNormalization::half_beaded;
  emit_report(estimate_beta_prim(tables, cfg.loops, run_options(cfg), top), cfg, out);
}

void cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Rational d = parse_rational(cfg.dimension);
  const Mode mode = parse_mode(cfg.mode);
  if (!cfg.graph_text.empty()) {
    out << to_string(hepp(parse_graph(cfg.graph_text), d, mode)) << '\n';
    return;
  }
  const int legs = cfg.legs < 0 ? cfg.k : cfg.legs;
  out << to_string(ensemble_sum_oracle(cfg.k, d, cfg.loops, legs, mode)) << '\n';
}

void cmd_series(const RunConfig& cfg, std::ostream& out) {
  std::vector<int> couplings;
  std::stringstream list(cfg.couplings);
  for (std::string item; std::getline(list, item, ',');) couplings.push_back(std::stoi(item));
  const Rational d = parse_rational(cfg.dimension);
  SeriesTruncation trunc{cfg.loops, cfg.weight < 0 ? 2 * cfg.loops : cfg.weight};
  TruncatedSeries s = solve_gamma_tr(couplings, d, trunc,
                                     cfg.allow_singular ? SingularPolicy::mark : SingularPolicy::raise);
  std::vector<std::pair<int, Monomial>> order;
  for (const auto& [m, c] : s.terms()) order.emplace_back(s.twice_loop_order(m), m);
  for (const auto& m : s.undefined()) order.emplace_back(s.twice_loop_order(m), m);
  std::sort(order.begin(), order.end());
  for (const auto& [twice, m] : order) {
    out << "L=" << twice / 2 << ' ' << s.format(m) << ' '
        << (s.is_undefined(m) ? std::string("undefined") : to_string(s.coefficient(m))) << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical Monte Carlo sampling of Feynman integrals"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.workers = default_workers();

  auto add_sector = [&](CLI::App* sub, bool with_k) {
    if (with_k) sub->add_option("--k", cfg.k, "vertex valence")->check(CLI::Range(3, 64));
    sub->add_option("--loops", cfg.loops, "loop number (tables: largest loop number)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--legs", cfg.legs, "number of legs (tables: largest leg count)")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "number of samples")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--workers", cfg.workers, std::string("worker threads (default $") + kWorkersVariable + ")")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tables", cfg.tables_path, "load coefficient tables from a file");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "also append records to this file");
    sub->add_option("--format", cfg.format, "record format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--timing", cfg.timing, "include wall time (output is then not reproducible)");
  };

  auto* tables = app.add_subcommand("tables", "build coefficient tables and write them to a file");
  add_sector(tables, true);
  tables->add_option("--dim", cfg.dimension, "space-time dimension, decimal or p/q");
  tables->add_option("--mode", cfg.mode, "plain or positive")->check(CLI::IsMember({"plain", "positive"}));
  tables->add_option("--out", cfg.out_path, "output path (default tables.json)");

  auto* sample = app.add_subcommand("sample", "draw metric graphs");
  add_sector(sample, true);
  add_run(sample);
  sample->add_option("--dim", cfg.dimension, "space-time dimension, decimal or p/q");
  sample->add_option("--mode", cfg.mode, "plain or positive")->check(CLI::IsMember({"plain", "positive"}));
  sample->add_flag("--beaded", cfg.beaded, "draw beaded graphs instead of 1PI graphs");
  sample->add_flag("--projective", cfg.projective, "scale coordinates so the largest is 1");
  sample->add_option("--out", cfg.out_path, "also append lines to this file");

  auto* phi3 = app.add_subcommand("estimate-phi3", "phi^3 vertex function at D=3");
  add_sector(phi3, false);
  add_run(phi3);
  add_output(phi3);
  phi3->add_option("--mass-ratio", cfg.mass_ratio, "m^2/mu^2")->check(CLI::PositiveNumber);

  auto* beta = app.add_subcommand("estimate-beta-prim", "primitive phi^4 beta function at D=4");
  beta->add_option("--loops", cfg.loops, "loop number")->check(CLI::PositiveNumber);
  add_run(beta);
  add_output(beta);
  beta->add_option("--top-normalization", cfg.top, "half: B/2 (default), full: B")
      ->check(CLI::IsMember({"half", "full"}));

  auto* oracle = app.add_subcommand("oracle", "exact Hepp bound sums (small graphs only)");
  add_sector(oracle, true);
  oracle->add_option("--dim", cfg.dimension, "rational dimension, p/q");
  oracle->add_option("--mode", cfg.mode, "plain or positive")->check(CLI::IsMember({"plain", "positive"}));
  oracle->add_option("--graph", cfg.graph_text, "evaluate one graph given in line format");

  auto* series = app.add_subcommand("series", "solve the tropical loop equation exactly");
  series->add_option("--couplings", cfg.couplings, "active valences, comma separated");
  series->add_option("--dim", cfg.dimension, "rational dimension, p/q");
  series->add_option("--loops", cfg.loops, "largest loop order")->check(CLI::NonNegativeNumber);
  series->add_option("--weight", cfg.weight, "largest coupling weight (default 2*loops)");
  series->add_flag("--allow-singular", cfg.allow_singular, "report divergent coefficients instead of failing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*tables) cmd_tables(cfg, out);
    else if (*sample) cmd_sample(cfg, out);
    else if (*phi3) cmd_estimate_phi3(cfg, out);
    else if (*beta) cmd_estimate_beta(cfg, out);
    else if (*oracle) cmd_oracle(cfg, out);
    else if (*series) cmd_series(cfg, out);
  } catch (const InvalidSector& e) {
    err << "invalid sector: " << e.what() << '\n';
    return 3;
  } catch (const NonGenericDimension& e) {
    err << "non-generic dimension: " << e.what() << " [" << e.where() << "]\n";
    return 4;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tropmc::cli
