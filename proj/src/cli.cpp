#include "slotdesign/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "slotdesign/bounds.hpp"
#include "slotdesign/data.hpp"
#include "slotdesign/eval.hpp"
#include "slotdesign/heuristics.hpp"
#include "slotdesign/io.hpp"
#include "slotdesign/oracle.hpp"
#include "slotdesign/piecewise.hpp"
#include "slotdesign/solver.hpp"

namespace slotdesign {
namespace {

using io::json;
using Clock = std::chrono::steady_clock;

// Thrown for argument combinations CLI11 cannot express; maps to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

struct CostArgs {
  double q = 30.0, b = 20.0, c = 80.0, horizon = 720.0, rho = 0.0;

  void attach(CLI::App* app) {
    app->add_option("--q", q, "overtime cost per minute")->capture_default_str();
    app->add_option("--b", b, "idle cost per minute")->capture_default_str();
    app->add_option("--c", c, "activation cost per group")->capture_default_str();
    app->add_option("--horizon", horizon, "largest admissible slot length T")->capture_default_str();
    app->add_option("--rho", rho, "total-variation radius")->capture_default_str();
  }
  CostParams params() const {
    CostParams p{q, b, c, horizon, rho};
    p.validate();
    return p;
  }
  json to_json() const { return {{"q", q}, {"b", b}, {"c", c}, {"horizon", horizon}, {"rho", rho}}; }
};

// Reproducibility record attached to every JSON output.
class Manifest {
 public:
  Manifest(std::string command, std::uint64_t seed) : command_(std::move(command)), seed_(seed), start_(Clock::now()) {}
  void add_config(const json& config) { config_["args"] = config; }
  void add_input(const std::string& path) { inputs_ += io::read_file(path); }
  json finish() const {
    const double wall = std::chrono::duration<double>(Clock::now() - start_).count();
    return {{"command", command_},
            {"config_digest", sha256_hex(config_.dump() + '\0' + inputs_)},
            {"seed", seed_},
            {"version", kVersion},
            {"wall_time_s", wall}};
  }

 private:
  std::string command_;
  std::uint64_t seed_;
  Clock::time_point start_;
  json config_ = json::object();
  std::string inputs_;
};

void emit(std::ostream& out, json body, const Manifest& manifest) {
  body["manifest"] = manifest.finish();
  out << body.dump(2) << '\n';
}

bool is_csv(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      out.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw UsageError("bad number '" + cell + "' in list");
    }
  }
  return out;
}

std::vector<double> shares_from_counts(const std::vector<std::vector<double>>& per_mode) {
  double total = 0.0;
  for (const auto& v : per_mode) total += static_cast<double>(v.size());
  std::vector<double> out;
  for (const auto& v : per_mode) out.push_back(static_cast<double>(v.size()) / total);
  return out;
}

// Solution documents are accepted either bare or wrapped in a solve output.
std::pair<Partition, std::vector<double>> load_template(const std::string& path, std::size_t mode_count) {
  json doc;
  try {
    doc = json::parse(io::read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, path + ": " + e.what());
  }
  if (doc.contains("solution")) doc = doc["solution"];
  if (!doc.contains("partition") || !doc.contains("durations"))
    throw Error(ErrorKind::InvalidArgument, path + ": expected 'partition' and 'durations'");
  auto partition = io::partition_from_json(doc["partition"], mode_count);
  auto durations = doc["durations"].get<std::vector<double>>();
  if (durations.size() != partition.size())
    throw Error(ErrorKind::InvalidArgument, path + ": one duration per group required");
  // partition_from_json reorders groups by smallest member; keep durations aligned.
  std::vector<double> aligned(durations.size());
  for (std::size_t g = 0; g < doc["partition"].size(); ++g) {
    const int first = doc["partition"][g].at(0).get<int>() - 1;
    aligned[partition.group_of(first)] = durations[g];
  }
  return {std::move(partition), std::move(aligned)};
}

int cmd_feasibility(const std::string& path, std::ostream& out) {
  Manifest manifest("feasibility", 0);
  manifest.add_input(path);
  const auto modes = io::load_modes(path);
  json rows = json::array();
  bool all_ok = true;
  for (const auto& m : modes.modes()) {
    const auto r = check_feasibility(m);
    all_ok = all_ok && r.ok;
    json row = {{"name", m.name}, {"ok", r.ok}, {"semivariance_lower", r.semivariance_lower}, {"slack", r.slack}};
    if (!r.ok) row["violated"] = r.violated;
    rows.push_back(row);
  }
  emit(out, {{"modes", rows}, {"all_ok", all_ok}}, manifest);
  return all_ok ? 0 : 2;
}

struct SolveArgs {
  std::string input;
  bool exact = false;
  std::string heuristic;
  std::string features;
  bool raw_features = false;
  std::string k = "auto";
  int folds = 5;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  CostArgs costs;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  if (a.exact == !a.heuristic.empty()) throw UsageError("solve: choose exactly one of --exact or --heuristic");
  Manifest manifest("solve", a.seed);
  manifest.add_input(a.input);
  const auto costs = a.costs.params();
  SolverOptions opts;
  opts.threads = a.threads;

  std::optional<std::vector<std::vector<double>>> samples;
  ModeSet modes;
  if (is_csv(a.input)) {
    samples = io::load_samples_csv(a.input);
    modes = estimate_mode_set(*samples, shares_from_counts(*samples));
  } else {
    modes = io::load_modes(a.input);
  }

  json config = {{"costs", a.costs.to_json()}, {"input", a.input}};
  json extra = json::object();
  Solution sol;
  if (a.exact) {
    config["method"] = "exact";
    sol = solve_exact(modes, costs, opts);
  } else {
    const auto method = parse_method(a.heuristic);
    const auto spec = a.features.empty() ? default_features(method) : FeatureSpec::parse(a.features, !a.raw_features);
    ClusterConfig cc;
    cc.seed = a.seed;
    if (a.k == "auto") {
      if (!samples) throw UsageError("solve: --k auto needs a sample CSV input for cross-validation");
      std::vector<int> ks;
      for (int k = 1; k <= static_cast<int>(modes.size()); ++k) ks.push_back(k);
      const auto cv = crossvalidate_k(*samples, shares_from_counts(*samples), costs, spec, method, a.folds, ks, a.seed, opts);
      cc.k = cv.best_k;
      extra["cross_validation"] = {{"ks", cv.ks}, {"mean_cost", cv.mean_cost}, {"best_k", cv.best_k}};
    } else {
      try {
        cc.k = std::stoi(a.k);
      } catch (const std::exception&) {
        throw UsageError("solve: --k must be 'auto' or an integer");
      }
    }
    config["method"] = a.heuristic;
    config["features"] = spec.to_string();
    config["standardize"] = spec.standardize;
    config["k"] = cc.k;
    sol = solve_heuristic(modes, costs, spec, method, cc, opts);
  }
  manifest.add_config(config);
  json body = io::solution_to_json(sol);
  for (auto& [key, value] : extra.items()) body[key] = value;
  emit(out, body, manifest);
  return 0;
}

int cmd_pi_curve(const ModeStats& st, const CostArgs& ca, double step, std::ostream& out) {
  if (!(step > 0.0)) throw UsageError("pi-curve: --step must be positive");
  const PiecewiseWorstCase pw(st, ca.params());
  out << "t,pi,slope_left,slope_right\n" << std::setprecision(12);
  const auto n = static_cast<long>(std::floor(ca.horizon / step + 1e-9));
  for (long i = 0; i <= n; ++i) {
    const double t = std::min(i * step, ca.horizon);
    const auto [l, r] = pw.slopes(t);
    out << t << ',' << pw.value(t) << ',' << l << ',' << r << '\n';
  }
  return 0;
}

int cmd_oracle_check(const ModeStats& st, const CostArgs& ca, int points, const OracleConfig& oc, std::ostream& out) {
  if (points < 2) throw UsageError("oracle-check: --points must be >= 2");
  Manifest manifest("oracle-check", 0);
  const auto costs = ca.params();
  manifest.add_config({{"costs", ca.to_json()},
                       {"stats", {st.mean, st.std_dev, st.semivariance}},
                       {"points", points},
                       {"support_max", oc.support_max},
                       {"grid_step", oc.grid_step},
                       {"band", oc.moment_band}});
  const PiecewiseWorstCase pw(st, costs);
  json rows = json::array();
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = costs.horizon * i / (points - 1);
    const double closed = pw.value(t);
    const double oracle = worst_case_discrete(st, costs, t, oc).value;
    const double gap = std::abs(oracle - closed) / std::max(closed, 1e-12);
    worst = std::max(worst, gap);
    rows.push_back({{"t", t}, {"piece", pw.piece_at(t)}, {"closed_form", closed}, {"oracle", oracle}, {"rel_gap", gap}});
  }
  emit(out, {{"rows", rows}, {"max_rel_gap", worst}}, manifest);
  return 0;
}

struct DatagenArgs {
  GenConfig config;
  double perturb = 0.0;
  std::string train_path = "train.csv", test_path = "test.csv", truth_path = "truth.json";
};

int cmd_datagen(const DatagenArgs& a, std::ostream& out) {
  Manifest manifest("datagen", a.config.seed);
  const auto law = draw_law(a.config);
  const auto test_law = perturb(law, a.perturb);
  const auto s = sample(law, test_law, a.config);
  {
    std::ofstream f(a.train_path);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + a.train_path);
    io::write_samples_csv(f, s.train);
  }
  {
    std::ofstream f(a.test_path);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + a.test_path);
    io::write_samples_csv(f, s.test);
  }
  json laws = json::array();
  for (std::size_t l = 0; l < law.laws.size(); ++l)
    laws.push_back({{"type_id", l + 1},
                    {"log_mean", law.laws[l].log_mean},
                    {"log_std", law.laws[l].log_std},
                    {"test_log_mean", test_law.laws[l].log_mean},
                    {"test_log_std", test_law.laws[l].log_std}});
  manifest.add_config({{"modes", a.config.modes},
                       {"n_train", a.config.n_train},
                       {"n_test", a.config.n_test},
                       {"clip_max", a.config.clip_max},
                       {"min_samples_per_mode", a.config.min_samples_per_mode},
                       {"perturb", a.perturb}});
  json truth = {{"laws", laws},
                {"nominal_probs", s.nominal_probs},
                {"realized_train_share", s.realized_train_share},
                {"manifest", manifest.finish()}};
  {
    std::ofstream f(a.truth_path);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + a.truth_path);
    f << truth.dump(2) << '\n';
  }
  emit(out, {{"train", a.train_path}, {"test", a.test_path}, {"truth", a.truth_path}}, manifest);
  return 0;
}

void print_eval_text(std::ostream& out, const EvalReport& r) {
  out << std::fixed << std::setprecision(2);
  out << std::setw(6) << "group" << std::setw(12) << "duration" << std::setw(14) << "mean_cost" << std::setw(12)
      << "idle_min" << std::setw(12) << "over_min" << '\n';
  for (std::size_t g = 0; g < r.groups.size(); ++g)
    out << std::setw(6) << g + 1 << std::setw(12) << r.groups[g].duration << std::setw(14) << r.groups[g].mean_cost
        << std::setw(12) << r.groups[g].idle_minutes << std::setw(12) << r.groups[g].overtime_minutes << '\n';
  out << "total " << r.total_cost << " (activation " << r.activation << ", idle " << r.idle_minutes_mean
      << " min, overtime " << r.overtime_minutes_mean << " min)\n";
}

int cmd_eval(const std::string& sol_path, const std::string& modes_path, const std::string& test_path,
             const CostArgs& ca, const std::string& format, std::ostream& out) {
  Manifest manifest("eval", 0);
  manifest.add_input(sol_path);
  manifest.add_input(modes_path);
  manifest.add_input(test_path);
  manifest.add_config({{"costs", ca.to_json()}});
  const auto modes = io::load_modes(modes_path);
  const auto [partition, durations] = load_template(sol_path, modes.size());
  const auto samples = io::load_samples_csv(test_path);
  if (samples.size() != modes.size()) throw Error(ErrorKind::MissingSamples, "eval: test CSV must cover every mode");
  std::vector<double> probs;
  for (const auto& m : modes.modes()) probs.push_back(m.nominal_prob);
  const auto rep = empirical_cost(partition, durations, samples, probs, ca.params());
  if (format == "text") {
    print_eval_text(out, rep);
    return 0;
  }
  json groups = json::array();
  for (const auto& g : rep.groups)
    groups.push_back({{"duration", g.duration}, {"mean_cost", g.mean_cost}, {"idle_minutes", g.idle_minutes},
                      {"overtime_minutes", g.overtime_minutes}});
  emit(out,
       {{"total_cost", rep.total_cost},
        {"activation", rep.activation},
        {"idle_minutes_mean", rep.idle_minutes_mean},
        {"overtime_minutes_mean", rep.overtime_minutes_mean},
        {"groups", groups}},
       manifest);
  return 0;
}

int cmd_overrides(const std::string& sol_path, const std::string& modes_path, const std::string& demand_path,
                  double capacity, const std::string& shares_text, bool indicator, const std::string& format,
                  std::ostream& out) {
  Manifest manifest("overrides", 0);
  manifest.add_input(sol_path);
  manifest.add_input(modes_path);
  manifest.add_input(demand_path);
  manifest.add_config({{"capacity", capacity}, {"shares", shares_text}, {"indicator", indicator}});
  const auto modes = io::load_modes(modes_path);
  const auto [partition, durations] = load_template(sol_path, modes.size());
  std::vector<double> shares;
  if (shares_text.empty()) {
    for (const auto& g : partition.groups()) {
      double mass = 0.0;
      for (int l : g) mass += modes[l].nominal_prob;
      shares.push_back(mass);
    }
  } else {
    shares = parse_number_list(shares_text);
    if (shares.size() != partition.size()) throw UsageError("overrides: one share per group required");
  }
  const auto alloc = allocate_slots(capacity, durations, shares);
  const auto demand = io::load_demand_csv(demand_path);
  const auto rep = count_overrides(alloc, demand, indicator);
  if (format == "text") {
    out << std::setw(6) << "group" << std::setw(12) << "duration" << std::setw(8) << "slots" << std::setw(12)
        << "overrides" << '\n';
    for (std::size_t g = 0; g < alloc.lines.size(); ++g)
      out << std::setw(6) << g + 1 << std::setw(12) << alloc.lines[g].duration << std::setw(8) << alloc.lines[g].slots
          << std::setw(12) << rep.per_group[g] << '\n';
    out << "used " << alloc.used_minutes() << " of " << capacity << " minutes; overrides " << rep.total << '\n';
    return 0;
  }
  json lines = json::array();
  for (std::size_t g = 0; g < alloc.lines.size(); ++g)
    lines.push_back({{"duration", alloc.lines[g].duration}, {"slots", alloc.lines[g].slots}, {"overrides", rep.per_group[g]}});
  emit(out,
       {{"capacity_minutes", capacity},
        {"used_minutes", alloc.used_minutes()},
        {"groups", lines},
        {"overrides", rep.total},
        {"unit", indicator ? "day_indicator" : "shortfall"}},
       manifest);
  return 0;
}

int cmd_bench(int modes_count, bool clinic, int repeats, std::uint64_t seed, const CostArgs& ca, unsigned threads,
              std::ostream& out) {
  Manifest manifest("bench", seed);
  manifest.add_config({{"modes", modes_count}, {"clinic", clinic}, {"repeats", repeats}, {"costs", ca.to_json()}});
  ModeSet modes;
  if (clinic) {
    modes = clinic_modes();
  } else {
    GenConfig gc;
    gc.modes = modes_count;
    gc.seed = seed;
    gc.min_samples_per_mode = 2;
    modes = estimate_mode_set(generate(gc));
  }
  SolverOptions opts;
  opts.threads = threads;
  json runs = json::array();
  double objective = 0.0;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    objective = solve_exact(modes, ca.params(), opts).objective;
    runs.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
  }
  emit(out,
       {{"modes", modes.size()}, {"partitions", bell_number(static_cast<int>(modes.size()))}, {"seconds", runs},
        {"objective", objective}},
       manifest);
  return 0;
}

void attach_stats(CLI::App* app, ModeStats& st) {
  app->add_option("--mean", st.mean, "mean duration")->required();
  app->add_option("--std", st.std_dev, "standard deviation")->required();
  app->add_option("--semivariance", st.semivariance, "normalized semivariance")->required();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust appointment slot-duration design"};
  app.failure_message(CLI::FailureMessage::help);
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* feas = app.add_subcommand("feasibility", "check every mode of a JSON mode set");
  std::string feas_path;
  feas->add_option("modes", feas_path, "mode-set JSON")->required()->check(CLI::ExistingFile);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "choose groups and slot durations");
  solve->add_option("input", sa.input, "mode-set JSON or sample CSV")->required()->check(CLI::ExistingFile);
  solve->add_flag("--exact", sa.exact, "enumerate every partition");
  solve->add_option("--heuristic", sa.heuristic, "kmeans or kmedoids")->check(CLI::IsMember({"kmeans", "kmedoids"}));
  solve->add_option("--features", sa.features, "comma list over m,sigma,s");
  solve->add_flag("--raw-features", sa.raw_features, "skip z-score standardization");
  solve->add_option("--k", sa.k, "cluster count or 'auto'")->capture_default_str();
  solve->add_option("--folds", sa.folds, "cross-validation folds")->capture_default_str();
  solve->add_option("--seed", sa.seed)->capture_default_str();
  solve->add_option("--threads", sa.threads, "worker threads (default: SLOTDESIGN_THREADS or all cores)");
  sa.costs.attach(solve);

  ModeStats curve_stats;
  CostArgs curve_costs;
  double step = 1.0;
  auto* curve = app.add_subcommand("pi-curve", "CSV of the worst-case cost curve");
  attach_stats(curve, curve_stats);
  curve_costs.attach(curve);
  curve->add_option("--step", step, "grid step in minutes")->capture_default_str();

  ModeStats oc_stats;
  CostArgs oc_costs;
  OracleConfig oc;
  int oc_points = 21;
  auto* oracle = app.add_subcommand("oracle-check", "compare the closed form with the discretized LP");
  attach_stats(oracle, oc_stats);
  oc_costs.attach(oracle);
  oracle->add_option("--points", oc_points)->capture_default_str();
  oracle->add_option("--support-max", oc.support_max)->capture_default_str();
  oracle->add_option("--grid-step", oc.grid_step)->capture_default_str();
  oracle->add_option("--band", oc.moment_band)->capture_default_str();

  DatagenArgs da;
  auto* datagen = app.add_subcommand("datagen", "synthetic lognormal instance");
  datagen->add_option("--modes", da.config.modes)->capture_default_str();
  datagen->add_option("--seed", da.config.seed)->capture_default_str();
  datagen->add_option("--n-train", da.config.n_train)->capture_default_str();
  datagen->add_option("--n-test", da.config.n_test)->capture_default_str();
  datagen->add_option("--clip-max", da.config.clip_max)->capture_default_str();
  datagen->add_option("--min-per-mode", da.config.min_samples_per_mode)->capture_default_str();
  datagen->add_option("--perturb", da.perturb, "scale test log parameters by 1+eps")->capture_default_str();
  datagen->add_option("--train", da.train_path)->capture_default_str();
  datagen->add_option("--test", da.test_path)->capture_default_str();
  datagen->add_option("--truth", da.truth_path)->capture_default_str();

  std::string ev_sol, ev_modes, ev_test, ev_format = "json";
  CostArgs ev_costs;
  auto* eval = app.add_subcommand("eval", "out-of-sample cost of a template");
  eval->add_option("--solution", ev_sol, "solve output JSON")->required()->check(CLI::ExistingFile);
  eval->add_option("--modes", ev_modes, "mode-set JSON (nominal probabilities)")->required()->check(CLI::ExistingFile);
  eval->add_option("--test", ev_test, "sample CSV")->required()->check(CLI::ExistingFile);
  eval->add_option("--format", ev_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  ev_costs.attach(eval);

  std::string ov_sol, ov_modes, ov_demand, ov_shares, ov_format = "json";
  double ov_capacity = 0.0;
  bool ov_indicator = false;
  auto* overrides = app.add_subcommand("overrides", "allocate template slots and count overrides");
  overrides->add_option("--solution", ov_sol)->required()->check(CLI::ExistingFile);
  overrides->add_option("--modes", ov_modes)->required()->check(CLI::ExistingFile);
  overrides->add_option("--demand", ov_demand, "CSV date,group_id,count")->required()->check(CLI::ExistingFile);
  overrides->add_option("--capacity", ov_capacity, "daily minutes")->required();
  overrides->add_option("--shares", ov_shares, "comma list of group shares (default: nominal mass)");
  overrides->add_flag("--indicator", ov_indicator, "count days with a shortfall instead of shortfall units");
  overrides->add_option("--format", ov_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  int bench_modes = 7, bench_repeats = 3;
  bool bench_clinic = false;
  std::uint64_t bench_seed = 1;
  unsigned bench_threads = 0;
  CostArgs bench_costs;
  auto* bench = app.add_subcommand("bench", "time the exhaustive solver");
  bench->add_option("--modes", bench_modes)->capture_default_str();
  bench->add_flag("--clinic", bench_clinic, "use the built-in seven-type clinic statistics");
  bench->add_option("--repeats", bench_repeats)->capture_default_str();
  bench->add_option("--seed", bench_seed)->capture_default_str();
  bench->add_option("--threads", bench_threads);
  bench_costs.attach(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*feas) return cmd_feasibility(feas_path, out);
    if (*solve) return cmd_solve(sa, out);
    if (*curve) return cmd_pi_curve(curve_stats, curve_costs, step, out);
    if (*oracle) return cmd_oracle_check(oc_stats, oc_costs, oc_points, oc, out);
    if (*datagen) return cmd_datagen(da, out);
    if (*eval) return cmd_eval(ev_sol, ev_modes, ev_test, ev_costs, ev_format, out);
    if (*overrides)
      return cmd_overrides(ov_sol, ov_modes, ov_demand, ov_capacity, ov_shares, ov_indicator, ov_format, out);
    if (*bench) return cmd_bench(bench_modes, bench_clinic, bench_repeats, bench_seed, bench_costs, bench_threads, out);
  } catch (const UsageError& e) {
    err << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << '\n' << app.help() << '\n';
    return 1;
  } catch (const Error& e) {
    err << json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace slotdesign
