// Command-line front end: simulate | bounds | ratio | mdp | tail | trace-dump.
// Exit codes: 0 success, 2 validation/parse, 3 search budget, 4 property
// violation, 1 anything else.
#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "aoisim/analysis.hpp"
#include "aoisim/bounds.hpp"
#include "aoisim/config.hpp"
#include "aoisim/csv.hpp"
#include "aoisim/engine.hpp"
#include "aoisim/errors.hpp"
#include "aoisim/oracle.hpp"
#include "aoisim/trace_io.hpp"

namespace fs = std::filesystem;
using namespace aoisim;

namespace {

std::vector<double> parse_p_list(const std::string& spec) {
  std::vector<double> out;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse probability '" + tok + "'");
    }
  }
  if (out.empty()) throw ValidationError("empty probability list");
  return out;
}

std::string join_doubles(const std::vector<double>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << format_g6(v[i]);
  }
  return os.str();
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw ValidationError("cannot open " + tmp + " for writing");
    out << text;
    if (!out) throw ValidationError("failed writing " + tmp);
  }
  fs::rename(tmp, path);
}

// stdout by default, file when requested
void emit(const CsvWriter& w, const std::string& out_path) {
  if (out_path.empty())
    std::cout << w.str();
  else
    w.write_file(out_path);
}

void comment_config(CsvWriter& w, const ExperimentConfig& cfg) {
  std::istringstream in(cfg.serialize());
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t eq = line.find('=');
    w.comment(line.substr(0, eq - 1), line.substr(eq + 2));
  }
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string config_path;
  std::string out_dir;
  bool full_scale = false;
};

std::string run_one_rep(const ExperimentConfig& cfg, PolicyKind kind, int rep,
                        const std::string& final_path, SlotIndex every) {
  const std::uint64_t rep_seed =
      derive_seed(cfg.seed, static_cast<std::uint64_t>(rep));
  const std::vector<double> p = cfg.resolve_success_probs(rep_seed);
  const SystemParams sys = cfg.system_params(rep_seed, p);
  sys.validate();
  auto policy = cfg.make_policy_for(kind, sys, p, rep_seed);
  auto channels = cfg.make_channels(rep_seed, p);
  auto mobility = cfg.make_mobility(rep_seed);

  CsvWriter w;
  w.comment("rep", std::to_string(rep));
  w.comment("rep_seed", std::to_string(rep_seed));
  w.comment("resolved_p", join_doubles(p));
  w.header({"rep", "slot", "avg_aoi", "peak_aoi"});

  const double n = static_cast<double>(sys.n_users);
  double sum_ages = 0.0, sum_peak = 0.0;
  run(sys, *policy, *channels, *mobility, [&](const SlotRecord& rec) {
    double s = 0.0;
    Age peak = 0;
    for (Age a : rec.ages_after) {
      s += static_cast<double>(a);
      peak = std::max(peak, a);
    }
    sum_ages += s;
    sum_peak += static_cast<double>(peak);
    if (rec.t % every == 0 || rec.t == sys.horizon) {
      const double t = static_cast<double>(rec.t);
      w.row({std::to_string(rep), std::to_string(rec.t),
             format_g6(sum_ages / (n * t)), format_g6(sum_peak / t)});
    }
  });

  const std::string part = final_path + ".rep" + std::to_string(rep) + ".part";
  w.write_file(part);
  return part;
}

int cmd_simulate(const SimulateArgs& args) {
  ExperimentConfig cfg = ExperimentConfig::parse_file(args.config_path);
  if (args.full_scale) cfg.n_users = 3000;
  if (!args.out_dir.empty()) cfg.output_dir = args.out_dir;
  cfg.validate();

  const std::string outdir = cfg.resolved_output_dir();
  fs::create_directories(outdir);
  const std::string stem = fs::path(args.config_path).stem().string();
  const SlotIndex every = cfg.output_every > 0
                              ? cfg.output_every
                              : std::max<SlotIndex>(1, cfg.horizon / 100);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  for (PolicyKind kind : cfg.policies) {
    const std::string final_path =
        (fs::path(outdir) / (stem + "_" + to_string(kind) + ".csv")).string();

    std::vector<std::string> parts(static_cast<std::size_t>(cfg.replications));
    std::vector<std::exception_ptr> failures(parts.size());
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        const int r = next.fetch_add(1);
        if (r >= cfg.replications) return;
        try {
          parts[static_cast<std::size_t>(r)] =
              run_one_rep(cfg, kind, r, final_path, every);
        } catch (...) {
          failures[static_cast<std::size_t>(r)] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned n_threads =
        std::min<unsigned>(hw, static_cast<unsigned>(cfg.replications));
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& f : failures)
      if (f) std::rethrow_exception(f);

    // deterministic merge in replication-seed order
    CsvWriter head;
    head.comment("command", "simulate");
    head.comment("policy", to_string(kind));
    comment_config(head, cfg);
    head.header({"rep", "slot", "avg_aoi", "peak_aoi"});
    std::string merged = head.str();
    for (const std::string& part : parts) {
      std::ifstream in(part, std::ios::binary);
      std::string line;
      while (std::getline(in, line)) {
        if (line == "rep,slot,avg_aoi,peak_aoi") continue;  // per-part header
        merged += line;
        merged += '\n';
      }
      fs::remove(part);
    }
    write_text_atomic(final_path, merged);
    std::cout << final_path << '\n';
  }
  return 0;
}

// ------------------------------------------------------------------ bounds

struct BoundsArgs {
  int n = 2;
  int m = 1;
  std::string p_spec = "1,1";
  double g = 0.0;  // 0 → uniform-mobility value
  std::string out_path;
};

int cmd_bounds(const BoundsArgs& args) {
  std::vector<double> p = parse_p_list(args.p_spec);
  if (static_cast<int>(p.size()) == 1 && args.n > 1)
    p.assign(static_cast<std::size_t>(args.n), p[0]);
  const double g = args.g > 0.0 ? args.g : g_uniform(args.n, args.m);
  const auto table = bound_report_table(args.n, args.m, p, g);

  CsvWriter w;
  w.comment("command", "bounds");
  w.comment("n_users", std::to_string(args.n));
  w.comment("n_cells", std::to_string(args.m));
  w.comment("p", join_doubles(p));
  w.comment("g", format_g6(g));
  w.header({"name", "value", "asymptotic", "formula"});
  for (const auto& row : table)
    w.row({row.name, format_g6(row.value), row.asymptotic ? "1" : "0",
           row.formula});
  emit(w, args.out_path);
  return 0;
}

// ------------------------------------------------------------------- ratio

struct FuzzArgs {
  int n = 2;
  int m = 1;
  SlotIndex t = 8;
  int instances = 500;
  std::uint64_t seed = 1;
  std::uint64_t budget = 4'000'000;
  std::string out_path;
};

int cmd_ratio_fuzz(const FuzzArgs& args) {
  if (args.n < 1 || args.m < 1 || args.t < 1 || args.instances < 1)
    throw ValidationError("fuzz needs positive n, m, t, instances");
  CsvWriter w;
  w.comment("command", "ratio fuzz");
  w.comment("n_users", std::to_string(args.n));
  w.comment("n_cells", std::to_string(args.m));
  w.comment("horizon", std::to_string(args.t));
  w.comment("instances", std::to_string(args.instances));
  w.comment("seed", std::to_string(args.seed));
  w.comment("budget", std::to_string(args.budget));
  w.header({"instance", "metric", "policy_cost", "oracle_cost", "ratio",
            "bound", "error"});

  OracleBudget budget;
  budget.max_states = args.budget;
  double max_avg = 0.0, max_peak = 0.0;
  int ok = 0;
  for (int k = 0; k < args.instances; ++k) {
    const std::uint64_t inst_seed =
        derive_seed(args.seed, static_cast<std::uint64_t>(k));
    Rng rng(derive_seed(inst_seed, 0));
    SystemParams sys;
    sys.n_users = args.n;
    sys.n_cells = args.m;
    sys.horizon = args.t;
    sys.seed = inst_seed;
    sys.success_probs.clear();
    for (int i = 0; i < args.n; ++i)
      sys.success_probs.push_back(rng.uniform_real(0.1, 0.9));

    PolicyParams pp;
    pp.kind = PolicyKind::kCma;
    auto policy = make_policy(pp, sys);
    auto channels = bec_source(sys.success_probs, derive_seed(inst_seed, 1));
    auto mobility =
        iid_uniform_source(args.n, args.m, derive_seed(inst_seed, 2));
    const Trace trace = run_simulation(sys, *policy, *channels, *mobility);

    for (Metric metric : {Metric::kAvg, Metric::kPeak}) {
      const double cost = metric == Metric::kAvg ? avg_aoi_cost(trace)
                                                 : peak_aoi_cost(trace);
      const double bound = metric == Metric::kAvg
                               ? 2.0 * args.n * args.n
                               : 2.0 * args.n;
      try {
        const OracleResult opt = brute_force_opt(trace, metric, budget);
        const RatioReport r =
            competitive_ratio(cost, opt.min_cost, to_string(metric),
                              "fuzz-" + std::to_string(k));
        (metric == Metric::kAvg ? max_avg : max_peak) =
            std::max(metric == Metric::kAvg ? max_avg : max_peak, r.ratio);
        ++ok;
        w.row({r.instance, r.metric, format_g6(r.policy_cost),
               format_g6(r.reference_cost), format_g6(r.ratio),
               format_g6(bound), ""});
      } catch (const OracleBudgetError& e) {
        w.row({"fuzz-" + std::to_string(k), to_string(metric),
               format_g6(cost), "", "", format_g6(bound), e.what()});
      }
    }
  }
  w.row({"aggregate", "avg", "", "", format_g6(max_avg),
         format_g6(2.0 * args.n * args.n), ""});
  w.row({"aggregate", "peak", "", "", format_g6(max_peak),
         format_g6(2.0 * args.n), ""});
  emit(w, args.out_path);
  return ok > 0 ? 0 : 3;
}

struct TightnessArgs {
  int n = 3;
  std::vector<long> deltas{11, 101, 501};
  long blocks = 60;
  std::string out_path;
};

Trace run_tightness(int n, long delta, long blocks, PolicyKind kind) {
  SystemParams sys;
  sys.n_users = n;
  sys.n_cells = 1;
  sys.horizon = delta * blocks;
  sys.seed = 0;
  PolicyParams pp;
  pp.kind = kind;
  pp.delta = delta;
  auto policy = make_policy(pp, sys);
  auto channels = tightness_adversary(n, delta);
  Occupancy cell0;
  cell0.cell_of.assign(static_cast<std::size_t>(n), 0);
  auto mobility = static_source(std::move(cell0), 1);
  return run_simulation(sys, *policy, *channels, *mobility);
}

int cmd_ratio_tightness(const TightnessArgs& args) {
  CsvWriter w;
  w.comment("command", "ratio tightness");
  w.comment("n_users", std::to_string(args.n));
  w.comment("blocks", std::to_string(args.blocks));
  w.header({"instance", "metric", "policy_cost", "reference_cost", "ratio",
            "super_intervals"});
  for (long delta : args.deltas) {
    const Trace cma = run_tightness(args.n, delta, args.blocks, PolicyKind::kCma);
    const Trace ref =
        run_tightness(args.n, delta, args.blocks, PolicyKind::kPolicyP);
    const auto decomp = decompose_super_intervals(cma);
    const std::string instance =
        "tightness-n" + std::to_string(args.n) + "-d" + std::to_string(delta);
    for (Metric metric : {Metric::kAvg, Metric::kPeak}) {
      const double cost = metric == Metric::kAvg ? avg_aoi_cost(cma)
                                                 : peak_aoi_cost(cma);
      const double refc = metric == Metric::kAvg ? avg_aoi_cost(ref)
                                                 : peak_aoi_cost(ref);
      const RatioReport r =
          competitive_ratio(cost, refc, to_string(metric), instance);
      w.row({r.instance, r.metric, format_g6(r.policy_cost),
             format_g6(r.reference_cost), format_g6(r.ratio),
             std::to_string(decomp.lengths.size())});
    }
  }
  emit(w, args.out_path);
  return 0;
}

struct DuelArgs {
  SlotIndex t = 100;
  std::uint64_t seed = 0;
  std::string policy = "cma";
  std::string out_path;
};

int cmd_ratio_duel(const DuelArgs& args) {
  SystemParams sys;
  sys.n_users = 2;
  sys.n_cells = 1;
  sys.horizon = args.t;
  sys.seed = args.seed;
  sys.success_probs = {0.5, 0.5};  // nominal rates for the online policy
  PolicyParams pp;
  pp.kind = policy_kind_from_string(args.policy);
  pp.success_probs = sys.success_probs;
  pp.seed = derive_seed(args.seed, 3);
  auto policy = make_policy(pp, sys);
  auto channels = throughput_adversary(args.seed);
  Occupancy cell0;
  cell0.cell_of.assign(2, 0);
  auto mobility = static_source(std::move(cell0), 1);
  const Trace trace = run_simulation(sys, *policy, *channels, *mobility);

  SlotIndex online = 0, clairvoyant = 0;
  for (const SlotRecord& rec : trace.records) {
    for (std::uint8_t s : rec.success) online += s;
    bool any_good = false;
    for (std::uint8_t g : rec.channel_good) any_good = any_good || g;
    clairvoyant += any_good ? 1 : 0;
  }

  CsvWriter w;
  w.comment("command", "ratio duel");
  w.comment("policy", args.policy);
  w.comment("horizon", std::to_string(args.t));
  w.comment("seed", std::to_string(args.seed));
  w.header({"policy", "slots", "online_successes", "clairvoyant_successes",
            "online_avg_aoi"});
  w.row({args.policy, std::to_string(args.t), std::to_string(online),
         std::to_string(clairvoyant), format_g6(avg_aoi_cost(trace))});
  emit(w, args.out_path);
  return 0;
}

// --------------------------------------------------------------------- mdp

struct MdpArgs {
  std::string p_spec = "0.5,0.5";
  Age h_cap = 80;
  double tol = 1e-4;
  int max_iters = 100'000;
  Age residual_cap = 0;  // 0 → min(h_cap, 40)
  std::string out_path;
};

int cmd_mdp(const MdpArgs& args) {
  const std::vector<double> p = parse_p_list(args.p_spec);
  const ValueTable table =
      relative_value_iteration(p, args.h_cap, args.tol, args.max_iters);
  const Age residual_cap =
      args.residual_cap > 0 ? args.residual_cap : std::min<Age>(args.h_cap, 40);
  const BellmanResidualReport residual =
      verify_bellman_residual(p, residual_cap);

  double closed_form = 0.0;
  for (double pi : p) closed_form += 1.0 / pi;

  CsvWriter w;
  w.comment("command", "mdp");
  w.comment("p", join_doubles(p));
  w.comment("h_cap", std::to_string(args.h_cap));
  w.comment("tol", format_g6(args.tol));
  w.header({"lambda", "closed_form", "rel_error", "sweeps", "final_span",
            "max_residual", "minimizer_is_max_age", "states_checked"});
  w.row({format_g6(table.lambda), format_g6(closed_form),
         format_g6(std::abs(table.lambda - closed_form) / closed_form),
         std::to_string(table.sweeps), format_g6(table.final_span),
         format_g6(residual.max_residual),
         residual.minimizer_is_max_age ? "1" : "0",
         std::to_string(residual.states_checked)});
  emit(w, args.out_path);
  return 0;
}

// -------------------------------------------------------------------- tail

struct TailArgs {
  std::string p_spec = "0.5,0.7";
  std::string policy = "cma";
  SlotIndex t_long = 1'000'000;
  Age k_lo = 0;
  Age k_hi = 0;
  std::uint64_t seed = 1;
  std::string out_path;
};

int cmd_tail(const TailArgs& args) {
  const std::vector<double> p = parse_p_list(args.p_spec);
  const TailSlopeEstimate est =
      ld_tail_oracle(p, policy_kind_from_string(args.policy), args.t_long,
                     args.k_lo, args.k_hi, args.seed);
  const double reference = -ld_exponent(p);

  CsvWriter w;
  w.comment("command", "tail");
  w.comment("p", join_doubles(p));
  w.comment("policy", args.policy);
  w.comment("t_long", std::to_string(args.t_long));
  w.comment("seed", std::to_string(args.seed));
  w.header({"slope", "std_err", "reference", "rel_error", "k_lo", "k_hi",
            "slots"});
  w.row({format_g6(est.slope), format_g6(est.std_err), format_g6(reference),
         format_g6(std::abs(est.slope - reference) / std::abs(reference)),
         std::to_string(est.k_lo), std::to_string(est.k_hi),
         std::to_string(est.slots)});
  emit(w, args.out_path);
  return 0;
}

// -------------------------------------------------------------- trace-dump

struct TraceDumpArgs {
  std::string config_path;
  std::string in_path;
  std::string out_path;
};

int cmd_trace_dump(const TraceDumpArgs& args) {
  if (args.config_path.empty() == args.in_path.empty())
    throw ValidationError("need exactly one of --config (record) or --in (inspect)");

  Trace trace;
  if (!args.config_path.empty()) {
    ExperimentConfig cfg = ExperimentConfig::parse_file(args.config_path);
    cfg.validate();
    if (args.out_path.empty())
      throw ValidationError("--config mode needs --out for the trace file");
    const std::uint64_t rep_seed = derive_seed(cfg.seed, 0);
    const std::vector<double> p = cfg.resolve_success_probs(rep_seed);
    const SystemParams sys = cfg.system_params(rep_seed, p);
    sys.validate();
    auto policy = cfg.make_policy_for(cfg.policies.front(), sys, p, rep_seed);
    auto channels = cfg.make_channels(rep_seed, p);
    auto mobility = cfg.make_mobility(rep_seed);
    trace = run_simulation(sys, *policy, *channels, *mobility);
  } else {
    trace = load_trace_file(args.in_path);
  }

  if (!args.out_path.empty()) save_trace_file(trace, args.out_path);

  SlotIndex deliveries = 0;
  for (const SlotRecord& rec : trace.records)
    for (std::uint8_t s : rec.success) deliveries += s;
  std::cout << "AOITRACE"
            << " N=" << trace.params.n_users << " M=" << trace.params.n_cells
            << " T=" << trace.records.size()
            << " deliveries=" << deliveries
            << " avg_aoi=" << format_g6(avg_aoi_cost(trace))
            << " peak_aoi=" << format_g6(peak_aoi_cost(trace)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"age-of-information scheduling testbed"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand(
      "simulate", "run an experiment config, one CSV per policy");
  c_sim->add_option("--config", sim.config_path, "experiment config file")
      ->required();
  c_sim->add_option("--out", sim.out_dir, "output directory override");
  c_sim->add_flag("--full-scale", sim.full_scale,
                  "bump the user count to the full-scale 3000");

  BoundsArgs bounds;
  auto* c_bounds =
      app.add_subcommand("bounds", "closed-form bound table for one setup");
  c_bounds->add_option("--n", bounds.n, "number of users")->required();
  c_bounds->add_option("--m", bounds.m, "number of cells");
  c_bounds->add_option("--p", bounds.p_spec,
                       "success probabilities (csv, or one value for all)")
      ->required();
  c_bounds->add_option("--g", bounds.g,
                       "busy-cell mean (default: uniform-mobility value)");
  c_bounds->add_option("--out", bounds.out_path, "CSV path (default stdout)");

  auto* c_ratio =
      app.add_subcommand("ratio", "policy-vs-reference cost ratios");
  c_ratio->require_subcommand(1);

  FuzzArgs fuzz;
  auto* c_fuzz = c_ratio->add_subcommand(
      "fuzz", "random small instances against the exhaustive optimum");
  c_fuzz->add_option("--n", fuzz.n, "users");
  c_fuzz->add_option("--m", fuzz.m, "cells");
  c_fuzz->add_option("--t", fuzz.t, "horizon");
  c_fuzz->add_option("--instances", fuzz.instances, "instance count");
  c_fuzz->add_option("--seed", fuzz.seed, "root seed");
  c_fuzz->add_option("--budget", fuzz.budget, "oracle state budget");
  c_fuzz->add_option("--out", fuzz.out_path, "CSV path (default stdout)");

  TightnessArgs tight;
  auto* c_tight = c_ratio->add_subcommand(
      "tightness", "max-age policy against the starvation adversary");
  c_tight->add_option("--n", tight.n, "users");
  c_tight->add_option("--delta", tight.deltas, "block lengths (repeatable)");
  c_tight->add_option("--blocks", tight.blocks, "blocks per run");
  c_tight->add_option("--out", tight.out_path, "CSV path (default stdout)");

  DuelArgs duel;
  auto* c_duel = c_ratio->add_subcommand(
      "duel", "two-user adversary that starves any online policy");
  c_duel->add_option("--t", duel.t, "horizon");
  c_duel->add_option("--seed", duel.seed, "seed");
  c_duel->add_option("--policy", duel.policy, "online policy");
  c_duel->add_option("--out", duel.out_path, "CSV path (default stdout)");

  MdpArgs mdp;
  auto* c_mdp = app.add_subcommand(
      "mdp", "single-cell peak-age gain via relative value iteration");
  c_mdp->add_option("--p", mdp.p_spec, "success probabilities (csv)")
      ->required();
  c_mdp->add_option("--h-cap", mdp.h_cap, "age truncation");
  c_mdp->add_option("--tol", mdp.tol, "span stopping tolerance");
  c_mdp->add_option("--max-iters", mdp.max_iters, "sweep limit");
  c_mdp->add_option("--residual-cap", mdp.residual_cap,
                    "age cap for the closed-form residual check");
  c_mdp->add_option("--out", mdp.out_path, "CSV path (default stdout)");

  TailArgs tail;
  auto* c_tail =
      app.add_subcommand("tail", "empirical decay rate of the max-age tail");
  c_tail->add_option("--p", tail.p_spec, "success probabilities (csv)")
      ->required();
  c_tail->add_option("--policy", tail.policy, "policy to simulate");
  c_tail->add_option("--t-long", tail.t_long, "simulation horizon");
  c_tail->add_option("--k-lo", tail.k_lo, "fit lower age (0 = auto)");
  c_tail->add_option("--k-hi", tail.k_hi, "fit upper age (0 = auto)");
  c_tail->add_option("--seed", tail.seed, "seed");
  c_tail->add_option("--out", tail.out_path, "CSV path (default stdout)");

  TraceDumpArgs dump;
  auto* c_dump = app.add_subcommand(
      "trace-dump", "record a trace to the exchange format, or inspect one");
  c_dump->add_option("--config", dump.config_path,
                     "record: run the config's first policy, one replication");
  c_dump->add_option("--in", dump.in_path, "inspect: load and validate");
  c_dump->add_option("--out", dump.out_path, "trace file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_sim)) return cmd_simulate(sim);
    if (app.got_subcommand(c_bounds)) return cmd_bounds(bounds);
    if (app.got_subcommand(c_ratio)) {
      if (c_ratio->got_subcommand(c_fuzz)) return cmd_ratio_fuzz(fuzz);
      if (c_ratio->got_subcommand(c_tight)) return cmd_ratio_tightness(tight);
      if (c_ratio->got_subcommand(c_duel)) return cmd_ratio_duel(duel);
    }
    if (app.got_subcommand(c_mdp)) return cmd_mdp(mdp);
    if (app.got_subcommand(c_tail)) return cmd_tail(tail);
    if (app.got_subcommand(c_dump)) return cmd_trace_dump(dump);
    throw ValidationError("no subcommand");
  } catch (const OracleBudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const PropertyViolationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
