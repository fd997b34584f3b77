// Acceptance gate. Eleven numbered end-to-end checks, one PASS/FAIL line
// each; the last one re-runs the first ten with the same fixed seeds and
// byte-compares the CSV they emit. Exit code = number of failed criteria.
//
// Criterion 10 is known-red at this scale: on the 10x10 grid with 200 users
// (2 per cell on average) the max-age rule beats the max-weight rule on
// average age, consistently across seeds; the max-weight advantage the
// full-scale experiments show needs ~10 users per cell. The check runs at
// the stated desk-scale parameters anyway and reports the measured numbers.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "aoisim/analysis.hpp"
#include "aoisim/bounds.hpp"
#include "aoisim/config.hpp"
#include "aoisim/csv.hpp"
#include "aoisim/engine.hpp"
#include "aoisim/errors.hpp"
#include "aoisim/oracle.hpp"

using namespace aoisim;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
  std::string csv;
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string probs_label(const std::vector<double>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '|';
    s += format_g6(p[i]);
  }
  return s;
}

Occupancy all_in_cell0(int n) {
  Occupancy occ;
  occ.cell_of.assign(static_cast<std::size_t>(n), 0);
  return occ;
}

StationaryStats collect(const SystemParams& sys, Policy& pol,
                        ChannelSource& ch, MobilitySource& mob) {
  StatsAccumulator acc(sys.n_users, sys.horizon);
  run(sys, pol, ch, mob, [&](const SlotRecord& r) { acc.on_slot(r); });
  return acc.finalize();
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. relative value iteration reaches the closed-form gain, and the closed
//    form is an exact fixed point of the dynamic-programming identity.
Result c1_bellman_gain() {
  struct Case {
    std::vector<double> p;
    Age residual_cap;
  };
  const Case cases[] = {{{0.5, 0.5}, 40}, {{0.5, 0.8}, 40}, {{0.3, 0.6, 0.9}, 30}};

  CsvWriter csv;
  csv.comment("criterion", "1 bellman gain");
  csv.header({"p", "gain", "closed_form", "rel_err", "sweeps", "max_residual",
              "minimizer_is_max_age", "states_checked"});
  bool pass = true;
  double worst_rel = 0.0, worst_residual = 0.0, slowest = 0.0;
  for (const Case& c : cases) {
    const double t0 = now_seconds();
    const ValueTable v = relative_value_iteration(c.p, 80, 1e-4, 200'000);
    const BellmanResidualReport r = verify_bellman_residual(c.p, c.residual_cap);
    const double secs = now_seconds() - t0;
    double cf = 0.0;
    for (double pi : c.p) cf += 1.0 / pi;
    const double rel = std::abs(v.lambda - cf) / cf;
    worst_rel = std::max(worst_rel, rel);
    worst_residual = std::max(worst_residual, r.max_residual);
    slowest = std::max(slowest, secs);
    pass = pass && rel <= 0.01 && r.max_residual <= 1e-10 &&
           r.minimizer_is_max_age && secs < 60.0;
    csv.row({probs_label(c.p), format_g6(v.lambda), format_g6(cf),
             format_g6(rel), std::to_string(v.sweeps),
             format_g6(r.max_residual), r.minimizer_is_max_age ? "1" : "0",
             std::to_string(r.states_checked)});
  }
  return {pass,
          "gain within 1% of sum 1/p_i (worst rel err " + fmt("%.2e", worst_rel) +
              "), residual <= 1e-10 (worst " + fmt("%.2e", worst_residual) +
              "), slowest case " + fmt("%.1f", slowest) + "s",
          csv.str()};
}

// ---------------------------------------------------------------------------
// 2. single-cell max-age simulation attains the optimal long-run peak age.
Result c2_peak_optimality() {
  const std::vector<std::vector<double>> sets = {
      {0.5, 0.5}, {0.5, 0.8}, {0.3, 0.6, 0.9}};
  CsvWriter csv;
  csv.comment("criterion", "2 single-cell peak optimality");
  csv.header({"p", "peak", "target", "rel_err"});
  bool pass = true;
  double worst = 0.0;
  const double t0 = now_seconds();
  for (std::size_t idx = 0; idx < sets.size(); ++idx) {
    const std::vector<double>& p = sets[idx];
    SystemParams sys;
    sys.n_users = static_cast<int>(p.size());
    sys.n_cells = 1;
    sys.success_probs = p;
    sys.horizon = 1'000'000;
    sys.seed = derive_seed(1102, idx);
    PolicyParams pp;
    pp.kind = PolicyKind::kCma;
    auto pol = make_policy(pp, sys);
    auto ch = bec_source(p, derive_seed(sys.seed, 1));
    auto mob = static_source(all_in_cell0(sys.n_users), 1);
    const StationaryStats s = collect(sys, *pol, *ch, *mob);
    double target = 0.0;
    for (double pi : p) target += 1.0 / pi;
    const double rel = std::abs(s.peak_aoi - target) / target;
    worst = std::max(worst, rel);
    pass = pass && rel <= 0.02;
    csv.row({probs_label(p), format_g6(s.peak_aoi), format_g6(target),
             format_g6(rel)});
  }
  const double secs = now_seconds() - t0;
  pass = pass && secs < 30.0;
  return {pass,
          "peak within 2% of sum 1/p_i (worst rel err " + fmt("%.2e", worst) +
              "), " + fmt("%.1f", secs) + "s total",
          csv.str()};
}

// ---------------------------------------------------------------------------
// 3. clairvoyant schedule under the one-Good-user source hits the renewal
//    constants: per-user average age N, total cost N^2.
Result c3_renewal_constants() {
  CsvWriter csv;
  csv.comment("criterion", "3 clairvoyant renewal constants");
  csv.header({"n", "total", "total_target", "total_rel_err", "worst_user_rel_err"});
  bool pass = true;
  std::string notes;
  for (int n : {2, 4}) {
    SystemParams sys;
    sys.n_users = n;
    sys.n_cells = 1;
    sys.horizon = 1'000'000;
    sys.seed = derive_seed(1103, static_cast<std::uint64_t>(n));
    PolicyParams pp;
    pp.kind = PolicyKind::kClairvoyantSingleGood;
    auto pol = make_policy(pp, sys);
    auto ch = yao_source(n, derive_seed(sys.seed, 1));
    auto mob = static_source(all_in_cell0(n), 1);
    const StationaryStats s = collect(sys, *pol, *ch, *mob);
    const double nn = static_cast<double>(n);
    double worst_user = 0.0;
    for (double a : s.per_user_avg_age)
      worst_user = std::max(worst_user, std::abs(a - nn) / nn);
    const double total_rel = std::abs(s.sum_age_avg - nn * nn) / (nn * nn);
    pass = pass && worst_user <= 0.02 && total_rel <= 0.02;
    csv.row({std::to_string(n), format_g6(s.sum_age_avg), format_g6(nn * nn),
             format_g6(total_rel), format_g6(worst_user)});
    notes += " N=" + std::to_string(n) + " total " + fmt("%.3f", s.sum_age_avg);
  }
  return {pass, "per-user age ~ N and total ~ N^2 within 2%:" + notes,
          csv.str()};
}

// ---------------------------------------------------------------------------
// 4. adversarial tightness: the max-age rule pays ~N^2 (avg) and ~2N-1 (peak)
//    more than the rotating block schedule built for the same adversary.
Trace run_tightness_trace(int n, long delta, long blocks, PolicyKind kind) {
  SystemParams sys;
  sys.n_users = n;
  sys.n_cells = 1;
  sys.horizon = delta * blocks;
  sys.seed = 0;
  PolicyParams pp;
  pp.kind = kind;
  pp.delta = delta;
  auto pol = make_policy(pp, sys);
  auto ch = tightness_adversary(n, delta);
  auto mob = static_source(all_in_cell0(n), 1);
  return run_simulation(sys, *pol, *ch, *mob);
}

Result c4_tightness() {
  const int n = 3;
  const long delta = 501, blocks = 60;
  const Trace cma = run_tightness_trace(n, delta, blocks, PolicyKind::kCma);
  const Trace ref = run_tightness_trace(n, delta, blocks, PolicyKind::kPolicyP);
  const auto decomp = decompose_super_intervals(cma);
  const std::size_t intervals = decomp.lengths.size();
  const double ratio_avg = avg_aoi_cost(cma) / avg_aoi_cost(ref);
  const double ratio_peak = peak_aoi_cost(cma) / peak_aoi_cost(ref);
  const double avg_floor = 0.9 * n * n;
  const double peak_floor = 0.9 * (2.0 * n - 1.0);
  const bool pass =
      intervals >= 50 && ratio_avg >= avg_floor && ratio_peak >= peak_floor;

  CsvWriter csv;
  csv.comment("criterion", "4 tightness ratios");
  csv.header({"delta", "super_intervals", "ratio_avg", "avg_floor",
              "ratio_peak", "peak_floor"});
  csv.row({std::to_string(delta), std::to_string(intervals),
           format_g6(ratio_avg), format_g6(avg_floor), format_g6(ratio_peak),
           format_g6(peak_floor)});
  return {pass,
          "avg ratio " + fmt("%.3f", ratio_avg) + " >= " + fmt("%.2f", avg_floor) +
              ", peak ratio " + fmt("%.3f", ratio_peak) + " >= " +
              fmt("%.2f", peak_floor) + ", " + std::to_string(intervals) +
              " super-intervals",
          csv.str()};
}

// ---------------------------------------------------------------------------
// 5. randomized small instances: max-age cost never exceeds 2N^2 (avg) nor
//    2N (peak) times the exhaustive offline optimum.
Result c5_oracle_fuzz() {
  const std::uint64_t root = 1105;
  Rng meta(root);
  int violations = 0;
  double max_ratio_avg = 0.0, max_ratio_peak = 0.0;
  for (int k = 0; k < 500; ++k) {
    const int n = 2 + static_cast<int>(meta.below(2));
    const int m = 1 + static_cast<int>(meta.below(2));
    const SlotIndex t = 2 + static_cast<SlotIndex>(meta.below(9));
    SystemParams sys;
    sys.n_users = n;
    sys.n_cells = m;
    sys.horizon = t;
    sys.seed = derive_seed(root, static_cast<std::uint64_t>(k));
    sys.success_probs.clear();
    for (int i = 0; i < n; ++i)
      sys.success_probs.push_back(meta.uniform_real(0.1, 0.9));

    PolicyParams pp;
    pp.kind = PolicyKind::kCma;
    auto pol = make_policy(pp, sys);
    auto ch = bec_source(sys.success_probs, derive_seed(sys.seed, 1));
    auto mob = iid_uniform_source(n, m, derive_seed(sys.seed, 2));
    const Trace trace = run_simulation(sys, *pol, *ch, *mob);

    for (Metric metric : {Metric::kAvg, Metric::kPeak}) {
      const double cost = metric == Metric::kAvg ? avg_aoi_cost(trace)
                                                 : peak_aoi_cost(trace);
      const double opt = brute_force_opt(trace, metric).min_cost;
      const double ratio = cost / opt;
      const double bound =
          metric == Metric::kAvg ? 2.0 * n * n : 2.0 * n;
      if (ratio > bound) ++violations;
      (metric == Metric::kAvg ? max_ratio_avg : max_ratio_peak) = std::max(
          metric == Metric::kAvg ? max_ratio_avg : max_ratio_peak, ratio);
    }
  }
  CsvWriter csv;
  csv.comment("criterion", "5 offline-oracle fuzz");
  csv.header({"instances", "max_ratio_avg", "max_ratio_peak", "violations"});
  csv.row({"500", format_g6(max_ratio_avg), format_g6(max_ratio_peak),
           std::to_string(violations)});
  return {violations == 0,
          "500 instances, max avg ratio " + fmt("%.3f", max_ratio_avg) +
              ", max peak ratio " + fmt("%.3f", max_ratio_peak) + ", " +
              std::to_string(violations) + " bound violations",
          csv.str()};
}

// ---------------------------------------------------------------------------
// 6. the per-interval age bound holds on fuzzed max-age traces.
Result c6_interval_bound_fuzz() {
  const std::uint64_t root = 1106;
  Rng meta(root);
  std::size_t total_intervals = 0, total_violations = 0;
  Age min_steady = std::numeric_limits<Age>::max();
  Age min_early = std::numeric_limits<Age>::max();
  bool all_hold = true;
  const int kTraces = 10'000;
  for (int k = 0; k < kTraces; ++k) {
    const int n = 2 + static_cast<int>(meta.below(3));
    const int m = 1 + static_cast<int>(meta.below(3));
    const SlotIndex t = 20 + static_cast<SlotIndex>(meta.below(101));
    SystemParams sys;
    sys.n_users = n;
    sys.n_cells = m;
    sys.horizon = t;
    sys.seed = derive_seed(root, static_cast<std::uint64_t>(k));
    sys.success_probs.clear();
    for (int i = 0; i < n; ++i)
      sys.success_probs.push_back(meta.uniform_real(0.05, 0.95));

    PolicyParams pp;
    pp.kind = PolicyKind::kCma;
    auto pol = make_policy(pp, sys);
    auto ch = bec_source(sys.success_probs, derive_seed(sys.seed, 1));
    auto mob = iid_uniform_source(n, m, derive_seed(sys.seed, 2));
    const Trace trace = run_simulation(sys, *pol, *ch, *mob);

    const auto decomp = decompose_super_intervals(trace);
    const Prop1Report rep = verify_prop1(decomp, trace);
    all_hold = all_hold && rep.holds;
    total_violations += rep.violations.size();
    total_intervals += rep.intervals_checked;
    if (rep.intervals_checked > rep.early_intervals)
      min_steady = std::min(min_steady, rep.min_slack_steady);
    if (rep.early_intervals > 0)
      min_early = std::min(min_early, rep.min_slack_early);
  }
  CsvWriter csv;
  csv.comment("criterion", "6 interval age bound fuzz");
  csv.header({"traces", "intervals_checked", "min_slack_steady",
              "min_slack_early", "violations"});
  csv.row({std::to_string(kTraces), std::to_string(total_intervals),
           std::to_string(min_steady), std::to_string(min_early),
           std::to_string(total_violations)});
  return {all_hold && total_violations == 0,
          std::to_string(kTraces) + " traces, " +
              std::to_string(total_intervals) +
              " intervals checked, min slack steady/early " +
              std::to_string(min_steady) + "/" + std::to_string(min_early) +
              ", 0 violations",
          csv.str()};
}

// ---------------------------------------------------------------------------
// 7. max-weight sandwich for identical users with iid uniform mobility, plus
//    the exact factor-2 identity between its two closed-form ends.
Result c7_max_weight_sandwich() {
  const int n = 32, m = 16;
  const double p = 0.5;
  const double lo_identical = avg_converse_identical(n, m, p);
  const double hi = mmw_upper_identical(n, m, p);
  const bool identity = (hi == 2.0 * lo_identical);

  const std::vector<double> probs(static_cast<std::size_t>(n), p);
  const double lo = avg_converse(probs, g_uniform(n, m));

  SystemParams sys;
  sys.n_users = n;
  sys.n_cells = m;
  sys.success_probs = probs;
  sys.horizon = 1'000'000;
  sys.seed = 1107;
  PolicyParams pp;
  pp.kind = PolicyKind::kMmw;
  pp.success_probs = probs;
  auto pol = make_policy(pp, sys);
  auto ch = bec_source(probs, derive_seed(sys.seed, 1));
  auto mob = iid_uniform_source(n, m, derive_seed(sys.seed, 2));
  const StationaryStats s = collect(sys, *pol, *ch, *mob);
  const bool sandwich = s.avg_aoi >= lo * 0.98 && s.avg_aoi <= hi * 1.02;

  CsvWriter csv;
  csv.comment("criterion", "7 max-weight sandwich");
  csv.header({"avg", "converse", "upper", "identity_ratio"});
  csv.row({format_g6(s.avg_aoi), format_g6(lo), format_g6(hi),
           format_g6(hi / lo_identical)});
  return {identity && sandwich,
          "avg " + fmt("%.4f", s.avg_aoi) + " in [" + fmt("%.4f", lo) + ", " +
              fmt("%.4f", hi) + "] (2% slack); upper/converse-identical == 2 " +
              (identity ? "exactly" : "VIOLATED"),
          csv.str()};
}

// ---------------------------------------------------------------------------
// 8. fitted tail decay rate matches -log(1 - min p).
Result c8_tail_decay() {
  const double ref = std::log(2.0);  // -log(1-0.5), magnitude
  const TailSlopeEstimate two =
      ld_tail_oracle({0.5, 0.7}, PolicyKind::kCma, 5'000'000, 0, 0, 21);
  const double rel2 = std::abs(-two.slope - ref) / ref;
  const TailSlopeEstimate one =
      ld_tail_oracle({0.5}, PolicyKind::kCma, 5'000'000, 0, 0, 22);
  const double rel1 = std::abs(-one.slope - ref) / ref;
  const bool pass = rel2 <= 0.10 && rel1 <= 0.05;

  CsvWriter csv;
  csv.comment("criterion", "8 tail decay rate");
  csv.header({"n", "slope", "reference", "rel_err", "k_lo", "k_hi"});
  csv.row({"2", format_g6(two.slope), format_g6(-ref), format_g6(rel2),
           std::to_string(two.k_lo), std::to_string(two.k_hi)});
  csv.row({"1", format_g6(one.slope), format_g6(-ref), format_g6(rel1),
           std::to_string(one.k_lo), std::to_string(one.k_hi)});
  return {pass,
          "two-user slope rel err " + fmt("%.3f", rel2) +
              " (<=0.10), one-user " + fmt("%.3f", rel1) + " (<=0.05)",
          csv.str()};
}

// ---------------------------------------------------------------------------
// 9. under the one-Good-user source no tested policy's sum age beats the
//    floor of 6 (two users), up to batch-means noise.
Result c9_one_good_floor() {
  CsvWriter csv;
  csv.comment("criterion", "9 one-good-source sum-age floor");
  csv.header({"policy", "sum_age", "std_err", "floor"});
  bool pass = true;
  std::string notes;
  for (PolicyKind kind : {PolicyKind::kCma, PolicyKind::kMmw, PolicyKind::kRand,
                          PolicyKind::kRoundRobin}) {
    SystemParams sys;
    sys.n_users = 2;
    sys.n_cells = 1;
    sys.horizon = 1'000'000;
    sys.seed = derive_seed(1109, static_cast<std::uint64_t>(kind));
    PolicyParams pp;
    pp.kind = kind;
    pp.success_probs = {0.5, 0.5};  // marginal success rate of the source
    pp.seed = derive_seed(sys.seed, 3);
    auto pol = make_policy(pp, sys);
    auto ch = yao_source(2, derive_seed(sys.seed, 1));
    auto mob = static_source(all_in_cell0(2), 1);
    const StationaryStats s = collect(sys, *pol, *ch, *mob);
    const bool ok = s.sum_age_avg >= 6.0 - 3.0 * s.sum_age_se;
    pass = pass && ok;
    csv.row({to_string(kind), format_g6(s.sum_age_avg),
             format_g6(s.sum_age_se), "6"});
    notes += " " + to_string(kind) + "=" + fmt("%.3f", s.sum_age_avg);
  }
  return {pass, "sum age >= 6 - 3*SE for:" + notes, csv.str()};
}

// ---------------------------------------------------------------------------
// 10. desk-scale grid orderings, three replications each.
Result c10_grid_orderings() {
  ExperimentConfig cfg;
  cfg.n_users = 200;
  cfg.n_cells = 100;
  cfg.horizon = 100'000;
  cfg.seed = 1;
  cfg.replications = 3;
  cfg.policies = {PolicyKind::kCma, PolicyKind::kMmw};
  cfg.channel_kind = "bec";
  cfg.mobility_kind = "grid";
  cfg.grid_width = 10;
  cfg.grid_height = 10;

  CsvWriter csv;
  csv.comment("criterion", "10 grid orderings");
  csv.header({"law", "rep", "cma", "mmw", "holds"});
  bool avg_ok = true, peak_ok = true;
  std::string notes;
  for (const bool peak_law : {false, true}) {
    cfg.channel_p = peak_law ? "uniform:0.2,0.8" : "uniform:0,1";
    cfg.validate();
    for (int rep = 0; rep < cfg.replications; ++rep) {
      const std::uint64_t rep_seed =
          derive_seed(cfg.seed, static_cast<std::uint64_t>(rep));
      const std::vector<double> p = cfg.resolve_success_probs(rep_seed);
      const SystemParams sys = cfg.system_params(rep_seed, p);
      double value[2];
      for (int which = 0; which < 2; ++which) {
        const PolicyKind kind = cfg.policies[static_cast<std::size_t>(which)];
        auto pol = cfg.make_policy_for(kind, sys, p, rep_seed);
        auto ch = cfg.make_channels(rep_seed, p);
        auto mob = cfg.make_mobility(rep_seed);
        const StationaryStats s = collect(sys, *pol, *ch, *mob);
        value[which] = peak_law ? s.peak_aoi : s.avg_aoi;
      }
      // expected: max-weight wins average age, max-age wins peak age
      const bool holds = peak_law ? value[0] < value[1] : value[1] < value[0];
      (peak_law ? peak_ok : avg_ok) &= holds;
      csv.row({peak_law ? "peak:u[0.2,0.8]" : "avg:u[0,1]",
               std::to_string(rep), format_g6(value[0]), format_g6(value[1]),
               holds ? "1" : "0"});
      notes += std::string(" ") + (peak_law ? "peak" : "avg") +
               "/rep" + std::to_string(rep) + " cma=" + fmt("%.2f", value[0]) +
               " mmw=" + fmt("%.2f", value[1]);
    }
  }
  std::string detail;
  if (avg_ok && peak_ok) {
    detail = "both orderings hold on all replications:" + notes;
  } else {
    detail = std::string(peak_ok ? "" : "peak ordering failed; ") +
             (avg_ok ? ""
                     : "average-age ordering reversed at 2 users/cell (the "
                       "max-weight rule needs ~10 users/cell to win; it does "
                       "at N=1000 on this grid); ") +
             "measured:" + notes;
  }
  return {avg_ok && peak_ok, detail, csv.str()};
}

using CriterionFn = Result (*)();

struct Criterion {
  int id;
  const char* name;
  CriterionFn fn;
};

Result guarded(CriterionFn fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what(), ""};
  }
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "bellman gain", c1_bellman_gain},
      {2, "single-cell peak optimality", c2_peak_optimality},
      {3, "clairvoyant renewal constants", c3_renewal_constants},
      {4, "adversarial tightness ratios", c4_tightness},
      {5, "offline-oracle fuzz bounds", c5_oracle_fuzz},
      {6, "interval age bound fuzz", c6_interval_bound_fuzz},
      {7, "max-weight sandwich", c7_max_weight_sandwich},
      {8, "tail decay rate", c8_tail_decay},
      {9, "one-good-source sum-age floor", c9_one_good_floor},
      {10, "grid policy orderings", c10_grid_orderings},
  };

  std::filesystem::create_directories("acceptance_out");
  int failed = 0;
  std::vector<std::string> first_pass;
  for (const Criterion& c : criteria) {
    const Result r = guarded(c.fn);
    first_pass.push_back(r.csv);
    std::printf("criterion %2d %s %s: %s\n", c.id, r.pass ? "PASS" : "FAIL",
                c.name, r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
    std::ofstream out("acceptance_out/criterion_" + std::to_string(c.id) +
                      ".csv");
    out << r.csv;
  }

  // 11: everything above re-run with the same seeds emits identical bytes.
  bool deterministic = true;
  std::string mismatches;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    const Result again = guarded(criteria[i].fn);
    if (again.csv != first_pass[i]) {
      deterministic = false;
      mismatches += " " + std::to_string(criteria[i].id);
    }
  }
  std::printf("criterion 11 %s determinism: %s\n",
              deterministic ? "PASS" : "FAIL",
              deterministic
                  ? "second run of criteria 1-10 reproduced every CSV byte-for-byte"
                  : ("CSV mismatch in criteria:" + mismatches).c_str());
  if (!deterministic) ++failed;

  std::printf("%d/11 criteria passed\n", 11 - failed);
  return failed;
}
