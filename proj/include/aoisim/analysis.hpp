#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aoisim/types.hpp"

namespace aoisim {

// Max-age-schedule trace decomposition: a super-interval ends each time the
// current globally-oldest user (the Max user) gets a successful delivery.
struct SuperIntervalDecomposition {
  // Slot of the i-th Max-user success; boundaries[0] = 0 by convention.
  std::vector<SlotIndex> boundaries;
  std::vector<SlotIndex> lengths;  // lengths[i] = boundaries[i+1]-boundaries[i]
  std::vector<int> max_users;      // Max user of each closed interval
  // Trailing interval with no Max-user success before the horizon.
  bool has_open_interval = false;
  int open_max_user = -1;
  SlotIndex open_length = 0;
};

// Walks a trace produced by the max-age rule. Throws PropertyViolationError
// if the scheduled user in the Max user's cell is not the Max user, or if the
// Max user identity drifts inside an interval.
SuperIntervalDecomposition decompose_super_intervals(const Trace& trace);

struct Prop1Violation {
  SlotIndex t = 0;
  std::size_t interval = 0;  // 1-based
  Age age = 0;
  Age bound = 0;
};

// Per-interval age bound: at offset k of interval i the Max user's
// decision-time age is at most k + sum of the previous N-1 interval lengths
// (missing history counts as 0). Holds strictly even from cold start; the
// first N intervals (where the Max user may never have been served) are
// reported separately because their slack comes from the all-ones start.
struct Prop1Report {
  bool holds = false;
  Age min_slack_steady = 0;  // tightest bound-minus-age, intervals i > N
  Age min_slack_early = 0;   // same for intervals i <= N
  std::size_t intervals_checked = 0;
  std::size_t early_intervals = 0;
  std::vector<Prop1Violation> violations;
};

Prop1Report verify_prop1(const SuperIntervalDecomposition& decomp,
                         const Trace& trace);

struct RatioReport {
  double policy_cost = 0.0;
  double reference_cost = 0.0;
  double ratio = 0.0;
  std::string metric;
  std::string instance;
};

// Throws ValidationError when reference_cost <= 0.
RatioReport competitive_ratio(double policy_cost, double reference_cost,
                              const std::string& metric,
                              const std::string& instance);

struct StationaryStats {
  double avg_aoi = 0.0;
  double peak_aoi = 0.0;
  double sum_age_avg = 0.0;          // N * avg_aoi
  double sum_age_se = 0.0;           // batch-means standard error of the mean
  std::vector<double> per_user_avg_age;
  // tail_counts[k] = number of post-burn-in slots with max_i h_i == k.
  std::vector<std::uint64_t> tail_counts;
  SlotIndex slots_counted = 0;
  SlotIndex burn_in = 0;

  // P(max_i h_i >= k) from the histogram.
  double tail_ccdf(Age k) const;
  Age max_observed_age() const;
};

// Streaming accumulator fed one SlotRecord at a time; slots t <= burn_in are
// discarded. Use burn_in < 0 for the default min(10^4, T/10).
class StatsAccumulator {
 public:
  StatsAccumulator(int n_users, SlotIndex horizon, SlotIndex burn_in = -1);
  void on_slot(const SlotRecord& rec);
  StationaryStats finalize() const;  // throws InsufficientDataError if empty
  SlotIndex burn_in() const { return burn_in_; }

 private:
  int n_users_;
  SlotIndex burn_in_ = 0;
  SlotIndex slots_ = 0;
  double sum_ages_ = 0.0;
  double sum_peak_ = 0.0;
  std::vector<double> per_user_sum_;
  std::vector<std::uint64_t> tail_counts_;
  // batch means over the per-slot age sum
  SlotIndex batch_size_ = 0;
  SlotIndex batch_fill_ = 0;
  double batch_acc_ = 0.0;
  std::vector<double> batch_means_;
};

SlotIndex default_burn_in(SlotIndex horizon);

// Whole-trace convenience wrapper around the accumulator.
StationaryStats stationary_stats(const Trace& trace, SlotIndex burn_in = -1);

}  // namespace aoisim
