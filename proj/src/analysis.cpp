#include "aoisim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "aoisim/errors.hpp"

namespace aoisim {

namespace {

int global_max_user(const AgeVector& ages) {
  int m = 0;
  for (int i = 1; i < static_cast<int>(ages.size()); ++i)
    if (ages[static_cast<std::size_t>(i)] > ages[static_cast<std::size_t>(m)])
      m = i;
  return m;
}

}  // namespace

SuperIntervalDecomposition decompose_super_intervals(const Trace& trace) {
  SuperIntervalDecomposition d;
  d.boundaries.push_back(0);
  if (trace.records.empty()) return d;

  AgeVector pre(static_cast<std::size_t>(trace.params.n_users), 1);
  int current_max = -1;
  for (const SlotRecord& rec : trace.records) {
    const int m = global_max_user(pre);
    if (current_max < 0) {
      current_max = m;
    } else if (m != current_max) {
      throw PropertyViolationError(
          "Max user changed mid-interval at slot " + std::to_string(rec.t) +
          ": trace is not max-age-consistent");
    }
    const std::size_t cell = static_cast<std::size_t>(
        rec.occupancy.cell_of[static_cast<std::size_t>(m)]);
    if (rec.decision.user_of_cell[cell] != m)
      throw PropertyViolationError(
          "Max user not scheduled at slot " + std::to_string(rec.t) +
          ": trace is not max-age-consistent");
    if (rec.success[static_cast<std::size_t>(m)]) {
      d.boundaries.push_back(rec.t);
      d.lengths.push_back(rec.t - d.boundaries[d.boundaries.size() - 2]);
      d.max_users.push_back(m);
      current_max = -1;
    }
    pre = rec.ages_after;
  }
  if (current_max >= 0) {
    d.has_open_interval = true;
    d.open_max_user = current_max;
    d.open_length =
        trace.records.back().t - d.boundaries.back();
  }
  return d;
}

Prop1Report verify_prop1(const SuperIntervalDecomposition& decomp,
                         const Trace& trace) {
  Prop1Report report;
  report.holds = true;
  report.min_slack_steady = std::numeric_limits<Age>::max();
  report.min_slack_early = std::numeric_limits<Age>::max();
  const int n = trace.params.n_users;
  report.early_intervals = 0;

  AgeVector pre(static_cast<std::size_t>(n), 1);
  std::size_t interval = 0;  // 0-based into decomp.lengths, or open interval
  SlotIndex offset = 0;
  Age history = 0;  // sum of up to N-1 previous closed-interval lengths
  auto history_for = [&](std::size_t i) {
    Age sum = 0;
    const std::size_t back = std::min<std::size_t>(i, static_cast<std::size_t>(n - 1));
    for (std::size_t j = 1; j <= back; ++j) sum += decomp.lengths[i - j];
    return sum;
  };
  history = history_for(0);

  for (const SlotRecord& rec : trace.records) {
    ++offset;
    const bool open = interval >= decomp.lengths.size();
    const int max_user =
        open ? decomp.open_max_user : decomp.max_users[interval];
    if (max_user < 0) break;  // empty open tail
    const Age age = pre[static_cast<std::size_t>(max_user)];
    const Age bound = static_cast<Age>(offset) + history;
    const Age slack = bound - age;
    const bool early = interval < static_cast<std::size_t>(n);
    if (early) {
      report.min_slack_early = std::min(report.min_slack_early, slack);
    } else {
      report.min_slack_steady = std::min(report.min_slack_steady, slack);
    }
    if (slack < 0) {
      report.holds = false;
      report.violations.push_back(
          {rec.t, interval + 1, age, bound});
    }
    if (!open && offset == decomp.lengths[interval]) {
      ++interval;
      offset = 0;
      if (interval <= decomp.lengths.size()) history = history_for(interval);
    }
    pre = rec.ages_after;
  }
  report.intervals_checked =
      decomp.lengths.size() + (decomp.has_open_interval ? 1 : 0);
  report.early_intervals =
      std::min<std::size_t>(report.intervals_checked, static_cast<std::size_t>(n));
  if (report.min_slack_early == std::numeric_limits<Age>::max())
    report.min_slack_early = 0;
  if (report.min_slack_steady == std::numeric_limits<Age>::max())
    report.min_slack_steady = 0;
  return report;
}

RatioReport competitive_ratio(double policy_cost, double reference_cost,
                              const std::string& metric,
                              const std::string& instance) {
  if (!(reference_cost > 0.0))
    throw ValidationError("competitive ratio needs a positive reference cost");
  RatioReport r;
  r.policy_cost = policy_cost;
  r.reference_cost = reference_cost;
  r.ratio = policy_cost / reference_cost;
  r.metric = metric;
  r.instance = instance;
  return r;
}

SlotIndex default_burn_in(SlotIndex horizon) {
  return std::min<SlotIndex>(10'000, horizon / 10);
}

double StationaryStats::tail_ccdf(Age k) const {
  if (slots_counted == 0) return 0.0;
  std::uint64_t at_least = 0;
  for (std::size_t a = tail_counts.size(); a-- > 0;) {
    if (static_cast<Age>(a) < k) break;
    at_least += tail_counts[a];
  }
  return static_cast<double>(at_least) / static_cast<double>(slots_counted);
}

Age StationaryStats::max_observed_age() const {
  for (std::size_t a = tail_counts.size(); a-- > 0;)
    if (tail_counts[a] > 0) return static_cast<Age>(a);
  return 0;
}

StatsAccumulator::StatsAccumulator(int n_users, SlotIndex horizon,
                                   SlotIndex burn_in)
    : n_users_(n_users),
      burn_in_(burn_in < 0 ? default_burn_in(horizon) : burn_in),
      per_user_sum_(static_cast<std::size_t>(n_users), 0.0) {
  if (n_users < 1) throw ValidationError("stats need N >= 1");
  if (burn_in_ >= horizon)
    throw InsufficientDataError("burn-in swallows the whole horizon");
  const SlotIndex usable = horizon - burn_in_;
  batch_size_ = std::max<SlotIndex>(1, usable / 50);
}

void StatsAccumulator::on_slot(const SlotRecord& rec) {
  if (rec.t <= burn_in_) return;
  ++slots_;
  double sum = 0.0;
  Age peak = 0;
  for (Age a : rec.ages_after) {
    sum += static_cast<double>(a);
    peak = std::max(peak, a);
  }
  sum_ages_ += sum;
  sum_peak_ += static_cast<double>(peak);
  for (std::size_t i = 0; i < rec.ages_after.size(); ++i)
    per_user_sum_[i] += static_cast<double>(rec.ages_after[i]);
  if (static_cast<std::size_t>(peak) >= tail_counts_.size())
    tail_counts_.resize(static_cast<std::size_t>(peak) + 1, 0);
  ++tail_counts_[static_cast<std::size_t>(peak)];

  batch_acc_ += sum;
  if (++batch_fill_ == batch_size_) {
    batch_means_.push_back(batch_acc_ / static_cast<double>(batch_size_));
    batch_acc_ = 0.0;
    batch_fill_ = 0;
  }
}

StationaryStats StatsAccumulator::finalize() const {
  if (slots_ == 0)
    throw InsufficientDataError("no slots survived the burn-in");
  StationaryStats s;
  s.slots_counted = slots_;
  s.burn_in = burn_in_;
  const double t = static_cast<double>(slots_);
  s.sum_age_avg = sum_ages_ / t;
  s.avg_aoi = s.sum_age_avg / static_cast<double>(n_users_);
  s.peak_aoi = sum_peak_ / t;
  s.per_user_avg_age.resize(per_user_sum_.size());
  for (std::size_t i = 0; i < per_user_sum_.size(); ++i)
    s.per_user_avg_age[i] = per_user_sum_[i] / t;
  s.tail_counts = tail_counts_;
  if (batch_means_.size() >= 2) {
    double mean = 0.0;
    for (double b : batch_means_) mean += b;
    mean /= static_cast<double>(batch_means_.size());
    double var = 0.0;
    for (double b : batch_means_) var += (b - mean) * (b - mean);
    var /= static_cast<double>(batch_means_.size() - 1);
    s.sum_age_se = std::sqrt(var / static_cast<double>(batch_means_.size()));
  }
  return s;
}

StationaryStats stationary_stats(const Trace& trace, SlotIndex burn_in) {
  const SlotIndex t_total = static_cast<SlotIndex>(trace.records.size());
  const SlotIndex resolved =
      burn_in < 0 ? default_burn_in(t_total) : burn_in;
  if (t_total - resolved < 10'000)
    throw InsufficientDataError(
        "long-run statistics need at least 10^4 post-burn-in slots");
  StatsAccumulator acc(trace.params.n_users, t_total, resolved);
  for (const SlotRecord& rec : trace.records) acc.on_slot(rec);
  return acc.finalize();
}

}  // namespace aoisim
