#include "aoisim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "aoisim/analysis.hpp"
#include "aoisim/channels.hpp"
#include "aoisim/engine.hpp"
#include "aoisim/errors.hpp"
#include "aoisim/mobility.hpp"

namespace aoisim {

std::string to_string(Metric metric) {
  return metric == Metric::kAvg ? "avg" : "peak";
}

namespace {

struct AgeVectorHash {
  std::size_t operator()(const AgeVector& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Age a : v) {
      h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

// Enumerates feasible decisions for one slot: per nonempty cell, occupants in
// increasing user order then idle. visit(decision) is called for each.
class DecisionSpace {
 public:
  DecisionSpace(const Occupancy& occ, int n_cells) : n_cells_(n_cells) {
    members_.assign(static_cast<std::size_t>(n_cells), {});
    const int n = occ.n_users();
    for (int i = 0; i < n; ++i)
      members_[static_cast<std::size_t>(occ.cell_of[static_cast<std::size_t>(i)])]
          .push_back(i);
    for (int j = 0; j < n_cells; ++j)
      if (!members_[static_cast<std::size_t>(j)].empty())
        busy_.push_back(j);
  }

  template <typename Visit>
  void for_each(Visit visit) const {
    Decision d;
    d.user_of_cell.assign(static_cast<std::size_t>(n_cells_), kIdle);
    walk(0, d, visit);
  }

 private:
  template <typename Visit>
  void walk(std::size_t depth, Decision& d, Visit& visit) const {
    if (depth == busy_.size()) {
      visit(const_cast<const Decision&>(d));
      return;
    }
    const int j = busy_[depth];
    for (int u : members_[static_cast<std::size_t>(j)]) {
      d.user_of_cell[static_cast<std::size_t>(j)] = u;
      walk(depth + 1, d, visit);
    }
    d.user_of_cell[static_cast<std::size_t>(j)] = kIdle;
    walk(depth + 1, d, visit);
  }

  int n_cells_;
  std::vector<std::vector<int>> members_;
  std::vector<int> busy_;
};

double stage_cost(const AgeVector& ages, Metric metric) {
  if (metric == Metric::kPeak)
    return static_cast<double>(*std::max_element(ages.begin(), ages.end()));
  double s = 0.0;
  for (Age a : ages) s += static_cast<double>(a);
  return s;
}

void apply_decision(const AgeVector& h, const Decision& d,
                    const std::vector<std::uint8_t>& good,
                    const Occupancy& occ, AgeVector& out) {
  out = h;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const bool scheduled =
        d.user_of_cell[static_cast<std::size_t>(
            occ.cell_of[i])] == static_cast<std::int32_t>(i);
    out[i] = (scheduled && good[i]) ? 1 : out[i] + 1;
  }
}

class OracleSearch {
 public:
  OracleSearch(const std::vector<std::vector<std::uint8_t>>& good,
               const std::vector<Occupancy>& occ, const SystemParams& params,
               Metric metric, const OracleBudget& budget)
      : good_(good), occ_(occ), params_(params), metric_(metric),
        budget_(budget) {
    const std::size_t t_total = good.size();
    if (occ.size() != t_total)
      throw ValidationError("channel and occupancy scripts disagree on T");
    for (std::size_t t = 0; t < t_total; ++t) {
      if (static_cast<int>(good[t].size()) != params.n_users ||
          occ[t].n_users() != params.n_users)
        throw ValidationError("script entries have wrong user count");
      for (std::int32_t c : occ[t].cell_of)
        if (c < 0 || c >= params.n_cells)
          throw ValidationError("script occupancy has out-of-range cell");
    }
    memo_.resize(t_total);
    spaces_.reserve(t_total);
    for (std::size_t t = 0; t < t_total; ++t)
      spaces_.emplace_back(occ[t], params.n_cells);
  }

  OracleResult run() {
    OracleResult result;
    AgeVector start(static_cast<std::size_t>(params_.n_users), 1);
    const double total = value(0, start);
    result.states_explored = states_;
    const double t_total = static_cast<double>(good_.size());
    result.min_cost = metric_ == Metric::kAvg
                          ? total / (t_total * params_.n_users)
                          : total / t_total;
    // Greedy reconstruction against the memo.
    AgeVector h = start, next;
    for (std::size_t t = 0; t < good_.size(); ++t) {
      double best = std::numeric_limits<double>::infinity();
      Decision best_d;
      AgeVector best_h;
      spaces_[t].for_each([&](const Decision& d) {
        apply_decision(h, d, good_[t], occ_[t], next);
        const double c = stage_cost(next, metric_) + value(t + 1, next);
        if (c < best) {
          best = c;
          best_d = d;
          best_h = next;
        }
      });
      result.decisions.push_back(best_d);
      h = best_h;
    }
    return result;
  }

 private:
  double value(std::size_t t, const AgeVector& h) {
    if (t == good_.size()) return 0.0;
    auto& level = memo_[t];
    auto it = level.find(h);
    if (it != level.end()) return it->second;
    if (++states_ > budget_.max_states)
      throw OracleBudgetError("offline search exceeded its state budget",
                              states_);
    double best = std::numeric_limits<double>::infinity();
    AgeVector next;
    spaces_[t].for_each([&](const Decision& d) {
      apply_decision(h, d, good_[t], occ_[t], next);
      best = std::min(best, stage_cost(next, metric_) + value(t + 1, next));
    });
    level.emplace(h, best);
    return best;
  }

  const std::vector<std::vector<std::uint8_t>>& good_;
  const std::vector<Occupancy>& occ_;
  SystemParams params_;
  Metric metric_;
  OracleBudget budget_;
  std::vector<std::unordered_map<AgeVector, double, AgeVectorHash>> memo_;
  std::vector<DecisionSpace> spaces_;
  std::uint64_t states_ = 0;
};

}  // namespace

OracleResult brute_force_opt(const std::vector<std::vector<std::uint8_t>>& good_by_slot,
                             const std::vector<Occupancy>& occ_by_slot,
                             const SystemParams& params, Metric metric,
                             const OracleBudget& budget) {
  params.validate();
  if (good_by_slot.empty())
    throw ValidationError("offline search needs at least one slot");
  OracleSearch search(good_by_slot, occ_by_slot, params, metric, budget);
  return search.run();
}

OracleResult brute_force_opt(const Trace& trace, Metric metric,
                             const OracleBudget& budget) {
  std::vector<std::vector<std::uint8_t>> good;
  std::vector<Occupancy> occ;
  good.reserve(trace.records.size());
  occ.reserve(trace.records.size());
  for (const SlotRecord& rec : trace.records) {
    good.push_back(rec.channel_good);
    occ.push_back(rec.occupancy);
  }
  return brute_force_opt(good, occ, trace.params, metric, budget);
}

namespace {

double plain_dfs(const std::vector<std::vector<std::uint8_t>>& good,
                 const std::vector<Occupancy>& occ,
                 const std::vector<DecisionSpace>& spaces, Metric metric,
                 std::size_t t, const AgeVector& h) {
  if (t == good.size()) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  AgeVector next;
  spaces[t].for_each([&](const Decision& d) {
    apply_decision(h, d, good[t], occ[t], next);
    best = std::min(best, stage_cost(next, metric) +
                              plain_dfs(good, occ, spaces, metric, t + 1, next));
  });
  return best;
}

}  // namespace

double brute_force_opt_plain(const std::vector<std::vector<std::uint8_t>>& good_by_slot,
                             const std::vector<Occupancy>& occ_by_slot,
                             const SystemParams& params, Metric metric) {
  params.validate();
  if (good_by_slot.empty())
    throw ValidationError("offline search needs at least one slot");
  std::vector<DecisionSpace> spaces;
  spaces.reserve(good_by_slot.size());
  for (std::size_t t = 0; t < good_by_slot.size(); ++t)
    spaces.emplace_back(occ_by_slot[t], params.n_cells);
  AgeVector start(static_cast<std::size_t>(params.n_users), 1);
  const double total =
      plain_dfs(good_by_slot, occ_by_slot, spaces, metric, 0, start);
  const double t_total = static_cast<double>(good_by_slot.size());
  return metric == Metric::kAvg ? total / (t_total * params.n_users)
                                : total / t_total;
}

std::size_t ValueTable::index_of(const AgeVector& ages) const {
  std::size_t idx = 0;
  for (Age a : ages) {
    if (a < 1 || a > h_cap) throw ValidationError("age outside [1, h_cap]");
    idx = idx * static_cast<std::size_t>(h_cap) + static_cast<std::size_t>(a - 1);
  }
  return idx;
}

ValueTable relative_value_iteration(const std::vector<double>& p, Age h_cap,
                                    double tol, int max_iters) {
  const int n = static_cast<int>(p.size());
  if (n < 1) throw ValidationError("need at least one user");
  for (double pi : p)
    if (!(pi > 0.0) || pi > 1.0)
      throw ValidationError("success probabilities must lie in (0,1]");
  if (h_cap < 2) throw ValidationError("h_cap must be at least 2");
  if (!(tol > 0.0)) throw ValidationError("tol must be positive");
  double states_d = 1.0;
  for (int i = 0; i < n; ++i) states_d *= static_cast<double>(h_cap);
  if (states_d > 2e7)
    throw ValidationError("state space too large for value iteration");
  const std::size_t n_states = static_cast<std::size_t>(states_d);

  ValueTable table;
  table.n_users = n;
  table.h_cap = h_cap;
  table.value.assign(n_states, 0.0);
  table.greedy.assign(n_states, 0);

  std::vector<double> next(n_states, 0.0);
  std::vector<Age> h(static_cast<std::size_t>(n), 1);
  // Precomputed strides: index = sum (h_i - 1) * stride_i.
  std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] =
        stride[static_cast<std::size_t>(i + 1)] * static_cast<std::size_t>(h_cap);

  double lambda = 0.0, span = std::numeric_limits<double>::infinity();
  int sweep = 0;
  for (sweep = 1; sweep <= max_iters; ++sweep) {
    double diff_min = std::numeric_limits<double>::infinity();
    double diff_max = -std::numeric_limits<double>::infinity();
    std::fill(h.begin(), h.end(), 1);
    std::size_t idx = 0;
    for (;;) {
      // fail index: every age +1, clipped at h_cap
      std::size_t fail_idx = 0;
      Age max_age = 0;
      for (int i = 0; i < n; ++i) {
        const Age a = h[static_cast<std::size_t>(i)];
        max_age = std::max(max_age, a);
        const Age af = std::min<Age>(a + 1, h_cap);
        fail_idx += static_cast<std::size_t>(af - 1) * stride[static_cast<std::size_t>(i)];
      }
      const double v_fail = table.value[fail_idx];
      double best = std::numeric_limits<double>::infinity();
      int best_i = 0;
      for (int i = 0; i < n; ++i) {
        // success for i: i resets to 1, everyone else +1 clipped
        const Age a = h[static_cast<std::size_t>(i)];
        const Age af = std::min<Age>(a + 1, h_cap);
        const std::size_t succ_idx =
            fail_idx - static_cast<std::size_t>(af - 1) * stride[static_cast<std::size_t>(i)];
        const double q =
            p[static_cast<std::size_t>(i)] * table.value[succ_idx] +
            (1.0 - p[static_cast<std::size_t>(i)]) * v_fail;
        if (q < best) {
          best = q;
          best_i = i;
        }
      }
      const double w = static_cast<double>(max_age) + best;
      next[idx] = w;
      table.greedy[idx] = static_cast<std::uint8_t>(best_i);
      const double diff = w - table.value[idx];
      diff_min = std::min(diff_min, diff);
      diff_max = std::max(diff_max, diff);

      // odometer over ages
      int pos = n - 1;
      while (pos >= 0) {
        std::size_t k = static_cast<std::size_t>(pos);
        if (h[k] < h_cap) {
          ++h[k];
          idx += stride[k];
          break;
        }
        idx -= static_cast<std::size_t>(h_cap - 1) * stride[k];
        h[k] = 1;
        --pos;
      }
      if (pos < 0) break;
    }
    lambda = 0.5 * (diff_min + diff_max);
    span = diff_max - diff_min;
    const double anchor = next[0];  // all-ones reference state
    for (std::size_t s = 0; s < n_states; ++s)
      table.value[s] = next[s] - anchor;
    if (span <= tol) break;
  }
  if (span > tol)
    throw ConvergenceError("value iteration did not reach tol after " +
                               std::to_string(max_iters) + " sweeps",
                           span);
  table.lambda = lambda;
  table.final_span = span;
  table.sweeps = std::min(sweep, max_iters);
  return table;
}

BellmanResidualReport verify_bellman_residual(const std::vector<double>& p,
                                              Age h_cap) {
  const int n = static_cast<int>(p.size());
  if (n < 1) throw ValidationError("need at least one user");
  for (double pi : p)
    if (!(pi > 0.0) || pi > 1.0)
      throw ValidationError("success probabilities must lie in (0,1]");
  if (h_cap < 2) throw ValidationError("h_cap must be at least 2");

  double lambda = 0.0;
  for (double pi : p) lambda += 1.0 / pi;

  BellmanResidualReport report;
  std::vector<Age> h(static_cast<std::size_t>(n), 1);
  const Age interior_cap = h_cap - 1;  // +1 transitions stay unclipped
  for (;;) {
    double v = 0.0;
    Age max_age = 0;
    for (int i = 0; i < n; ++i) {
      v += static_cast<double>(h[static_cast<std::size_t>(i)]) /
           p[static_cast<std::size_t>(i)];
      max_age = std::max(max_age, h[static_cast<std::size_t>(i)]);
    }
    // Per-action expected next value + current stage cost.
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> minimizers;
    for (int i = 0; i < n; ++i) {
      double v_succ = 1.0 / p[static_cast<std::size_t>(i)];
      double v_fail = 0.0;
      for (int j = 0; j < n; ++j) {
        const double hj1 =
            static_cast<double>(h[static_cast<std::size_t>(j)] + 1);
        v_fail += hj1 / p[static_cast<std::size_t>(j)];
        if (j != i) v_succ += hj1 / p[static_cast<std::size_t>(j)];
      }
      const double q = p[static_cast<std::size_t>(i)] * v_succ +
                       (1.0 - p[static_cast<std::size_t>(i)]) * v_fail;
      if (q < best - 1e-12) {
        best = q;
        minimizers.assign(1, i);
      } else if (q <= best + 1e-12) {
        minimizers.push_back(i);
      }
    }
    const double rhs = static_cast<double>(max_age) + best;
    const double residual = std::abs(lambda + v - rhs);
    report.max_residual = std::max(report.max_residual, residual);
    ++report.states_checked;

    std::vector<int> oldest;
    for (int i = 0; i < n; ++i)
      if (h[static_cast<std::size_t>(i)] == max_age) oldest.push_back(i);
    if (minimizers != oldest) report.minimizer_is_max_age = false;

    int pos = n - 1;
    while (pos >= 0 && h[static_cast<std::size_t>(pos)] == interior_cap) {
      h[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++h[static_cast<std::size_t>(pos)];
  }
  return report;
}

TailSlopeEstimate ld_tail_oracle(const std::vector<double>& p, PolicyKind policy,
                                 SlotIndex t_long, Age k_lo, Age k_hi,
                                 std::uint64_t seed) {
  const int n = static_cast<int>(p.size());
  if (n < 1) throw ValidationError("need at least one user");
  if (t_long < 20'000)
    throw ValidationError("tail estimation needs a long horizon");

  SystemParams params;
  params.n_users = n;
  params.n_cells = 1;
  params.success_probs = p;
  params.horizon = t_long;
  params.seed = seed;

  PolicyParams pp;
  pp.kind = policy;
  pp.success_probs = p;
  pp.seed = derive_seed(seed, 1);
  auto pol = make_policy(pp, params);
  auto channels = bec_source(p, derive_seed(seed, 2));
  Occupancy all_zero;
  all_zero.cell_of.assign(static_cast<std::size_t>(n), 0);
  auto mobility = static_source(all_zero, 1);

  StatsAccumulator acc(n, t_long, -1);
  run(params, *pol, *channels, *mobility,
      [&acc](const SlotRecord& rec) { acc.on_slot(rec); });
  const StationaryStats stats = acc.finalize();

  // ccdf counts: slots with max age >= k
  const std::size_t hist_size = stats.tail_counts.size();
  std::vector<std::uint64_t> at_least(hist_size + 1, 0);
  for (std::size_t a = hist_size; a-- > 0;)
    at_least[a] = at_least[a + 1] + stats.tail_counts[a];

  if (k_lo <= 0) {
    double mean_gap = 0.0;  // mean slots between consecutive deliveries
    for (double pi : p) mean_gap += 1.0 / pi;
    mean_gap /= static_cast<double>(n);
    k_lo = static_cast<Age>(std::ceil(5.0 * mean_gap));
  }
  if (k_hi <= 0) {
    k_hi = 0;
    for (std::size_t a = 0; a < at_least.size(); ++a)
      if (at_least[a] >= 50) k_hi = static_cast<Age>(a);
  }
  if (k_hi - k_lo + 1 < 3)
    throw InsufficientDataError(
        "fewer than 3 tail points between k_lo and k_hi");

  // Weighted least squares of log ccdf on k, weights = ccdf counts.
  const double total = static_cast<double>(stats.slots_counted);
  double sw = 0.0, swx = 0.0, swy = 0.0;
  std::vector<double> xs, ys, ws;
  for (Age k = k_lo; k <= k_hi; ++k) {
    const std::uint64_t c =
        static_cast<std::size_t>(k) < at_least.size()
            ? at_least[static_cast<std::size_t>(k)]
            : 0;
    if (c == 0) continue;
    const double x = static_cast<double>(k);
    const double y = std::log(static_cast<double>(c) / total);
    const double w = static_cast<double>(c);
    xs.push_back(x);
    ys.push_back(y);
    ws.push_back(w);
    sw += w;
    swx += w * x;
    swy += w * y;
  }
  if (xs.size() < 3)
    throw InsufficientDataError("fewer than 3 nonempty tail points in range");
  const double xbar = swx / sw, ybar = swy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += ws[i] * (xs[i] - xbar) * (xs[i] - xbar);
    sxy += ws[i] * (xs[i] - xbar) * (ys[i] - ybar);
  }
  TailSlopeEstimate est;
  est.slope = sxy / sxx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - ybar - est.slope * (xs[i] - xbar);
    ssr += ws[i] * r * r;
  }
  const double dof = static_cast<double>(xs.size()) - 2.0;
  est.std_err = std::sqrt((ssr * static_cast<double>(xs.size()) / sw) / dof / sxx);
  est.k_lo = k_lo;
  est.k_hi = k_hi;
  est.slots = stats.slots_counted;
  return est;
}

}  // namespace aoisim
