#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aoisim/policies.hpp"
#include "aoisim/types.hpp"

namespace aoisim {

enum class Metric { kAvg, kPeak };

std::string to_string(Metric metric);

struct OracleBudget {
  // Cap on distinct (slot, age-vector) states the search may memoize.
  std::uint64_t max_states = 4'000'000;
};

struct OracleResult {
  double min_cost = 0.0;
  std::vector<Decision> decisions;  // one per slot, achieving min_cost
  std::uint64_t states_explored = 0;
};

// Exhaustive offline minimum of the chosen metric over every feasible
// decision sequence for a fixed channel/occupancy script: per slot, each
// nonempty cell picks one occupant or stays idle. Memoized on (slot, ages);
// throws OracleBudgetError past budget.max_states.
OracleResult brute_force_opt(const std::vector<std::vector<std::uint8_t>>& good_by_slot,
                             const std::vector<Occupancy>& occ_by_slot,
                             const SystemParams& params, Metric metric,
                             const OracleBudget& budget = {});

// Same search over the channel/occupancy columns of a recorded trace.
OracleResult brute_force_opt(const Trace& trace, Metric metric,
                             const OracleBudget& budget = {});

// Memoization-free depth-first minimum; exponential, for cross-checking the
// memoized search on tiny instances.
double brute_force_opt_plain(const std::vector<std::vector<std::uint8_t>>& good_by_slot,
                             const std::vector<Occupancy>& occ_by_slot,
                             const SystemParams& params, Metric metric);

// Average-cost MDP solution for single-cell peak age: state = age vector
// clipped at h_cap, stage cost max_i h_i, action = which user to schedule.
struct ValueTable {
  int n_users = 0;
  Age h_cap = 0;
  double lambda = 0.0;      // optimal long-run peak age (gain)
  double final_span = 0.0;  // span seminorm at the last sweep
  int sweeps = 0;
  std::vector<double> value;        // differential values, V(all-ones) = 0
  std::vector<std::uint8_t> greedy; // argmin action per state

  std::size_t state_count() const { return value.size(); }
  // Row-major index with each age in [1, h_cap].
  std::size_t index_of(const AgeVector& ages) const;
};

// Jacobi-style relative value iteration with all-ones reference state and
// span-seminorm stopping. Throws ConvergenceError (with final span) when
// max_iters sweeps do not reach tol.
ValueTable relative_value_iteration(const std::vector<double>& p, Age h_cap,
                                    double tol, int max_iters);

struct BellmanResidualReport {
  double max_residual = 0.0;
  bool minimizer_is_max_age = true;
  std::uint64_t states_checked = 0;
};

// Plugs the closed form V(h) = sum h_j/p_j, lambda = sum 1/p_j into the
// dynamic-programming identity on every interior state (ages <= h_cap-1) and
// reports the largest absolute residual; also checks the minimizing action
// set always contains exactly the max-age users.
BellmanResidualReport verify_bellman_residual(const std::vector<double>& p,
                                              Age h_cap);

struct TailSlopeEstimate {
  double slope = 0.0;
  double std_err = 0.0;
  Age k_lo = 0;
  Age k_hi = 0;
  SlotIndex slots = 0;
};

// Simulates the chosen single-cell policy for t_long slots over iid Bernoulli
// channels, then fits a weighted least-squares line to log P(max_i h_i >= k)
// over k in [k_lo, k_hi]. Pass 0 bounds to auto-select: k_lo = five mean
// inter-delivery gaps ceil(5 (sum_i 1/p_i)/N) (skips pre-asymptotic
// curvature), k_hi = last k with >= 50 samples. Throws InsufficientDataError
// when fewer than 3 usable points remain.
TailSlopeEstimate ld_tail_oracle(const std::vector<double>& p, PolicyKind policy,
                                 SlotIndex t_long, Age k_lo, Age k_hi,
                                 std::uint64_t seed);

}  // namespace aoisim
