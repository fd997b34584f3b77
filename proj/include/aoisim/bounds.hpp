#pragma once

#include <string>
#include <vector>

namespace aoisim {

struct BoundReport {
  std::string name;
  double value = 0.0;
  std::string inputs;   // echoed parameters
  std::string formula;  // closed form the value came from
  bool asymptotic = false;  // true when a hidden constant/o-term was dropped
};

// Average-age lower bound for any policy under stationary occupancy with
// busy-cell mean g: (1/(2Ng)) (sum_i sqrt(1/p_i))^2 + 1/2.
double avg_converse(const std::vector<double>& p, double g);

// Specialized identical-user converse N / (2 M p (1-(1-1/M)^N)), i.e. the
// general bound without the +1/2 term; exactly half of mmw_upper_identical.
double avg_converse_identical(int n_users, int n_cells, double p);

// Max-weight average-age upper bound for identical users with iid uniform
// mobility: N / (M p (1-(1-1/M)^N)).
double mmw_upper_identical(int n_users, int n_cells, double p);

// Optimal long-run peak age for a single cell: sum_i 1/p_i.
double peak_optimum(const std::vector<double>& p);

// Decay rate of P(max_i h_i >= k): -log(1 - min_i p_i); +inf when min p = 1.
double ld_exponent(const std::vector<double>& p);

struct MinimaxBounds {
  double avg_lb = 0.0;            // N/2 + 1/(2N), exact
  double avg_lb_n2_improved = 0.0;  // 1.5, reported for N = 2 only (else NaN)
  double peak_lb_shape = 0.0;     // N / ln N, constant suppressed
  bool peak_asymptotic = true;    // always: the peak form hides a constant
};

// Lower bounds on the competitive ratio of ANY online policy. N >= 2 for the
// peak shape (N = 1 leaves it NaN).
MinimaxBounds minimax_lower_bounds(int n_users);

struct YaoRenewalConstants {
  double cycle_cost = 0.0;    // 1/(q^2 (1-q)), q = 1/N
  double cycle_length = 0.0;  // 1/(q (1-q))
  double per_user_rate = 0.0; // cycle_cost / cycle_length = N
  double opt_total = 0.0;     // N^2
};

// Renewal constants of the clairvoyant schedule under the one-Good-user
// distribution. Throws ValidationError for N = 1 (degenerate: 1-q = 0).
YaoRenewalConstants yao_renewal_constants(int n_users);

// Finite-N bound on the expected maximum age under the one-Good-user
// distribution: 1 + (N/alpha) ln(N/(1-alpha)) with alpha = 1 - 1/ln N.
// Requires N >= 3 so that alpha lies in (0,1).
double peak_opt_upper_yao(int n_users);

// Busy-cell mean for the uniform law: M (1-(1-1/M)^N).
double g_uniform(int n_users, int n_cells);

// Everything above evaluated for one parameter set, for the bounds command.
std::vector<BoundReport> bound_report_table(int n_users, int n_cells,
                                            const std::vector<double>& p,
                                            double g);

}  // namespace aoisim
