#include "aoisim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aoisim/errors.hpp"

namespace aoisim {

namespace {

void check_probs(const std::vector<double>& p) {
  if (p.empty()) throw ValidationError("need at least one success probability");
  for (double pi : p)
    if (!(pi > 0.0) || pi > 1.0)
      throw ValidationError("success probabilities must lie in (0,1]");
}

std::string join_probs(const std::vector<double>& p) {
  std::ostringstream os;
  os << "p=(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

double avg_converse(const std::vector<double>& p, double g) {
  check_probs(p);
  const double n = static_cast<double>(p.size());
  if (!(g > 0.0) || g > n)
    throw ValidationError("busy-cell mean g must be positive and at most N");
  double root_sum = 0.0;
  for (double pi : p) root_sum += std::sqrt(1.0 / pi);
  return root_sum * root_sum / (2.0 * n * g) + 0.5;
}

double avg_converse_identical(int n_users, int n_cells, double p) {
  if (n_users < 1 || n_cells < 1)
    throw ValidationError("need N, M >= 1");
  if (!(p > 0.0) || p > 1.0)
    throw ValidationError("success probability must lie in (0,1]");
  return static_cast<double>(n_users) /
         (2.0 * n_cells * p * (1.0 - std::pow(1.0 - 1.0 / n_cells, n_users)));
}

double mmw_upper_identical(int n_users, int n_cells, double p) {
  return 2.0 * avg_converse_identical(n_users, n_cells, p);
}

double peak_optimum(const std::vector<double>& p) {
  check_probs(p);
  double sum = 0.0;
  for (double pi : p) sum += 1.0 / pi;
  return sum;
}

double ld_exponent(const std::vector<double>& p) {
  check_probs(p);
  double pmin = 1.0;
  for (double pi : p) pmin = std::min(pmin, pi);
  if (pmin >= 1.0) return std::numeric_limits<double>::infinity();
  return -std::log(1.0 - pmin);
}

MinimaxBounds minimax_lower_bounds(int n_users) {
  if (n_users < 1) throw ValidationError("need N >= 1");
  MinimaxBounds b;
  const double n = static_cast<double>(n_users);
  b.avg_lb = n / 2.0 + 1.0 / (2.0 * n);
  b.avg_lb_n2_improved =
      n_users == 2 ? 1.5 : std::numeric_limits<double>::quiet_NaN();
  b.peak_lb_shape = n_users >= 2
                        ? n / std::log(n)
                        : std::numeric_limits<double>::quiet_NaN();
  b.peak_asymptotic = true;
  return b;
}

YaoRenewalConstants yao_renewal_constants(int n_users) {
  if (n_users < 2)
    throw ValidationError(
        "renewal constants are degenerate for N < 2 (1-q = 0)");
  const double q = 1.0 / static_cast<double>(n_users);
  YaoRenewalConstants c;
  c.cycle_cost = 1.0 / (q * q * (1.0 - q));
  c.cycle_length = 1.0 / (q * (1.0 - q));
  c.per_user_rate = c.cycle_cost / c.cycle_length;  // = 1/q = N
  c.opt_total = static_cast<double>(n_users) * c.per_user_rate;  // = N^2
  return c;
}

double peak_opt_upper_yao(int n_users) {
  if (n_users < 3)
    throw ValidationError("finite-N max-age bound needs N >= 3");
  const double n = static_cast<double>(n_users);
  const double alpha = 1.0 - 1.0 / std::log(n);
  return 1.0 + (n / alpha) * std::log(n / (1.0 - alpha));
}

double g_uniform(int n_users, int n_cells) {
  if (n_users < 1 || n_cells < 1) throw ValidationError("need N, M >= 1");
  const double m = static_cast<double>(n_cells);
  return m * (1.0 - std::pow(1.0 - 1.0 / m, n_users));
}

std::vector<BoundReport> bound_report_table(int n_users, int n_cells,
                                            const std::vector<double>& p,
                                            double g) {
  check_probs(p);
  if (static_cast<int>(p.size()) != n_users)
    throw ValidationError("need one success probability per user");
  std::ostringstream inputs;
  inputs << "N=" << n_users << " M=" << n_cells << ' ' << join_probs(p)
         << " g=" << g;
  const std::string in = inputs.str();

  std::vector<BoundReport> table;
  table.push_back({"avg_converse", avg_converse(p, g), in,
                   "(1/(2Ng))(sum sqrt(1/p_i))^2 + 1/2", false});
  bool identical = true;
  for (double pi : p) identical = identical && pi == p[0];
  if (identical) {
    table.push_back({"avg_converse_identical",
                     avg_converse_identical(n_users, n_cells, p[0]), in,
                     "N/(2Mp(1-(1-1/M)^N))", false});
    table.push_back({"mmw_upper_identical",
                     mmw_upper_identical(n_users, n_cells, p[0]), in,
                     "N/(Mp(1-(1-1/M)^N))", false});
  }
  table.push_back({"peak_optimum", peak_optimum(p), in, "sum 1/p_i", false});
  table.push_back({"ld_exponent", ld_exponent(p), in, "-log(1-min p_i)", false});
  const MinimaxBounds mm = minimax_lower_bounds(n_users);
  table.push_back({"minimax_avg_lb", mm.avg_lb, in, "N/2 + 1/(2N)", false});
  if (n_users == 2)
    table.push_back({"minimax_avg_lb_improved", mm.avg_lb_n2_improved, in,
                     "3/2 (two-user refinement)", false});
  if (n_users >= 2)
    table.push_back({"minimax_peak_lb_shape", mm.peak_lb_shape, in,
                     "N/ln N (constant suppressed)", true});
  table.push_back({"g_uniform", g_uniform(n_users, n_cells), in,
                   "M(1-(1-1/M)^N)", false});
  if (n_users >= 3)
    table.push_back({"peak_opt_upper_one_good", peak_opt_upper_yao(n_users), in,
                     "1+(N/a)ln(N/(1-a)); a=1-1/ln N", false});
  return table;
}

}  // namespace aoisim
