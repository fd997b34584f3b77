// Python bindings for the main operations: run a configured experiment to a
// trace, evaluate costs and stationary statistics, query the closed-form
// bound table, the offline oracle, the value-iteration solver, and the trace
// exchange format.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "aoisim/analysis.hpp"
#include "aoisim/bounds.hpp"
#include "aoisim/config.hpp"
#include "aoisim/engine.hpp"
#include "aoisim/errors.hpp"
#include "aoisim/oracle.hpp"
#include "aoisim/trace_io.hpp"

namespace py = pybind11;
using namespace aoisim;

namespace {

Metric metric_from_string(const std::string& name) {
  if (name == "avg") return Metric::kAvg;
  if (name == "peak") return Metric::kPeak;
  throw ValidationError("unknown metric '" + name + "' (want avg|peak)");
}

Trace run_config_text(const std::string& text, const std::string& policy,
                      int rep) {
  std::istringstream in(text);
  ExperimentConfig cfg = ExperimentConfig::parse(in);
  cfg.validate();
  const PolicyKind kind =
      policy.empty() ? cfg.policies.front() : policy_kind_from_string(policy);
  const std::uint64_t rep_seed =
      derive_seed(cfg.seed, static_cast<std::uint64_t>(rep));
  const std::vector<double> p = cfg.resolve_success_probs(rep_seed);
  const SystemParams sys = cfg.system_params(rep_seed, p);
  sys.validate();
  auto pol = cfg.make_policy_for(kind, sys, p, rep_seed);
  auto channels = cfg.make_channels(rep_seed, p);
  auto mobility = cfg.make_mobility(rep_seed);
  return run_simulation(sys, *pol, *channels, *mobility);
}

py::dict stats_dict(const StationaryStats& s) {
  py::dict d;
  d["avg_aoi"] = s.avg_aoi;
  d["peak_aoi"] = s.peak_aoi;
  d["sum_age_avg"] = s.sum_age_avg;
  d["sum_age_se"] = s.sum_age_se;
  d["per_user_avg_age"] = s.per_user_avg_age;
  d["slots_counted"] = s.slots_counted;
  d["burn_in"] = s.burn_in;
  d["max_observed_age"] = s.max_observed_age();
  return d;
}

}  // namespace

PYBIND11_MODULE(_aoisim, m) {
  m.doc() =
      "age-of-information scheduling testbed: simulator, bounds, oracles";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ParseError>(m, "TraceParseError", PyExc_ValueError);
  py::register_exception<OracleBudgetError>(m, "OracleBudgetError",
                                            PyExc_RuntimeError);
  py::register_exception<PropertyViolationError>(m, "PropertyViolationError",
                                                 PyExc_RuntimeError);
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError",
                                                PyExc_RuntimeError);

  py::class_<Trace>(m, "Trace", "recorded run: per-slot schedule/channel/ages")
      .def_property_readonly(
          "n_users", [](const Trace& t) { return t.params.n_users; })
      .def_property_readonly(
          "n_cells", [](const Trace& t) { return t.params.n_cells; })
      .def_property_readonly(
          "horizon", [](const Trace& t) { return t.records.size(); })
      .def_property_readonly("avg_aoi", &avg_aoi_cost)
      .def_property_readonly("peak_aoi", &peak_aoi_cost)
      .def("__repr__", [](const Trace& t) {
        std::ostringstream os;
        os << "<Trace N=" << t.params.n_users << " M=" << t.params.n_cells
           << " T=" << t.records.size() << ">";
        return os.str();
      });

  m.def("run_config", &run_config_text, py::arg("text"),
        py::arg("policy") = std::string(), py::arg("rep") = 0,
        "Run one replication of a key=value experiment config given as text; "
        "policy defaults to the config's first entry.");

  m.def("stationary", [](const Trace& t, SlotIndex burn_in) {
          return stats_dict(stationary_stats(t, burn_in));
        },
        py::arg("trace"), py::arg("burn_in") = -1,
        "Post-burn-in averages, batch-means standard error, per-user ages.");

  m.def("bounds_table", [](int n_users, int n_cells,
                           const std::vector<double>& p, double g) {
          const double gg = g > 0.0 ? g : g_uniform(n_users, n_cells);
          py::list rows;
          for (const BoundReport& r : bound_report_table(n_users, n_cells, p, gg)) {
            py::dict d;
            d["name"] = r.name;
            d["value"] = r.value;
            d["formula"] = r.formula;
            d["asymptotic"] = r.asymptotic;
            rows.append(d);
          }
          return rows;
        },
        py::arg("n_users"), py::arg("n_cells"), py::arg("p"),
        py::arg("g") = 0.0,
        "Closed-form bound table; g defaults to the uniform-mobility value.");

  m.def("oracle_min_cost", [](const Trace& t, const std::string& metric,
                              std::uint64_t max_states) {
          OracleBudget budget;
          budget.max_states = max_states;
          return brute_force_opt(t, metric_from_string(metric), budget).min_cost;
        },
        py::arg("trace"), py::arg("metric") = "avg",
        py::arg("max_states") = std::uint64_t{4'000'000},
        "Offline minimum of avg|peak age over every feasible schedule of the "
        "trace's channel/occupancy script.");

  m.def("rvi", [](const std::vector<double>& p, Age h_cap, double tol,
                  int max_iters) {
          const ValueTable v = relative_value_iteration(p, h_cap, tol, max_iters);
          py::dict d;
          d["gain"] = v.lambda;
          d["sweeps"] = v.sweeps;
          d["final_span"] = v.final_span;
          d["states"] = v.state_count();
          return d;
        },
        py::arg("p"), py::arg("h_cap") = Age{80}, py::arg("tol") = 1e-4,
        py::arg("max_iters") = 100'000,
        "Single-cell peak-age gain by relative value iteration.");

  m.def("bellman_residual", [](const std::vector<double>& p, Age h_cap) {
          const BellmanResidualReport r = verify_bellman_residual(p, h_cap);
          py::dict d;
          d["max_residual"] = r.max_residual;
          d["minimizer_is_max_age"] = r.minimizer_is_max_age;
          d["states_checked"] = r.states_checked;
          return d;
        },
        py::arg("p"), py::arg("h_cap") = Age{40},
        "Residual of the closed-form value function on every interior state.");

  m.def("super_intervals", [](const Trace& t) {
          const SuperIntervalDecomposition d = decompose_super_intervals(t);
          py::dict out;
          out["boundaries"] = d.boundaries;
          out["lengths"] = d.lengths;
          out["max_users"] = d.max_users;
          out["has_open_interval"] = d.has_open_interval;
          out["open_length"] = d.open_length;
          return out;
        },
        py::arg("trace"),
        "Decompose a max-age-rule trace at successes of the oldest user.");

  m.def("verify_interval_bound", [](const Trace& t) {
          const auto decomp = decompose_super_intervals(t);
          const Prop1Report r = verify_prop1(decomp, t);
          py::dict d;
          d["holds"] = r.holds;
          d["min_slack_steady"] = r.min_slack_steady;
          d["min_slack_early"] = r.min_slack_early;
          d["intervals_checked"] = r.intervals_checked;
          d["violations"] = r.violations.size();
          return d;
        },
        py::arg("trace"),
        "Check the per-interval age bound (age at offset k is at most k plus "
        "the previous N-1 interval lengths) on a max-age-rule trace.");

  m.def("ld_tail", [](const std::vector<double>& p, const std::string& policy,
                      SlotIndex t_long, Age k_lo, Age k_hi, std::uint64_t seed) {
          const TailSlopeEstimate e = ld_tail_oracle(
              p, policy_kind_from_string(policy), t_long, k_lo, k_hi, seed);
          py::dict d;
          d["slope"] = e.slope;
          d["std_err"] = e.std_err;
          d["k_lo"] = e.k_lo;
          d["k_hi"] = e.k_hi;
          d["slots"] = e.slots;
          d["reference"] = -ld_exponent(p);
          return d;
        },
        py::arg("p"), py::arg("policy") = "cma",
        py::arg("t_long") = SlotIndex{1'000'000}, py::arg("k_lo") = Age{0},
        py::arg("k_hi") = Age{0}, py::arg("seed") = std::uint64_t{1},
        "Fitted decay rate of log P(max age >= k) under a single-cell policy.");

  m.def("save_trace", &save_trace_file, py::arg("trace"), py::arg("path"));
  m.def("load_trace", &load_trace_file, py::arg("path"));

  m.def("avg_converse", &avg_converse, py::arg("p"), py::arg("g"));
  m.def("peak_optimum", &peak_optimum, py::arg("p"));
  m.def("ld_exponent", &ld_exponent, py::arg("p"));
  m.def("g_uniform", &g_uniform, py::arg("n_users"), py::arg("n_cells"));
}
