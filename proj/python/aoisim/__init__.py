"""Age-of-information scheduling testbed.

Thin re-export of the compiled module: run configured experiments, evaluate
stationary statistics, and query the closed-form bounds and oracles.
"""

from _aoisim import (
    InsufficientDataError,
    OracleBudgetError,
    PropertyViolationError,
    Trace,
    TraceParseError,
    ValidationError,
    avg_converse,
    bellman_residual,
    bounds_table,
    g_uniform,
    ld_exponent,
    ld_tail,
    load_trace,
    oracle_min_cost,
    peak_optimum,
    run_config,
    rvi,
    save_trace,
    stationary,
    super_intervals,
    verify_interval_bound,
)

__all__ = [
    "InsufficientDataError",
    "OracleBudgetError",
    "PropertyViolationError",
    "Trace",
    "TraceParseError",
    "ValidationError",
    "avg_converse",
    "bellman_residual",
    "bounds_table",
    "g_uniform",
    "ld_exponent",
    "ld_tail",
    "load_trace",
    "oracle_min_cost",
    "peak_optimum",
    "run_config",
    "rvi",
    "save_trace",
    "stationary",
    "super_intervals",
    "verify_interval_bound",
]
