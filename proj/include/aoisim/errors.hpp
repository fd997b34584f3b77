#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aoisim {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid or inconsistent caller input (bad dimensions, probabilities outside
// (0,1], unsupported combinations such as a CSI policy with an adaptive
// adversary).
struct ValidationError : Error {
  using Error::Error;
};

// Malformed text input (trace files, config files). Carries the 1-based line.
struct ParseError : Error {
  ParseError(const std::string& what, long line_arg)
      : Error(what + " (line " + std::to_string(line_arg) + ")"), line(line_arg) {}
  long line = 0;
};

// A replayed source ran out of recorded slots before the horizon.
struct TruncatedSourceError : Error {
  using Error::Error;
};

// Exhaustive search exceeded its state budget.
struct OracleBudgetError : Error {
  OracleBudgetError(const std::string& what, std::uint64_t states_arg)
      : Error(what), states(states_arg) {}
  std::uint64_t states = 0;
};

// Iterative solver failed to reach its tolerance. Carries the last span.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, double span_arg)
      : Error(what), final_span(span_arg) {}
  double final_span = 0.0;
};

// Not enough samples to produce the requested estimate (e.g. empty tail).
struct InsufficientDataError : Error {
  using Error::Error;
};

// A structural property that should always hold was observed to fail.
struct PropertyViolationError : Error {
  using Error::Error;
};

}  // namespace aoisim
