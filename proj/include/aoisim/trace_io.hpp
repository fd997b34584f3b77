#pragma once

#include <iosfwd>
#include <string>

#include "aoisim/types.hpp"

namespace aoisim {

// Text format AOITRACE v1. Header line `AOITRACE v1 N M T`, then one line per
// slot: `t;cells;scheduled;channels;successes` where cells is a csv of
// 1-based cell ids per user, scheduled is a csv with one entry per cell
// (`cell:user`, or `-` for idle), channels is a G/B string per user and
// successes a 0/1 string per user. Ages are not stored; they are replayed
// from the age recursion on load.

void save_trace(const Trace& trace, std::ostream& out);
void save_trace_file(const Trace& trace, const std::string& path);

// Throws ParseError with the offending 1-based line; re-derives ages and
// cross-checks that success[i] implies scheduled and Good.
Trace load_trace(std::istream& in);
Trace load_trace_file(const std::string& path);

}  // namespace aoisim
