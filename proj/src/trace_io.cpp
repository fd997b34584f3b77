#include "aoisim/trace_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "aoisim/errors.hpp"

namespace aoisim {

void save_trace(const Trace& trace, std::ostream& out) {
  const int n = trace.params.n_users;
  const int m = trace.params.n_cells;
  out << "AOITRACE v1 " << n << ' ' << m << ' ' << trace.records.size() << '\n';
  for (const SlotRecord& rec : trace.records) {
    out << rec.t << ';';
    for (int i = 0; i < n; ++i) {
      if (i) out << ',';
      out << rec.occupancy.cell_of[static_cast<std::size_t>(i)] + 1;
    }
    out << ';';
    for (int j = 0; j < m; ++j) {
      if (j) out << ',';
      const std::int32_t u = rec.decision.user_of_cell[static_cast<std::size_t>(j)];
      if (u == kIdle) out << '-';
      else out << (j + 1) << ':' << (u + 1);
    }
    out << ';';
    for (int i = 0; i < n; ++i)
      out << (rec.channel_good[static_cast<std::size_t>(i)] ? 'G' : 'B');
    out << ';';
    for (int i = 0; i < n; ++i)
      out << (rec.success[static_cast<std::size_t>(i)] ? '1' : '0');
    out << '\n';
  }
}

void save_trace_file(const Trace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  save_trace(trace, out);
  if (!out) throw ValidationError("failed writing " + path);
}

namespace {

[[noreturn]] void fail(const std::string& what, long line) {
  throw ParseError(what, line);
}

long to_long(const std::string& s, const std::string& what, long line) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) fail("trailing characters in " + what, line);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail("cannot parse " + what + " from '" + s + "'", line);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Trace load_trace(std::istream& in) {
  std::string line;
  long lineno = 0;
  if (!std::getline(in, line)) fail("empty input", 1);
  ++lineno;
  std::istringstream head(line);
  std::string magic, version;
  long n = 0, m = 0, t_total = 0;
  head >> magic >> version >> n >> m >> t_total;
  if (!head || magic != "AOITRACE" || version != "v1")
    fail("expected header 'AOITRACE v1 N M T'", lineno);
  if (n < 1 || m < 1 || t_total < 0) fail("invalid header dimensions", lineno);

  Trace trace;
  trace.params.n_users = static_cast<int>(n);
  trace.params.n_cells = static_cast<int>(m);
  trace.params.horizon = t_total > 0 ? t_total : 1;
  trace.records.reserve(static_cast<std::size_t>(t_total));

  AgeVector ages(static_cast<std::size_t>(n), 1);
  for (long k = 1; k <= t_total; ++k) {
    if (!std::getline(in, line)) fail("missing slot " + std::to_string(k), lineno + 1);
    ++lineno;
    const std::vector<std::string> parts = split(line, ';');
    if (parts.size() != 5) fail("expected 5 ';'-separated fields", lineno);

    SlotRecord rec;
    rec.t = to_long(parts[0], "slot index", lineno);
    if (rec.t != k) fail("slot index out of order", lineno);

    const std::vector<std::string> cells = split(parts[1], ',');
    if (static_cast<long>(cells.size()) != n) fail("expected N cell entries", lineno);
    rec.occupancy.cell_of.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
      const long c = to_long(cells[static_cast<std::size_t>(i)], "cell id", lineno);
      if (c < 1 || c > m) fail("cell id out of range", lineno);
      rec.occupancy.cell_of[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(c - 1);
    }

    const std::vector<std::string> sched = split(parts[2], ',');
    if (static_cast<long>(sched.size()) != m) fail("expected M schedule entries", lineno);
    rec.decision.user_of_cell.assign(static_cast<std::size_t>(m), kIdle);
    for (long j = 0; j < m; ++j) {
      const std::string& entry = sched[static_cast<std::size_t>(j)];
      if (entry == "-") continue;
      const std::size_t colon = entry.find(':');
      if (colon == std::string::npos) fail("schedule entry needs cell:user", lineno);
      const long cj = to_long(entry.substr(0, colon), "schedule cell", lineno);
      const long u = to_long(entry.substr(colon + 1), "schedule user", lineno);
      if (cj != j + 1) fail("schedule entry in wrong cell slot", lineno);
      if (u < 1 || u > n) fail("scheduled user out of range", lineno);
      if (rec.occupancy.cell_of[static_cast<std::size_t>(u - 1)] != j)
        fail("scheduled user not in that cell", lineno);
      rec.decision.user_of_cell[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(u - 1);
    }

    const std::string& chan = parts[3];
    if (static_cast<long>(chan.size()) != n) fail("expected N channel flags", lineno);
    rec.channel_good.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
      const char c = chan[static_cast<std::size_t>(i)];
      if (c != 'G' && c != 'B') fail("channel flag must be G or B", lineno);
      rec.channel_good[static_cast<std::size_t>(i)] = c == 'G' ? 1 : 0;
    }

    const std::string& succ = parts[4];
    if (static_cast<long>(succ.size()) != n) fail("expected N success flags", lineno);
    rec.success.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
      const char c = succ[static_cast<std::size_t>(i)];
      if (c != '0' && c != '1') fail("success flag must be 0 or 1", lineno);
      const bool s = c == '1';
      const bool scheduled =
          rec.decision.user_of_cell[static_cast<std::size_t>(
              rec.occupancy.cell_of[static_cast<std::size_t>(i)])] ==
          static_cast<std::int32_t>(i);
      const bool good = rec.channel_good[static_cast<std::size_t>(i)] != 0;
      if (s != (scheduled && good))
        fail("success flag inconsistent with schedule and channel", lineno);
      rec.success[static_cast<std::size_t>(i)] = s ? 1 : 0;
    }

    step_ages(ages, rec.success);
    rec.ages_after = ages;
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

Trace load_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return load_trace(in);
}

}  // namespace aoisim
