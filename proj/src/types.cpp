#include "aoisim/types.hpp"

#include <algorithm>
#include <sstream>

#include "aoisim/errors.hpp"

namespace aoisim {

void SystemParams::validate() const {
  std::ostringstream bad;
  if (n_users < 1) bad << " n_users=" << n_users;
  if (n_cells < 1) bad << " n_cells=" << n_cells;
  if (horizon < 1) bad << " horizon=" << horizon;
  if (!success_probs.empty()) {
    if (static_cast<int>(success_probs.size()) != n_users)
      bad << " success_probs.size=" << success_probs.size();
    for (std::size_t i = 0; i < success_probs.size(); ++i) {
      const double p = success_probs[i];
      if (!(p > 0.0) || p > 1.0) bad << " success_probs[" << i << "]=" << p;
    }
  }
  if (!bad.str().empty())
    throw ValidationError("invalid SystemParams:" + bad.str());
}

void step_ages(AgeVector& ages, const std::vector<std::uint8_t>& success) {
  if (ages.size() != success.size())
    throw ValidationError("step_ages: length mismatch");
  for (std::size_t i = 0; i < ages.size(); ++i)
    ages[i] = success[i] ? 1 : ages[i] + 1;
}

double avg_aoi_cost(const Trace& trace) {
  if (trace.records.empty()) throw ValidationError("avg_aoi_cost: empty trace");
  double total = 0.0;
  for (const SlotRecord& rec : trace.records)
    for (Age a : rec.ages_after) total += static_cast<double>(a);
  return total / (static_cast<double>(trace.params.n_users) *
                  static_cast<double>(trace.records.size()));
}

double peak_aoi_cost(const Trace& trace) {
  if (trace.records.empty()) throw ValidationError("peak_aoi_cost: empty trace");
  double total = 0.0;
  for (const SlotRecord& rec : trace.records)
    total += static_cast<double>(
        *std::max_element(rec.ages_after.begin(), rec.ages_after.end()));
  return total / static_cast<double>(trace.records.size());
}

void check_decision_feasible(const Decision& decision, const Occupancy& occ,
                             int n_users, int n_cells) {
  if (decision.n_cells() != n_cells)
    throw ValidationError("decision has wrong cell count");
  for (int j = 0; j < n_cells; ++j) {
    const std::int32_t u = decision.user_of_cell[static_cast<std::size_t>(j)];
    if (u == kIdle) continue;
    if (u < 0 || u >= n_users)
      throw ValidationError("decision schedules out-of-range user");
    if (occ.cell_of[static_cast<std::size_t>(u)] != j)
      throw ValidationError("decision schedules a user outside its cell");
  }
}

}  // namespace aoisim
