#pragma once

#include <cstdint>
#include <vector>

namespace aoisim {

using SlotIndex = std::int64_t;
using Age = std::int64_t;
using AgeVector = std::vector<Age>;

// Marker for "no user scheduled" in a cell.
inline constexpr std::int32_t kIdle = -1;

struct SystemParams {
  int n_users = 1;
  int n_cells = 1;
  // Per-user success probabilities. Empty when channels come from an
  // adversarial or replayed source rather than iid coin flips.
  std::vector<double> success_probs;
  SlotIndex horizon = 1;
  std::uint64_t seed = 0;

  // Throws ValidationError listing every offending field.
  void validate() const;
};

// Cell assignment of each user for one slot. Values in [0, n_cells).
struct Occupancy {
  std::vector<std::int32_t> cell_of;

  int n_users() const { return static_cast<int>(cell_of.size()); }
};

// The scheduling decision: at most one user per cell, kIdle otherwise.
struct Decision {
  std::vector<std::int32_t> user_of_cell;

  int n_cells() const { return static_cast<int>(user_of_cell.size()); }
  bool schedules(int user, const Occupancy& occ) const {
    const int cell = occ.cell_of[static_cast<std::size_t>(user)];
    return user_of_cell[static_cast<std::size_t>(cell)] == user;
  }
};

// Everything that happened in one slot, ages measured after the slot.
struct SlotRecord {
  SlotIndex t = 0;
  Occupancy occupancy;
  Decision decision;
  std::vector<std::uint8_t> channel_good;  // per user, 1 = Good
  std::vector<std::uint8_t> success;       // per user, 1 = delivered this slot
  AgeVector ages_after;
};

struct Trace {
  SystemParams params;
  std::vector<SlotRecord> records;
};

// Age recursion: reset to 1 on delivery, otherwise grow by 1.
void step_ages(AgeVector& ages, const std::vector<std::uint8_t>& success);

// Time-average of the per-user age sum divided by N, ages read at slot ends.
double avg_aoi_cost(const Trace& trace);
// Time-average of the per-slot maximum age.
double peak_aoi_cost(const Trace& trace);

// Feasibility of a decision against an occupancy: every scheduled user must
// sit in the cell it is scheduled from. Throws ValidationError otherwise.
void check_decision_feasible(const Decision& decision, const Occupancy& occ,
                             int n_users, int n_cells);

}  // namespace aoisim
