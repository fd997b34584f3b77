#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "aoisim/types.hpp"

namespace aoisim {

// Row-major N x M matrix of stationary occupancy probabilities psi_ij.
struct OccupancyDistribution {
  int n_users = 0;
  int n_cells = 0;
  std::vector<double> psi;

  double at(int user, int cell) const {
    return psi[static_cast<std::size_t>(user) * n_cells + cell];
  }
  // Rows must be probability vectors; throws ValidationError.
  void validate() const;
};

// Produces the cell assignment at the start of each slot. Implementations are
// deterministic in their seed and must be queried once per slot in t order.
class MobilitySource {
 public:
  virtual ~MobilitySource() = default;
  virtual int n_users() const = 0;
  virtual int n_cells() const = 0;
  virtual void occupancy(SlotIndex t, Occupancy& out) = 0;
};

// Users pinned to fixed cells.
std::unique_ptr<MobilitySource> static_source(Occupancy cell_of, int n_cells);
// Fresh uniform cell per user per slot.
std::unique_ptr<MobilitySource> iid_uniform_source(int n_users, int n_cells,
                                                   std::uint64_t seed);

struct GridSpec {
  int width = 1;
  int height = 1;
};
// Independent random walks on a width x height torus-free grid; one cell per
// grid point, each slot a uniformly chosen in-grid neighbour (no self-loop),
// so the stationary law is degree-proportional. Initial positions uniform.
std::unique_ptr<MobilitySource> grid_walk_source(GridSpec grid, int n_users,
                                                 std::uint64_t seed);
// Replays occupancy recorded in a trace; throws TruncatedSourceError past the
// recorded horizon.
std::unique_ptr<MobilitySource> replay_mobility(std::shared_ptr<const Trace> trace);

// Expected number of cells holding at least one user when rows of psi are
// independent: sum_j (1 - prod_i (1 - psi_ij)).
double expected_busy_cells(const OccupancyDistribution& psi);

// Closed form of the above for the uniform law psi_ij = 1/M.
double expected_busy_cells_uniform(int n_users, int n_cells);

struct BusyCellsEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  SlotIndex slots = 0;
};
// Monte Carlo estimate of the long-run mean number of busy cells.
BusyCellsEstimate estimate_busy_cells(MobilitySource& mobility, SlotIndex slots);

}  // namespace aoisim
