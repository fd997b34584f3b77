#include "aoisim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "aoisim/errors.hpp"
#include "aoisim/rng.hpp"

namespace aoisim {

void OccupancyDistribution::validate() const {
  if (n_users < 1 || n_cells < 1 ||
      psi.size() != static_cast<std::size_t>(n_users) * n_cells)
    throw ValidationError("occupancy distribution has wrong shape");
  for (int i = 0; i < n_users; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_cells; ++j) {
      const double v = at(i, j);
      if (v < 0.0 || v > 1.0)
        throw ValidationError("occupancy probability outside [0,1]");
      row += v;
    }
    if (std::abs(row - 1.0) > 1e-9)
      throw ValidationError("occupancy row does not sum to 1");
  }
}

namespace {

class StaticSource final : public MobilitySource {
 public:
  StaticSource(Occupancy cell_of, int n_cells)
      : occ_(std::move(cell_of)), n_cells_(n_cells) {
    for (std::int32_t c : occ_.cell_of)
      if (c < 0 || c >= n_cells_)
        throw ValidationError("static occupancy has out-of-range cell");
  }
  int n_users() const override { return occ_.n_users(); }
  int n_cells() const override { return n_cells_; }
  void occupancy(SlotIndex, Occupancy& out) override { out = occ_; }

 private:
  Occupancy occ_;
  int n_cells_;
};

class IidUniformSource final : public MobilitySource {
 public:
  IidUniformSource(int n_users, int n_cells, std::uint64_t seed)
      : n_users_(n_users), n_cells_(n_cells), rng_(seed) {
    if (n_users < 1 || n_cells < 1)
      throw ValidationError("iid uniform mobility needs N, M >= 1");
  }
  int n_users() const override { return n_users_; }
  int n_cells() const override { return n_cells_; }
  void occupancy(SlotIndex, Occupancy& out) override {
    out.cell_of.resize(static_cast<std::size_t>(n_users_));
    for (int i = 0; i < n_users_; ++i)
      out.cell_of[static_cast<std::size_t>(i)] =
          static_cast<std::int32_t>(rng_.below(static_cast<std::uint64_t>(n_cells_)));
  }

 private:
  int n_users_;
  int n_cells_;
  Rng rng_;
};

// Cell (x, y) -> index y*width + x. Each step moves every user to a uniformly
// chosen 4-neighbour that stays inside the grid; no staying put, so the
// stationary occupancy is proportional to the node degree.
class GridWalkSource final : public MobilitySource {
 public:
  GridWalkSource(GridSpec grid, int n_users, std::uint64_t seed)
      : grid_(grid), n_users_(n_users), rng_(seed) {
    if (grid.width < 1 || grid.height < 1)
      throw ValidationError("grid dimensions must be positive");
    if (n_users < 1) throw ValidationError("grid walk needs N >= 1");
    pos_.resize(static_cast<std::size_t>(n_users));
    const std::uint64_t cells =
        static_cast<std::uint64_t>(grid.width) * grid.height;
    for (auto& p : pos_) p = static_cast<std::int32_t>(rng_.below(cells));
  }
  int n_users() const override { return n_users_; }
  int n_cells() const override { return grid_.width * grid_.height; }
  void occupancy(SlotIndex, Occupancy& out) override {
    const int w = grid_.width, h = grid_.height;
    out.cell_of.resize(static_cast<std::size_t>(n_users_));
    for (int i = 0; i < n_users_; ++i) {
      std::int32_t& p = pos_[static_cast<std::size_t>(i)];
      if (w * h > 1) {
        const int x = p % w, y = p / w;
        int nbr[4];
        int deg = 0;
        if (x > 0) nbr[deg++] = p - 1;
        if (x + 1 < w) nbr[deg++] = p + 1;
        if (y > 0) nbr[deg++] = p - w;
        if (y + 1 < h) nbr[deg++] = p + w;
        p = static_cast<std::int32_t>(
            nbr[rng_.below(static_cast<std::uint64_t>(deg))]);
      }
      out.cell_of[static_cast<std::size_t>(i)] = p;
    }
  }

 private:
  GridSpec grid_;
  int n_users_;
  Rng rng_;
  std::vector<std::int32_t> pos_;
};

class ReplayMobility final : public MobilitySource {
 public:
  explicit ReplayMobility(std::shared_ptr<const Trace> trace)
      : trace_(std::move(trace)) {
    if (!trace_) throw ValidationError("replay mobility needs a trace");
  }
  int n_users() const override { return trace_->params.n_users; }
  int n_cells() const override { return trace_->params.n_cells; }
  void occupancy(SlotIndex t, Occupancy& out) override {
    if (t < 1 || t > static_cast<SlotIndex>(trace_->records.size()))
      throw TruncatedSourceError("replayed mobility ends before slot " +
                                 std::to_string(t));
    out = trace_->records[static_cast<std::size_t>(t - 1)].occupancy;
  }

 private:
  std::shared_ptr<const Trace> trace_;
};

}  // namespace

std::unique_ptr<MobilitySource> static_source(Occupancy cell_of, int n_cells) {
  return std::make_unique<StaticSource>(std::move(cell_of), n_cells);
}

std::unique_ptr<MobilitySource> iid_uniform_source(int n_users, int n_cells,
                                                   std::uint64_t seed) {
  return std::make_unique<IidUniformSource>(n_users, n_cells, seed);
}

std::unique_ptr<MobilitySource> grid_walk_source(GridSpec grid, int n_users,
                                                 std::uint64_t seed) {
  return std::make_unique<GridWalkSource>(grid, n_users, seed);
}

std::unique_ptr<MobilitySource> replay_mobility(std::shared_ptr<const Trace> trace) {
  return std::make_unique<ReplayMobility>(std::move(trace));
}

double expected_busy_cells(const OccupancyDistribution& psi) {
  psi.validate();
  double g = 0.0;
  for (int j = 0; j < psi.n_cells; ++j) {
    double all_empty = 1.0;
    for (int i = 0; i < psi.n_users; ++i) all_empty *= 1.0 - psi.at(i, j);
    g += 1.0 - all_empty;
  }
  return g;
}

double expected_busy_cells_uniform(int n_users, int n_cells) {
  if (n_users < 1 || n_cells < 1)
    throw ValidationError("uniform busy-cell mean needs N, M >= 1");
  const double m = static_cast<double>(n_cells);
  return m * (1.0 - std::pow(1.0 - 1.0 / m, n_users));
}

BusyCellsEstimate estimate_busy_cells(MobilitySource& mobility, SlotIndex slots) {
  if (slots < 1) throw ValidationError("busy-cell estimate needs slots >= 1");
  const int m = mobility.n_cells();
  Occupancy occ;
  std::vector<std::uint8_t> busy(static_cast<std::size_t>(m));
  double sum = 0.0, sum_sq = 0.0;
  for (SlotIndex t = 1; t <= slots; ++t) {
    mobility.occupancy(t, occ);
    std::fill(busy.begin(), busy.end(), 0);
    for (std::int32_t c : occ.cell_of) busy[static_cast<std::size_t>(c)] = 1;
    int count = 0;
    for (std::uint8_t b : busy) count += b;
    sum += count;
    sum_sq += static_cast<double>(count) * count;
  }
  BusyCellsEstimate est;
  est.slots = slots;
  est.mean = sum / static_cast<double>(slots);
  if (slots > 1) {
    const double var =
        (sum_sq - sum * est.mean) / static_cast<double>(slots - 1);
    est.std_err = std::sqrt(std::max(0.0, var) / static_cast<double>(slots));
  }
  return est;
}

}  // namespace aoisim
