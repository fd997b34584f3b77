#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "aoisim/channels.hpp"
#include "aoisim/engine.hpp"
#include "aoisim/errors.hpp"
#include "aoisim/mobility.hpp"
#include "aoisim/policies.hpp"
#include "aoisim/types.hpp"

namespace aoisim_test {

using namespace aoisim;

// Channel source replaying an explicit per-slot script of Good flags.
class ScriptChannels final : public ChannelSource {
 public:
  explicit ScriptChannels(std::vector<std::vector<std::uint8_t>> script)
      : script_(std::move(script)) {}
  int n_users() const override {
    return script_.empty() ? 0 : static_cast<int>(script_[0].size());
  }
  void emit(SlotIndex t, const Decision&,
            std::vector<std::uint8_t>& good) override {
    if (t < 1 || t > static_cast<SlotIndex>(script_.size()))
      throw TruncatedSourceError("script ends before slot");
    good = script_[static_cast<std::size_t>(t - 1)];
  }

 private:
  std::vector<std::vector<std::uint8_t>> script_;
};

// Mobility source replaying an explicit per-slot script of occupancies.
class ScriptMobility final : public MobilitySource {
 public:
  ScriptMobility(std::vector<Occupancy> script, int n_cells)
      : script_(std::move(script)), n_cells_(n_cells) {}
  int n_users() const override {
    return script_.empty() ? 0 : script_[0].n_users();
  }
  int n_cells() const override { return n_cells_; }
  void occupancy(SlotIndex t, Occupancy& out) override {
    if (t < 1 || t > static_cast<SlotIndex>(script_.size()))
      throw TruncatedSourceError("script ends before slot");
    out = script_[static_cast<std::size_t>(t - 1)];
  }

 private:
  std::vector<Occupancy> script_;
  int n_cells_;
};

inline Occupancy all_in_cell(int n_users, int cell) {
  Occupancy occ;
  occ.cell_of.assign(static_cast<std::size_t>(n_users),
                     static_cast<std::int32_t>(cell));
  return occ;
}

inline std::vector<std::vector<std::uint8_t>> constant_channels(
    int n_users, SlotIndex t_total, std::uint8_t value) {
  return std::vector<std::vector<std::uint8_t>>(
      static_cast<std::size_t>(t_total),
      std::vector<std::uint8_t>(static_cast<std::size_t>(n_users), value));
}

inline SystemParams basic_params(int n, int m, SlotIndex t,
                                 std::uint64_t seed = 1) {
  SystemParams sp;
  sp.n_users = n;
  sp.n_cells = m;
  sp.horizon = t;
  sp.seed = seed;
  return sp;
}

inline Trace run_scripted(const SystemParams& params, PolicyKind kind,
                          std::vector<std::vector<std::uint8_t>> channels,
                          std::vector<Occupancy> occs,
                          std::vector<double> policy_p = {},
                          long delta = 0) {
  PolicyParams pp;
  pp.kind = kind;
  pp.success_probs = std::move(policy_p);
  pp.delta = delta;
  pp.seed = params.seed;
  auto policy = make_policy(pp, params);
  ScriptChannels cs(std::move(channels));
  ScriptMobility ms(std::move(occs), params.n_cells);
  return run_simulation(params, *policy, cs, ms);
}

}  // namespace aoisim_test
