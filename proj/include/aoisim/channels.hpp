#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "aoisim/types.hpp"

namespace aoisim {

// Per-slot per-user channel states. Oblivious sources ignore the decision
// argument entirely (their sequence depends only on the seed), adaptive ones
// may condition on the decision just made.
class ChannelSource {
 public:
  virtual ~ChannelSource() = default;
  virtual bool adaptive() const { return false; }
  virtual int n_users() const = 0;
  // Throws ValidationError if the source cannot serve these dimensions.
  virtual void check_compatible(const SystemParams& params) const;
  virtual void emit(SlotIndex t, const Decision& decision,
                    std::vector<std::uint8_t>& good) = 0;
};

// iid Bernoulli(p_i) per user per slot; p_i in (0, 1].
std::unique_ptr<ChannelSource> bec_source(std::vector<double> p,
                                          std::uint64_t seed);

// Exactly one uniformly chosen user is Good each slot, everyone else Bad.
std::unique_ptr<ChannelSource> yao_source(int n_users, std::uint64_t seed);

// Deterministic adaptive adversary for a single cell: it tracks the max-age
// user with an internal shadow of the greedy max-age schedule and, within
// each length-delta block, gives that user Bad on offsets 1..delta-1 and Good
// on offset delta; all other users are always Good. Requires
// delta ≡ 1 (mod n_users - 1) and n_users >= 2.
std::unique_ptr<ChannelSource> tightness_adversary(int n_users, long delta);

// Adaptive adversary for N = 2, M = 1: the scheduled user is Bad, the other
// Good, so every online transmission fails while a clairvoyant schedule would
// succeed each slot. Deterministic; the seed is accepted for uniformity.
std::unique_ptr<ChannelSource> throughput_adversary(std::uint64_t seed = 0);

// Replays channel states recorded in a trace.
std::unique_ptr<ChannelSource> replay_channels(std::shared_ptr<const Trace> trace);

}  // namespace aoisim
