#pragma once

#include <functional>

#include "aoisim/channels.hpp"
#include "aoisim/mobility.hpp"
#include "aoisim/policies.hpp"
#include "aoisim/types.hpp"

namespace aoisim {

// Receives each completed slot. The record is a reused workspace: copy what
// you need, do not keep the reference.
using SlotSink = std::function<void(const SlotRecord&)>;

// Runs the slot loop: move users, schedule on ages h(t-1), reveal channels,
// apply successes, measure ages. Ages start at 1 for everyone. Validates that
// policy/source/params dimensions agree and that a CSI policy never faces an
// adaptive source.
void run(const SystemParams& params, Policy& policy, ChannelSource& channels,
         MobilitySource& mobility, const SlotSink& sink);

// Convenience wrapper that materializes the full trace; use only for small
// horizons (memory grows with N * T).
Trace run_simulation(const SystemParams& params, Policy& policy,
                     ChannelSource& channels, MobilitySource& mobility);

}  // namespace aoisim
