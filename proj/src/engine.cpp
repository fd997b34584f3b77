#include "aoisim/engine.hpp"

#include <string>

#include "aoisim/errors.hpp"

namespace aoisim {

void run(const SystemParams& params, Policy& policy, ChannelSource& channels,
         MobilitySource& mobility, const SlotSink& sink) {
  params.validate();
  channels.check_compatible(params);
  if (mobility.n_users() != params.n_users ||
      mobility.n_cells() != params.n_cells)
    throw ValidationError("mobility source dimensions do not match system");
  const bool csi = policy.uses_channel_state();
  if (csi && channels.adaptive())
    throw ValidationError(
        "a channel-state-aware policy cannot face an adaptive source");

  const std::size_t n = static_cast<std::size_t>(params.n_users);
  AgeVector ages(n, 1);  // h(0)
  SlotRecord rec;
  rec.channel_good.resize(n);
  rec.success.resize(n);

  for (SlotIndex t = 1; t <= params.horizon; ++t) {
    rec.t = t;
    mobility.occupancy(t, rec.occupancy);
    if (rec.occupancy.n_users() != params.n_users)
      throw ValidationError("mobility emitted wrong user count");
    if (csi) {
      // Oblivious sources ignore the decision, so reveal first.
      rec.decision.user_of_cell.clear();
      channels.emit(t, rec.decision, rec.channel_good);
      policy.decide(t, ages, rec.occupancy, &rec.channel_good, rec.decision);
    } else {
      policy.decide(t, ages, rec.occupancy, nullptr, rec.decision);
      channels.emit(t, rec.decision, rec.channel_good);
    }
    check_decision_feasible(rec.decision, rec.occupancy, params.n_users,
                            params.n_cells);
    if (rec.channel_good.size() != n)
      throw ValidationError("channel source emitted wrong user count");
    for (std::size_t i = 0; i < n; ++i)
      rec.success[i] =
          (rec.channel_good[i] &&
           rec.decision.schedules(static_cast<int>(i), rec.occupancy))
              ? 1
              : 0;
    step_ages(ages, rec.success);
    rec.ages_after = ages;
    sink(rec);
  }
}

Trace run_simulation(const SystemParams& params, Policy& policy,
                     ChannelSource& channels, MobilitySource& mobility) {
  Trace trace;
  trace.params = params;
  trace.records.reserve(static_cast<std::size_t>(params.horizon));
  run(params, policy, channels, mobility,
      [&trace](const SlotRecord& rec) { trace.records.push_back(rec); });
  return trace;
}

}  // namespace aoisim
