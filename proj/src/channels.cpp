#include "aoisim/channels.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "aoisim/errors.hpp"
#include "aoisim/rng.hpp"

namespace aoisim {

void ChannelSource::check_compatible(const SystemParams& params) const {
  if (params.n_users != n_users())
    throw ValidationError("channel source built for " +
                          std::to_string(n_users()) + " users, system has " +
                          std::to_string(params.n_users));
}

namespace {

class BecSource final : public ChannelSource {
 public:
  BecSource(std::vector<double> p, std::uint64_t seed)
      : p_(std::move(p)), rng_(seed) {
    if (p_.empty()) throw ValidationError("bec source needs at least one user");
    for (double pi : p_)
      if (!(pi > 0.0) || pi > 1.0)
        throw ValidationError("bec success probabilities must lie in (0,1]");
  }
  int n_users() const override { return static_cast<int>(p_.size()); }
  void emit(SlotIndex, const Decision&, std::vector<std::uint8_t>& good) override {
    good.resize(p_.size());
    for (std::size_t i = 0; i < p_.size(); ++i)
      good[i] = rng_.bernoulli(p_[i]) ? 1 : 0;
  }

 private:
  std::vector<double> p_;
  Rng rng_;
};

class YaoSource final : public ChannelSource {
 public:
  YaoSource(int n_users, std::uint64_t seed) : n_users_(n_users), rng_(seed) {
    if (n_users < 1) throw ValidationError("one-good source needs N >= 1");
  }
  int n_users() const override { return n_users_; }
  void emit(SlotIndex, const Decision&, std::vector<std::uint8_t>& good) override {
    good.assign(static_cast<std::size_t>(n_users_), 0);
    good[rng_.below(static_cast<std::uint64_t>(n_users_))] = 1;
  }

 private:
  int n_users_;
  Rng rng_;
};

// Shadow-driven starvation script: simulate the max-age schedule against this
// very source; whoever that shadow schedule is currently starving gets Bad on
// block offsets 1..delta-1 and Good on offset delta, everyone else Good.
class TightnessAdversary final : public ChannelSource {
 public:
  TightnessAdversary(int n_users, long delta)
      : n_users_(n_users), delta_(delta),
        shadow_ages_(static_cast<std::size_t>(n_users), 1) {
    if (n_users < 2)
      throw ValidationError("starvation adversary needs N >= 2");
    if (delta < 1 || (delta - 1) % (n_users - 1) != 0)
      throw ValidationError(
          "starvation adversary needs delta ≡ 1 (mod N-1), delta >= 1");
  }
  bool adaptive() const override { return true; }
  int n_users() const override { return n_users_; }
  void check_compatible(const SystemParams& params) const override {
    ChannelSource::check_compatible(params);
    if (params.n_cells != 1)
      throw ValidationError("starvation adversary supports a single cell only");
  }
  void emit(SlotIndex t, const Decision&, std::vector<std::uint8_t>& good) override {
    const long offset = static_cast<long>((t - 1) % delta_) + 1;
    if (offset == 1) {
      // New block: the shadow's oldest user (lowest index on ties).
      starved_ = 0;
      for (int i = 1; i < n_users_; ++i)
        if (shadow_ages_[static_cast<std::size_t>(i)] >
            shadow_ages_[static_cast<std::size_t>(starved_)])
          starved_ = i;
    }
    good.assign(static_cast<std::size_t>(n_users_), 1);
    if (offset < delta_) good[static_cast<std::size_t>(starved_)] = 0;
    // Advance the shadow: max-age schedules the starved user every slot of
    // the block (it stays the oldest), succeeding only at offset delta.
    for (int i = 0; i < n_users_; ++i) {
      std::size_t k = static_cast<std::size_t>(i);
      shadow_ages_[k] = (i == starved_ && offset == delta_) ? 1 : shadow_ages_[k] + 1;
    }
  }

 private:
  int n_users_;
  long delta_;
  AgeVector shadow_ages_;
  int starved_ = 0;
};

class ThroughputAdversary final : public ChannelSource {
 public:
  explicit ThroughputAdversary(std::uint64_t) {}
  bool adaptive() const override { return true; }
  int n_users() const override { return 2; }
  void check_compatible(const SystemParams& params) const override {
    ChannelSource::check_compatible(params);
    if (params.n_cells != 1)
      throw ValidationError("duel adversary supports a single cell only");
  }
  void emit(SlotIndex, const Decision& decision,
            std::vector<std::uint8_t>& good) override {
    good.assign(2, 1);
    const std::int32_t u = decision.user_of_cell.empty()
                               ? kIdle
                               : decision.user_of_cell[0];
    if (u == 0 || u == 1) good[static_cast<std::size_t>(u)] = 0;
    else good[1] = 0;  // idle: pick user 0 Good so exactly one stays Good
  }
};

class ReplayChannels final : public ChannelSource {
 public:
  explicit ReplayChannels(std::shared_ptr<const Trace> trace)
      : trace_(std::move(trace)) {
    if (!trace_) throw ValidationError("replay channels need a trace");
  }
  int n_users() const override { return trace_->params.n_users; }
  void emit(SlotIndex t, const Decision&, std::vector<std::uint8_t>& good) override {
    if (t < 1 || t > static_cast<SlotIndex>(trace_->records.size()))
      throw TruncatedSourceError("replayed channels end before slot " +
                                 std::to_string(t));
    good = trace_->records[static_cast<std::size_t>(t - 1)].channel_good;
  }

 private:
  std::shared_ptr<const Trace> trace_;
};

}  // namespace

std::unique_ptr<ChannelSource> bec_source(std::vector<double> p,
                                          std::uint64_t seed) {
  return std::make_unique<BecSource>(std::move(p), seed);
}

std::unique_ptr<ChannelSource> yao_source(int n_users, std::uint64_t seed) {
  return std::make_unique<YaoSource>(n_users, seed);
}

std::unique_ptr<ChannelSource> tightness_adversary(int n_users, long delta) {
  return std::make_unique<TightnessAdversary>(n_users, delta);
}

std::unique_ptr<ChannelSource> throughput_adversary(std::uint64_t seed) {
  return std::make_unique<ThroughputAdversary>(seed);
}

std::unique_ptr<ChannelSource> replay_channels(std::shared_ptr<const Trace> trace) {
  return std::make_unique<ReplayChannels>(std::move(trace));
}

}  // namespace aoisim
