#include "aoisim/policies.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "aoisim/errors.hpp"

namespace aoisim {

namespace {

// Shared per-cell argmax over occupants with lowest-index tie-break. score(i)
// must be strictly comparable; first occupant wins ties because we iterate in
// increasing user order with a strict improvement test.
template <typename Score>
void per_cell_argmax(const Occupancy& occ, int n_cells, Score score,
                     Decision& out) {
  out.user_of_cell.assign(static_cast<std::size_t>(n_cells), kIdle);
  std::vector<double> best(static_cast<std::size_t>(n_cells), 0.0);
  const int n = occ.n_users();
  for (int i = 0; i < n; ++i) {
    const std::size_t j = static_cast<std::size_t>(occ.cell_of[static_cast<std::size_t>(i)]);
    const double s = score(i);
    if (out.user_of_cell[j] == kIdle || s > best[j]) {
      out.user_of_cell[j] = i;
      best[j] = s;
    }
  }
}

}  // namespace

void cma_decide(const AgeVector& ages, const Occupancy& occ, int n_cells,
                Decision& out) {
  per_cell_argmax(occ, n_cells,
                  [&](int i) { return static_cast<double>(ages[static_cast<std::size_t>(i)]); },
                  out);
}

void mmw_decide(const AgeVector& ages, const Occupancy& occ,
                const std::vector<double>& p, int n_cells, Decision& out) {
  per_cell_argmax(occ, n_cells,
                  [&](int i) {
                    const double h = static_cast<double>(ages[static_cast<std::size_t>(i)]);
                    return p[static_cast<std::size_t>(i)] * h * h;
                  },
                  out);
}

void rand_decide(const Occupancy& occ, const std::vector<double>& p,
                 int n_cells, Rng& rng, Decision& out) {
  out.user_of_cell.assign(static_cast<std::size_t>(n_cells), kIdle);
  // Gather occupants per cell in increasing user order.
  std::vector<std::vector<int>> members(static_cast<std::size_t>(n_cells));
  const int n = occ.n_users();
  for (int i = 0; i < n; ++i)
    members[static_cast<std::size_t>(occ.cell_of[static_cast<std::size_t>(i)])].push_back(i);
  for (int j = 0; j < n_cells; ++j) {
    const auto& cell = members[static_cast<std::size_t>(j)];
    if (cell.empty()) continue;
    double total = 0.0;
    for (int i : cell) total += 1.0 / std::sqrt(p[static_cast<std::size_t>(i)]);
    double u = rng.uniform01() * total;
    int chosen = cell.back();
    for (int i : cell) {
      u -= 1.0 / std::sqrt(p[static_cast<std::size_t>(i)]);
      if (u < 0.0) { chosen = i; break; }
    }
    out.user_of_cell[static_cast<std::size_t>(j)] = chosen;
  }
}

void policy_p_decide(const AgeVector& ages, const Occupancy& occ, SlotIndex t,
                     int n_users, long delta, Decision& out) {
  (void)ages;  // rotation is time-driven; see header
  if (n_users < 2) throw ValidationError("block round-robin needs N >= 2");
  const SlotIndex block = (t - 1) / delta;           // 0-based
  const long offset = static_cast<long>((t - 1) % delta) + 1;  // 1..delta
  const int starved = static_cast<int>(block % n_users);
  int serve;
  if (offset == delta) {
    serve = starved;
  } else {
    // Cycle the other N-1 users starting just above the starved one, so the
    // first user of each cycle is the next block's starved user.
    const int step = static_cast<int>((offset - 1) % (n_users - 1));
    serve = (starved + 1 + step) % n_users;
  }
  out.user_of_cell.assign(1, serve);
  if (occ.cell_of[static_cast<std::size_t>(serve)] != 0)
    throw ValidationError("block round-robin requires a single shared cell");
}

void clairvoyant_single_good_decide(const std::vector<std::uint8_t>& good,
                                    const Occupancy& occ, int n_cells,
                                    Decision& out) {
  int the_good = -1;
  for (std::size_t i = 0; i < good.size(); ++i) {
    if (!good[i]) continue;
    if (the_good >= 0)
      throw PropertyViolationError("clairvoyant rule expects a unique Good user");
    the_good = static_cast<int>(i);
  }
  if (the_good < 0)
    throw PropertyViolationError("clairvoyant rule expects a unique Good user");
  out.user_of_cell.assign(static_cast<std::size_t>(n_cells), kIdle);
  out.user_of_cell[static_cast<std::size_t>(
      occ.cell_of[static_cast<std::size_t>(the_good)])] = the_good;
}

void throughput_greedy_decide(const Occupancy& occ,
                              const std::vector<double>& p, int n_cells,
                              Decision& out) {
  per_cell_argmax(occ, n_cells,
                  [&](int i) { return p[static_cast<std::size_t>(i)]; }, out);
}

void round_robin_decide(const Occupancy& occ, SlotIndex t, int n_users,
                        int n_cells, Decision& out) {
  const int pointer = static_cast<int>((t - 1) % n_users);
  // Smallest (i - pointer) mod N per cell, i.e. the occupant next in cyclic
  // order; scores negated for the shared argmax helper.
  per_cell_argmax(occ, n_cells,
                  [&](int i) {
                    const int d = ((i - pointer) % n_users + n_users) % n_users;
                    return -static_cast<double>(d);
                  },
                  out);
}

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kCma: return "cma";
    case PolicyKind::kMmw: return "mmw";
    case PolicyKind::kRand: return "rand";
    case PolicyKind::kPolicyP: return "policy-p";
    case PolicyKind::kClairvoyantSingleGood: return "clairvoyant";
    case PolicyKind::kThroughputGreedy: return "throughput-greedy";
    case PolicyKind::kRoundRobin: return "round-robin";
  }
  throw ValidationError("unknown policy kind");
}

PolicyKind policy_kind_from_string(const std::string& name) {
  if (name == "cma") return PolicyKind::kCma;
  if (name == "mmw") return PolicyKind::kMmw;
  if (name == "rand") return PolicyKind::kRand;
  if (name == "policy-p") return PolicyKind::kPolicyP;
  if (name == "clairvoyant") return PolicyKind::kClairvoyantSingleGood;
  if (name == "throughput-greedy") return PolicyKind::kThroughputGreedy;
  if (name == "round-robin") return PolicyKind::kRoundRobin;
  throw ValidationError("unknown policy name: " + name);
}

namespace {

class WrappedPolicy final : public Policy {
 public:
  WrappedPolicy(PolicyParams params, const SystemParams& sys)
      : params_(std::move(params)), n_users_(sys.n_users),
        n_cells_(sys.n_cells), rng_(params_.seed) {}

  std::string name() const override { return to_string(params_.kind); }

  bool uses_channel_state() const override {
    return params_.kind == PolicyKind::kClairvoyantSingleGood;
  }

  void decide(SlotIndex t, const AgeVector& ages, const Occupancy& occ,
              const std::vector<std::uint8_t>* channel_good,
              Decision& out) override {
    switch (params_.kind) {
      case PolicyKind::kCma:
        cma_decide(ages, occ, n_cells_, out);
        return;
      case PolicyKind::kMmw:
        mmw_decide(ages, occ, params_.success_probs, n_cells_, out);
        return;
      case PolicyKind::kRand:
        rand_decide(occ, params_.success_probs, n_cells_, rng_, out);
        return;
      case PolicyKind::kPolicyP:
        policy_p_decide(ages, occ, t, n_users_, params_.delta, out);
        return;
      case PolicyKind::kClairvoyantSingleGood:
        if (!channel_good)
          throw ValidationError("clairvoyant rule needs channel states");
        clairvoyant_single_good_decide(*channel_good, occ, n_cells_, out);
        return;
      case PolicyKind::kThroughputGreedy:
        throughput_greedy_decide(occ, params_.success_probs, n_cells_, out);
        return;
      case PolicyKind::kRoundRobin:
        round_robin_decide(occ, t, n_users_, n_cells_, out);
        return;
    }
    throw ValidationError("unknown policy kind");
  }

 private:
  PolicyParams params_;
  int n_users_;
  int n_cells_;
  Rng rng_;
};

}  // namespace

std::unique_ptr<Policy> make_policy(const PolicyParams& params,
                                    const SystemParams& sys) {
  sys.validate();
  const bool needs_p = params.kind == PolicyKind::kMmw ||
                       params.kind == PolicyKind::kRand ||
                       params.kind == PolicyKind::kThroughputGreedy;
  if (needs_p) {
    if (static_cast<int>(params.success_probs.size()) != sys.n_users)
      throw ValidationError(to_string(params.kind) +
                            " needs one success probability per user");
    for (double p : params.success_probs)
      if (!(p > 0.0) || p > 1.0)
        throw ValidationError("policy success probabilities must lie in (0,1]");
  }
  if (params.kind == PolicyKind::kPolicyP) {
    if (sys.n_cells != 1)
      throw ValidationError("block round-robin requires a single cell");
    if (sys.n_users < 2 || params.delta < 1 ||
        (params.delta - 1) % (sys.n_users - 1) != 0)
      throw ValidationError(
          "block round-robin needs N >= 2 and delta ≡ 1 (mod N-1)");
  }
  if (params.kind == PolicyKind::kClairvoyantSingleGood && sys.n_cells != 1)
    throw ValidationError("clairvoyant rule supports a single cell only");
  return std::make_unique<WrappedPolicy>(params, sys);
}

}  // namespace aoisim
