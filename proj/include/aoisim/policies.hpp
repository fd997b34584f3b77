#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "aoisim/rng.hpp"
#include "aoisim/types.hpp"

namespace aoisim {

// Pure per-slot scheduling rules. Each fills `out` with one user per nonempty
// cell (kIdle for empty cells). Ties always break toward the lowest index.

// Max-age occupant per cell.
void cma_decide(const AgeVector& ages, const Occupancy& occ, int n_cells,
                Decision& out);

// Occupant maximizing p_i * h_i^2 per cell.
void mmw_decide(const AgeVector& ages, const Occupancy& occ,
                const std::vector<double>& p, int n_cells, Decision& out);

// Occupant drawn with probability proportional to 1/sqrt(p_i) per cell.
void rand_decide(const Occupancy& occ, const std::vector<double>& p,
                 int n_cells, Rng& rng, Decision& out);

// Fixed-length-block schedule paired with the tightness adversary: block s
// (1-based) starves user (s-1) mod N until its final slot; the other users
// are served cyclically starting just above the starved one. `ages` are
// accepted for signature parity but the rotation is time-driven. Single cell.
void policy_p_decide(const AgeVector& ages, const Occupancy& occ, SlotIndex t,
                     int n_users, long delta, Decision& out);

// Schedules the unique Good user (Yao-style channel); single cell.
// Throws PropertyViolationError when the Good user is not unique.
void clairvoyant_single_good_decide(const std::vector<std::uint8_t>& good,
                                    const Occupancy& occ, int n_cells,
                                    Decision& out);

// Occupant with the highest success probability per cell.
void throughput_greedy_decide(const Occupancy& occ,
                              const std::vector<double>& p, int n_cells,
                              Decision& out);

// Cyclic baseline: cell serves the occupant closest at or above (t-1) mod N.
void round_robin_decide(const Occupancy& occ, SlotIndex t, int n_users,
                        int n_cells, Decision& out);

enum class PolicyKind {
  kCma,
  kMmw,
  kRand,
  kPolicyP,
  kClairvoyantSingleGood,
  kThroughputGreedy,
  kRoundRobin,
};

std::string to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& name);

struct PolicyParams {
  PolicyKind kind = PolicyKind::kCma;
  std::vector<double> success_probs;  // required by MMW / RAND / greedy
  std::uint64_t seed = 0;             // required by RAND
  long delta = 0;                     // required by POLICY_P
};

// Stateful wrapper around the decide functions; the engine drives it once per
// slot in t order.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string name() const = 0;
  // True when decide() must see the current slot's channel states (only the
  // clairvoyant rule). Such policies cannot face adaptive sources.
  virtual bool uses_channel_state() const { return false; }
  virtual void decide(SlotIndex t, const AgeVector& ages, const Occupancy& occ,
                      const std::vector<std::uint8_t>* channel_good,
                      Decision& out) = 0;
};

// Validates params against the system (e.g. POLICY_P needs a single cell and
// delta ≡ 1 mod N-1) and returns the wrapped rule.
std::unique_ptr<Policy> make_policy(const PolicyParams& params,
                                    const SystemParams& sys);

}  // namespace aoisim
