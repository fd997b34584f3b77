#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "aoisim/channels.hpp"
#include "aoisim/mobility.hpp"
#include "aoisim/policies.hpp"
#include "aoisim/types.hpp"

namespace aoisim {

// Flat key-value experiment description (lines `key = value`, `#` comments).
// Keys are namespaced: sim.*, policy.*, channel.*, mobility.*, output.*.
struct ExperimentConfig {
  // sim.*
  int n_users = 1;
  int n_cells = 1;
  SlotIndex horizon = 1;
  std::uint64_t seed = 1;
  int replications = 1;
  SlotIndex burn_in = -1;  // -1 → min(10^4, T/10)

  // policy.*
  std::vector<PolicyKind> policies{PolicyKind::kCma};
  long policy_delta = 0;

  // channel.*
  std::string channel_kind = "bec";  // bec|yao|tightness|throughput|replay
  // "0.5,0.7" (explicit), "const:0.5", or "uniform:a,b" (sampled per rep)
  std::string channel_p = "const:1";
  long channel_delta = 0;
  std::string channel_file;

  // mobility.*
  std::string mobility_kind = "static";  // static|iid_uniform|grid|replay
  std::string mobility_cells;            // csv of 1-based cells for static
  int grid_width = 0;
  int grid_height = 0;
  std::string mobility_file;

  // output.*
  std::string output_dir;     // empty → $AOISIM_OUTDIR or "."
  SlotIndex output_every = 0; // 0 → horizon/100 (at least 1)
  std::string metric = "both";

  static ExperimentConfig parse(std::istream& in);         // ParseError
  static ExperimentConfig parse_file(const std::string& path);
  std::string serialize() const;  // canonical order; parse∘serialize = id
  void validate() const;          // ValidationError listing offending keys

  // Success probabilities for one replication: explicit lists verbatim,
  // const broadcast, uniform:a,b sampled with the given seed.
  std::vector<double> resolve_success_probs(std::uint64_t rep_seed) const;

  SystemParams system_params(std::uint64_t rep_seed,
                             const std::vector<double>& p) const;
  std::unique_ptr<ChannelSource> make_channels(std::uint64_t rep_seed,
                                               const std::vector<double>& p) const;
  std::unique_ptr<MobilitySource> make_mobility(std::uint64_t rep_seed) const;
  std::unique_ptr<Policy> make_policy_for(PolicyKind kind,
                                          const SystemParams& sys,
                                          const std::vector<double>& p,
                                          std::uint64_t rep_seed) const;

  std::string resolved_output_dir() const;
};

}  // namespace aoisim
