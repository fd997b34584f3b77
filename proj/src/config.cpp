#include "aoisim/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "aoisim/errors.hpp"
#include "aoisim/rng.hpp"
#include "aoisim/trace_io.hpp"

namespace aoisim {

namespace {

std::string trim(const std::string& s) {
  const std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_double_list(const std::string& s,
                                      const std::string& what) {
  std::vector<double> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse " + what + " entry '" + tok + "'");
    }
  }
  return out;
}

long parse_long(const std::string& s, const std::string& key, long lineno) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    if (lineno > 0) throw ParseError("cannot parse integer for " + key, lineno);
    throw ValidationError("cannot parse integer for " + key);
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& key,
                        long lineno) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    if (lineno > 0) throw ParseError("cannot parse integer for " + key, lineno);
    throw ValidationError("cannot parse integer for " + key);
  }
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value'", lineno);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "sim.n_users") cfg.n_users = static_cast<int>(parse_long(value, key, lineno));
    else if (key == "sim.n_cells") cfg.n_cells = static_cast<int>(parse_long(value, key, lineno));
    else if (key == "sim.horizon") cfg.horizon = parse_long(value, key, lineno);
    else if (key == "sim.seed") cfg.seed = parse_u64(value, key, lineno);
    else if (key == "sim.replications") cfg.replications = static_cast<int>(parse_long(value, key, lineno));
    else if (key == "sim.burn_in") cfg.burn_in = parse_long(value, key, lineno);
    else if (key == "policy.kinds") {
      cfg.policies.clear();
      std::istringstream ps(value);
      std::string tok;
      while (std::getline(ps, tok, ',')) {
        try {
          cfg.policies.push_back(policy_kind_from_string(trim(tok)));
        } catch (const ValidationError& e) {
          throw ParseError(e.what(), lineno);
        }
      }
    } else if (key == "policy.delta") cfg.policy_delta = parse_long(value, key, lineno);
    else if (key == "channel.kind") cfg.channel_kind = value;
    else if (key == "channel.p") cfg.channel_p = value;
    else if (key == "channel.delta") cfg.channel_delta = parse_long(value, key, lineno);
    else if (key == "channel.file") cfg.channel_file = value;
    else if (key == "mobility.kind") cfg.mobility_kind = value;
    else if (key == "mobility.cells") cfg.mobility_cells = value;
    else if (key == "mobility.grid_width") cfg.grid_width = static_cast<int>(parse_long(value, key, lineno));
    else if (key == "mobility.grid_height") cfg.grid_height = static_cast<int>(parse_long(value, key, lineno));
    else if (key == "mobility.file") cfg.mobility_file = value;
    else if (key == "output.dir") cfg.output_dir = value;
    else if (key == "output.every") cfg.output_every = parse_long(value, key, lineno);
    else if (key == "output.metric") cfg.metric = value;
    else throw ParseError("unknown key '" + key + "'", lineno);
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config " + path);
  return parse(in);
}

std::string ExperimentConfig::serialize() const {
  std::ostringstream out;
  out << "sim.n_users = " << n_users << '\n';
  out << "sim.n_cells = " << n_cells << '\n';
  out << "sim.horizon = " << horizon << '\n';
  out << "sim.seed = " << seed << '\n';
  out << "sim.replications = " << replications << '\n';
  out << "sim.burn_in = " << burn_in << '\n';
  out << "policy.kinds = ";
  for (std::size_t i = 0; i < policies.size(); ++i) {
    if (i) out << ',';
    out << to_string(policies[i]);
  }
  out << '\n';
  out << "policy.delta = " << policy_delta << '\n';
  out << "channel.kind = " << channel_kind << '\n';
  out << "channel.p = " << channel_p << '\n';
  out << "channel.delta = " << channel_delta << '\n';
  if (!channel_file.empty()) out << "channel.file = " << channel_file << '\n';
  out << "mobility.kind = " << mobility_kind << '\n';
  if (!mobility_cells.empty())
    out << "mobility.cells = " << mobility_cells << '\n';
  out << "mobility.grid_width = " << grid_width << '\n';
  out << "mobility.grid_height = " << grid_height << '\n';
  if (!mobility_file.empty()) out << "mobility.file = " << mobility_file << '\n';
  if (!output_dir.empty()) out << "output.dir = " << output_dir << '\n';
  out << "output.every = " << output_every << '\n';
  out << "output.metric = " << metric << '\n';
  return out.str();
}

void ExperimentConfig::validate() const {
  std::ostringstream bad;
  if (n_users < 1) bad << " sim.n_users";
  if (n_cells < 1) bad << " sim.n_cells";
  if (horizon < 1) bad << " sim.horizon";
  if (replications < 1) bad << " sim.replications";
  if (burn_in >= horizon) bad << " sim.burn_in";
  if (policies.empty()) bad << " policy.kinds";
  if (metric != "avg" && metric != "peak" && metric != "both")
    bad << " output.metric";
  if (channel_kind != "bec" && channel_kind != "yao" &&
      channel_kind != "tightness" && channel_kind != "throughput" &&
      channel_kind != "replay")
    bad << " channel.kind";
  if (channel_kind == "replay" && channel_file.empty()) bad << " channel.file";
  if (channel_kind == "tightness") {
    if (n_cells != 1 || n_users < 2 || channel_delta < 1 ||
        (channel_delta - 1) % (n_users - 1) != 0)
      bad << " channel.delta";
  }
  if (channel_kind == "throughput" && (n_users != 2 || n_cells != 1))
    bad << " channel.kind(throughput-needs-N2-M1)";
  if (mobility_kind != "static" && mobility_kind != "iid_uniform" &&
      mobility_kind != "grid" && mobility_kind != "replay")
    bad << " mobility.kind";
  if (mobility_kind == "grid") {
    if (grid_width < 1 || grid_height < 1 ||
        grid_width * grid_height != n_cells)
      bad << " mobility.grid_width*grid_height";
  }
  if (mobility_kind == "replay" && mobility_file.empty())
    bad << " mobility.file";
  for (PolicyKind k : policies) {
    if (k == PolicyKind::kPolicyP) {
      const long d = policy_delta > 0 ? policy_delta : channel_delta;
      if (n_cells != 1 || n_users < 2 || d < 1 ||
          (d - 1) % (n_users - 1) != 0)
        bad << " policy.delta";
    }
    if (k == PolicyKind::kClairvoyantSingleGood &&
        (n_cells != 1 || channel_kind == "tightness" ||
         channel_kind == "throughput"))
      bad << " policy.kinds(clairvoyant-needs-oblivious-single-cell)";
  }
  if (!bad.str().empty())
    throw ValidationError("invalid config, offending keys:" + bad.str());
}

std::vector<double> ExperimentConfig::resolve_success_probs(
    std::uint64_t rep_seed) const {
  if (channel_p.rfind("const:", 0) == 0) {
    const double p = parse_double_list(channel_p.substr(6), "channel.p")[0];
    return std::vector<double>(static_cast<std::size_t>(n_users), p);
  }
  if (channel_p.rfind("uniform:", 0) == 0) {
    const std::vector<double> ab =
        parse_double_list(channel_p.substr(8), "channel.p");
    if (ab.size() != 2 || !(ab[0] <= ab[1]))
      throw ValidationError("channel.p uniform spec needs 'uniform:a,b'");
    Rng rng(derive_seed(rep_seed, 0xC0FFEE));
    std::vector<double> p(static_cast<std::size_t>(n_users));
    for (double& v : p) {
      v = rng.uniform_real(ab[0], ab[1]);
      if (v <= 0.0) v = 1e-3;  // keep probabilities valid on a [0,b] spec
    }
    return p;
  }
  std::vector<double> p = parse_double_list(channel_p, "channel.p");
  if (static_cast<int>(p.size()) != n_users)
    throw ValidationError("channel.p needs one entry per user");
  return p;
}

SystemParams ExperimentConfig::system_params(
    std::uint64_t rep_seed, const std::vector<double>& p) const {
  SystemParams sys;
  sys.n_users = n_users;
  sys.n_cells = n_cells;
  sys.horizon = horizon;
  sys.seed = rep_seed;
  if (channel_kind == "bec") sys.success_probs = p;
  return sys;
}

std::unique_ptr<ChannelSource> ExperimentConfig::make_channels(
    std::uint64_t rep_seed, const std::vector<double>& p) const {
  if (channel_kind == "bec") return bec_source(p, derive_seed(rep_seed, 1));
  if (channel_kind == "yao") return yao_source(n_users, derive_seed(rep_seed, 1));
  if (channel_kind == "tightness")
    return tightness_adversary(n_users, channel_delta);
  if (channel_kind == "throughput")
    return throughput_adversary(derive_seed(rep_seed, 1));
  if (channel_kind == "replay") {
    auto trace = std::make_shared<Trace>(load_trace_file(channel_file));
    return replay_channels(std::move(trace));
  }
  throw ValidationError("unknown channel.kind " + channel_kind);
}

std::unique_ptr<MobilitySource> ExperimentConfig::make_mobility(
    std::uint64_t rep_seed) const {
  if (mobility_kind == "static") {
    Occupancy occ;
    if (mobility_cells.empty()) {
      occ.cell_of.assign(static_cast<std::size_t>(n_users), 0);
    } else {
      const std::vector<double> cells =
          parse_double_list(mobility_cells, "mobility.cells");
      if (static_cast<int>(cells.size()) != n_users)
        throw ValidationError("mobility.cells needs one entry per user");
      for (double c : cells)
        occ.cell_of.push_back(static_cast<std::int32_t>(c) - 1);
    }
    return static_source(std::move(occ), n_cells);
  }
  if (mobility_kind == "iid_uniform")
    return iid_uniform_source(n_users, n_cells, derive_seed(rep_seed, 2));
  if (mobility_kind == "grid")
    return grid_walk_source({grid_width, grid_height}, n_users,
                            derive_seed(rep_seed, 2));
  if (mobility_kind == "replay") {
    auto trace = std::make_shared<Trace>(load_trace_file(mobility_file));
    return replay_mobility(std::move(trace));
  }
  throw ValidationError("unknown mobility.kind " + mobility_kind);
}

std::unique_ptr<Policy> ExperimentConfig::make_policy_for(
    PolicyKind kind, const SystemParams& sys, const std::vector<double>& p,
    std::uint64_t rep_seed) const {
  PolicyParams pp;
  pp.kind = kind;
  pp.success_probs = p;
  pp.seed = derive_seed(rep_seed, 3);
  pp.delta = policy_delta > 0 ? policy_delta : channel_delta;
  return make_policy(pp, sys);
}

std::string ExperimentConfig::resolved_output_dir() const {
  if (!output_dir.empty()) return output_dir;
  if (const char* env = std::getenv("AOISIM_OUTDIR"); env && *env) return env;
  return ".";
}

}  // namespace aoisim
