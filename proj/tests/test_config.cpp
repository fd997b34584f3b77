#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include "aoisim/config.hpp"
#include "aoisim/errors.hpp"

using namespace aoisim;

namespace {

ExperimentConfig parse_str(const std::string& text) {
  std::istringstream in(text);
  return ExperimentConfig::parse(in);
}

}  // namespace

TEST_CASE("serialize/parse is the identity on every field") {
  ExperimentConfig cfg;
  cfg.n_users = 7;
  cfg.n_cells = 3;
  cfg.horizon = 12345;
  cfg.seed = 99;
  cfg.replications = 4;
  cfg.burn_in = 100;
  cfg.policies = {PolicyKind::kCma, PolicyKind::kMmw, PolicyKind::kRand};
  cfg.policy_delta = 13;
  cfg.channel_kind = "bec";
  cfg.channel_p = "uniform:0.2,0.8";
  cfg.channel_delta = 13;
  cfg.channel_file = "chan.aoitrace";
  cfg.mobility_kind = "grid";
  cfg.grid_width = 3;
  cfg.grid_height = 1;
  cfg.mobility_file = "mob.aoitrace";
  cfg.output_dir = "out";
  cfg.output_every = 50;
  cfg.metric = "avg";

  const std::string text = cfg.serialize();
  const ExperimentConfig back = parse_str(text);
  CHECK(back.serialize() == text);
  CHECK(back.n_users == 7);
  CHECK(back.policies.size() == 3);
  CHECK(back.policies[1] == PolicyKind::kMmw);
  CHECK(back.channel_p == "uniform:0.2,0.8");
  CHECK(back.burn_in == 100);

  // defaults round-trip too
  const ExperimentConfig d;
  CHECK(parse_str(d.serialize()).serialize() == d.serialize());
}

TEST_CASE("parser reports the offending line") {
  try {
    parse_str("sim.n_users = 2\nbogus.key = 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("bogus.key") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_str("sim.n_users 2\n"), ParseError);
  CHECK_THROWS_AS(parse_str("sim.n_users = two\n"), ParseError);
  CHECK_THROWS_AS(parse_str("policy.kinds = cma,unknown\n"), ParseError);

  // comments and blank lines are fine
  const ExperimentConfig cfg =
      parse_str("# a comment\n\n  sim.n_users = 5  \n");
  CHECK(cfg.n_users == 5);
}

TEST_CASE("validation lists the offending keys") {
  ExperimentConfig cfg;
  cfg.n_users = 0;
  cfg.metric = "median";
  try {
    cfg.validate();
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("sim.n_users") != std::string::npos);
    CHECK(msg.find("output.metric") != std::string::npos);
  }

  ExperimentConfig late;
  late.horizon = 100;
  late.burn_in = 100;
  CHECK_THROWS_AS(late.validate(), ValidationError);

  ExperimentConfig tight;
  tight.n_users = 3;
  tight.horizon = 100;
  tight.channel_kind = "tightness";
  tight.channel_delta = 4;  // needs delta ≡ 1 (mod N-1)
  CHECK_THROWS_AS(tight.validate(), ValidationError);
  tight.channel_delta = 5;
  tight.validate();

  ExperimentConfig duel;
  duel.n_users = 3;
  duel.channel_kind = "throughput";
  CHECK_THROWS_AS(duel.validate(), ValidationError);

  ExperimentConfig grid;
  grid.n_users = 2;
  grid.n_cells = 6;
  grid.mobility_kind = "grid";
  grid.grid_width = 2;
  grid.grid_height = 2;  // 2*2 != 6
  CHECK_THROWS_AS(grid.validate(), ValidationError);
  grid.grid_height = 3;
  grid.validate();

  ExperimentConfig replay;
  replay.channel_kind = "replay";
  CHECK_THROWS_AS(replay.validate(), ValidationError);
}

TEST_CASE("success probabilities resolve per replication") {
  ExperimentConfig cfg;
  cfg.n_users = 3;

  cfg.channel_p = "0.2,0.5,0.9";
  CHECK(cfg.resolve_success_probs(1) ==
        std::vector<double>{0.2, 0.5, 0.9});

  cfg.channel_p = "0.2,0.5";
  CHECK_THROWS_AS(cfg.resolve_success_probs(1), ValidationError);

  cfg.channel_p = "const:0.4";
  CHECK(cfg.resolve_success_probs(7) ==
        std::vector<double>{0.4, 0.4, 0.4});

  cfg.channel_p = "uniform:0.2,0.8";
  const auto a = cfg.resolve_success_probs(10);
  const auto b = cfg.resolve_success_probs(10);
  const auto c = cfg.resolve_success_probs(11);
  CHECK(a == b);     // same replication seed → same draw
  CHECK(a != c);     // new seed → fresh draw
  for (double v : a) {
    CHECK(v >= 0.2);
    CHECK(v <= 0.8);
  }

  cfg.channel_p = "uniform:0.8,0.2";
  CHECK_THROWS_AS(cfg.resolve_success_probs(1), ValidationError);
}

TEST_CASE("factories build consistent sources") {
  ExperimentConfig cfg;
  cfg.n_users = 2;
  cfg.n_cells = 2;
  cfg.horizon = 50;
  cfg.mobility_kind = "static";
  cfg.mobility_cells = "2,1";
  const auto p = cfg.resolve_success_probs(3);
  const SystemParams sys = cfg.system_params(3, p);
  CHECK(sys.success_probs == p);  // bec feeds the rates through

  auto mobility = cfg.make_mobility(3);
  Occupancy occ;
  mobility->occupancy(1, occ);
  CHECK(occ.cell_of == std::vector<std::int32_t>{1, 0});

  auto channels = cfg.make_channels(3, p);
  CHECK(channels->n_users() == 2);

  auto policy = cfg.make_policy_for(PolicyKind::kCma, sys, p, 3);
  CHECK(policy->name() == "cma");

  cfg.mobility_cells = "1";
  CHECK_THROWS_AS(cfg.make_mobility(3), ValidationError);
}

TEST_CASE("output directory resolution order") {
  ExperimentConfig cfg;
  cfg.output_dir = "explicit";
  CHECK(cfg.resolved_output_dir() == "explicit");

  cfg.output_dir.clear();
  setenv("AOISIM_OUTDIR", "from_env", 1);
  CHECK(cfg.resolved_output_dir() == "from_env");
  unsetenv("AOISIM_OUTDIR");
  CHECK(cfg.resolved_output_dir() == ".");
}
