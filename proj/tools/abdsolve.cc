// Copyright 2026 The abdsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// abdsolve: command-line front end.
//
//   abdsolve solve --game leduc --iterations 10000
//   abdsolve br --game battleships --opponent corner_avoider
//   abdsolve rnr --game battleships --opponent corner_avoider --out rnr.csv
//   abdsolve abd --game battleships --opponent corner_avoider --depth 2 \
//       --portfolio avoid4 --exact-ev
//   abdsolve exp --id table1 --seed 1 --out results/

#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abd/agent/agent.h"
#include "abd/agent/composite.h"
#include "abd/agent/match.h"
#include "abd/agent/resolver.h"
#include "abd/efg/strategy_io.h"
#include "abd/games/game_config.h"
#include "abd/games/scripted.h"
#include "abd/harness/csv.h"
#include "abd/harness/experiments.h"
#include "abd/robust/rnr.h"
#include "abd/solver/best_response.h"
#include "abd/solver/cfr.h"
#include "abd/solver/metrics.h"

namespace abd {
namespace {

// --game takes a config file, a game name, or inline "key=value;..." pairs.
GameConfig ResolveGameConfig(const std::string& text) {
  if (text.find('=') != std::string::npos) {
    std::string lines = text;
    for (char& c : lines) {
      if (c == ';') c = '\n';
    }
    return GameConfigFromEntries(ParseKeyValues(lines, "--game"), "--game");
  }
  if (std::filesystem::is_regular_file(text)) return LoadGameConfig(text);
  return GameConfigFromEntries({{"game", text, 0}}, "--game");
}

void Emit(const CsvTable& table, const std::string& out) {
  if (out.empty()) {
    WriteCsv(std::cout, table);
  } else {
    SaveCsv(out, table);
  }
}

std::string OpponentSpec(const GameConfig& config, const std::string& flag,
                         const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (!config.opponent.empty()) return config.opponent;
  return fallback;
}

struct CommonFlags {
  std::string game = "battleships";
  std::string opponent;
  std::string out;
  int iterations = 1000;
  uint64_t seed = 1;
};

void AddCommon(CLI::App* app, CommonFlags& flags) {
  app->add_option("--game", flags.game,
                  "Config file, game name or inline key=value;... pairs");
  app->add_option("--iterations", flags.iterations, "CFR+ iterations")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", flags.seed, "Master seed");
  app->add_option("--out", flags.out, "Output CSV (default stdout)");
}

int RunSolve(const CommonFlags& flags, const std::string& strategy_out) {
  GamePtr game = BuildGame(ResolveGameConfig(flags.game));
  CfrConfig config;
  config.iterations = flags.iterations;
  SolveReport report = CfrSolve(*game, config);
  if (!strategy_out.empty()) {
    SaveStrategy(strategy_out, report.average[0], game->Id(), Player::kP1);
  }
  CsvTable table{{"game", "iterations", "value", "nash_conv", "seconds"},
                 {{game->Id(), std::to_string(report.iterations),
                   FormatMetric(report.value), FormatMetric(report.nash_conv),
                   FormatSeconds(report.seconds)}}};
  Emit(table, flags.out);
  return 0;
}

int RunBr(const CommonFlags& flags) {
  GameConfig gc = ResolveGameConfig(flags.game);
  GamePtr game = BuildGame(gc);
  PolicyPtr opponent =
      MakeOpponent(*game, OpponentSpec(gc, flags.opponent, "uniform"));
  BestResponseResult br = BestResponse(*game, Player::kP1, *opponent);
  double value = GameValue(*game);
  CsvTable table{{"opponent", "value", "game_value", "gain"},
                 {{opponent->Name(), FormatMetric(br.value),
                   FormatMetric(value), FormatMetric(br.value - value)}}};
  Emit(table, flags.out);
  return 0;
}

int RunRnr(const CommonFlags& flags, const std::vector<double>& p_list) {
  GameConfig gc = ResolveGameConfig(flags.game);
  GamePtr game = BuildGame(gc);
  PolicyPtr opponent =
      MakeOpponent(*game, OpponentSpec(gc, flags.opponent, "uniform"));
  CfrConfig config;
  config.iterations = flags.iterations;
  CsvTable table{ExperimentHeader("pareto_battleships"), {}};
  for (const RnrResult& r : ParetoSweep(
           game, opponent, p_list.empty() ? DefaultPGrid() : p_list, config)) {
    table.rows.push_back({"rnr", FormatMetric(r.p), FormatMetric(r.gain),
                          FormatMetric(r.exploitability),
                          FormatSeconds(r.report.seconds)});
  }
  Emit(table, flags.out);
  return 0;
}

struct AbdFlags {
  double p = 1.0;
  int depth = 2;
  std::string portfolio;
  std::string values = "exact";
  int samples = 10;
  int episodes = 1000;
  bool exact_ev = false;
  int threads = 0;
};

int RunAbd(const CommonFlags& flags, const AbdFlags& abd) {
  GameConfig gc = ResolveGameConfig(flags.game);
  GamePtr game = BuildGame(gc);
  PolicyPtr opponent =
      MakeOpponent(*game, OpponentSpec(gc, flags.opponent, "uniform"));
  std::string portfolio = abd.portfolio;
  if (portfolio.empty()) portfolio = IsPoker(*game) ? "leduc2" : "parity3";
  AgentConfig config;
  config.p = abd.p;
  config.depth = {abd.depth};
  config.fixed_opponent = opponent;
  config.p1 = BuiltinPortfolio(*game, portfolio, Player::kP1);
  config.p2 = BuiltinPortfolio(*game, portfolio, Player::kP2);
  config.values = {ParseValueMode(abd.values), abd.samples, flags.seed};
  config.cfr.iterations = flags.iterations;
  auto resolver = std::make_shared<Resolver>(game, config);
  MatchStats stats;
  if (abd.exact_ev) {
    CompositeResult composite = ExtractContinualStrategy(*resolver);
    stats = EvaluateExact(*game, composite.strategy, *opponent);
    stats.player = "abd";
    stats.seconds += composite.seconds;
  } else {
    stats = PlayMatch(
        *game, [&] { return std::make_unique<AbdAgent>(resolver); },
        *opponent, abd.episodes, flags.seed, abd.threads);
  }
  CsvTable table{{"player", "opponent", "episodes", "mean", "ci95",
                  "game_value", "gain", "seconds"},
                 {{stats.player, opponent->Name(),
                   std::to_string(stats.episodes), FormatMetric(stats.mean),
                   FormatMetric(stats.ci95), FormatMetric(stats.game_value),
                   FormatMetric(stats.gain), FormatSeconds(stats.seconds)}}};
  Emit(table, flags.out);
  return 0;
}

int RunExp(const std::string& id, const std::string& config_path,
           uint64_t seed, bool seed_given, const std::string& out,
           int threads) {
  ExperimentSpec spec;
  if (!config_path.empty()) spec = LoadExperimentConfig(config_path);
  if (!id.empty()) {
    if (!spec.id.empty() && spec.id != id) {
      throw InvalidArgument("--id " + id + " conflicts with config id " +
                            spec.id);
    }
    spec.id = id;
  }
  if (seed_given) spec.seed = seed;
  if (threads > 0) spec.threads = threads;
  spec.out_dir = out;
  CsvTable table = RunExperiment(spec);
  if (out.empty()) WriteCsv(std::cout, table);
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Opponent modeling and adaptation in two-player games"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  std::string strategy_out;
  CLI::App* solve = app.add_subcommand("solve", "Equilibrium by CFR+");
  AddCommon(solve, solve_flags);
  solve->add_option("--strategy-out", strategy_out,
                    "Write the P1 average strategy here");

  CommonFlags br_flags;
  CLI::App* br = app.add_subcommand("br", "Best response to an opponent");
  AddCommon(br, br_flags);
  br->add_option("--opponent", br_flags.opponent, "Opponent spec");

  CommonFlags rnr_flags;
  std::vector<double> p_list;
  CLI::App* rnr = app.add_subcommand("rnr", "Restricted Nash responses");
  AddCommon(rnr, rnr_flags);
  rnr->add_option("--opponent", rnr_flags.opponent, "Opponent spec");
  rnr->add_option("--p", p_list, "Model trust (default 0, 0.1, ..., 1)")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));

  CommonFlags abd_flags;
  AbdFlags abd;
  CLI::App* abd_cmd = app.add_subcommand("abd", "Adapt beyond depth limit");
  AddCommon(abd_cmd, abd_flags);
  abd_cmd->add_option("--opponent", abd_flags.opponent, "Opponent spec");
  abd_cmd->add_option("--p", abd.p, "Model trust")->check(CLI::Range(0.0, 1.0));
  abd_cmd->add_option("--depth", abd.depth, "Depth limit")
      ->check(CLI::PositiveNumber);
  abd_cmd->add_option("--portfolio", abd.portfolio,
                      "avoid4, parity3 or leduc2");
  abd_cmd->add_option("--values", abd.values, "exact or sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  abd_cmd->add_option("--samples", abd.samples, "Rollouts per history")
      ->check(CLI::PositiveNumber);
  abd_cmd->add_option("--episodes", abd.episodes, "Simulated episodes")
      ->check(CLI::PositiveNumber);
  abd_cmd->add_flag("--exact-ev", abd.exact_ev,
                    "Exact expectation instead of simulation");
  abd_cmd->add_option("--threads", abd.threads, "Worker threads");

  std::string exp_id, exp_config, exp_out;
  uint64_t exp_seed = 1;
  int exp_threads = 0;
  CLI::App* exp = app.add_subcommand("exp", "Run an experiment");
  exp->add_option("--id", exp_id, "Experiment id")
      ->check(CLI::IsMember(ExperimentIds()));
  exp->add_option("--config", exp_config, "Experiment config file");
  CLI::Option* seed_opt = exp->add_option("--seed", exp_seed, "Master seed");
  exp->add_option("--out", exp_out, "Output directory");
  exp->add_option("--threads", exp_threads, "Worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return RunSolve(solve_flags, strategy_out);
    if (br->parsed()) return RunBr(br_flags);
    if (rnr->parsed()) return RunRnr(rnr_flags, p_list);
    if (abd_cmd->parsed()) return RunAbd(abd_flags, abd);
    if (exp->parsed()) {
      if (exp_id.empty() && exp_config.empty()) {
        throw InvalidArgument("exp needs --id or --config");
      }
      return RunExp(exp_id, exp_config, exp_seed, seed_opt->count() > 0,
                    exp_out, exp_threads);
    }
  } catch (const AbdError& e) {
    std::cerr << "abdsolve: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace
}  // namespace abd

int main(int argc, char** argv) { return abd::Main(argc, argv); }
