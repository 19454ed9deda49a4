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

#include "abd/harness/experiments.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abd/agent/composite.h"
#include "abd/agent/match.h"
#include "abd/agent/resolver.h"
#include "abd/efg/parallel.h"
#include "abd/efg/random.h"
#include "abd/efg/strategy_io.h"
#include "abd/games/battleships.h"
#include "abd/games/scripted.h"
#include "abd/robust/rnr.h"
#include "abd/solver/metrics.h"

namespace abd {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void RequireClose(double in_memory, double reloaded, const std::string& what) {
  if (!(std::fabs(in_memory - reloaded) <= kRoundTripTolerance)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << what << ": serialized strategy evaluates to " << reloaded
        << ", in memory " << in_memory;
    throw AbdError(msg.str());
  }
}

std::string FileName(std::string name) {
  for (char& c : name) {
    if (c == ':' || c == '=' || c == '/' || c == ' ') c = '_';
  }
  return name;
}

GamePtr GameOr(const ExperimentSpec& spec, const GameConfig& fallback) {
  return BuildGame(spec.game_set ? spec.game : fallback);
}

GameConfig BattleshipsDefaults(int width, int height, const std::string& ships) {
  GameConfig c;
  c.game = "battleships";
  c.battleships.width = width;
  c.battleships.height = height;
  c.battleships.ships = ParseShips(ships);
  return c;
}

GameConfig LeducDefaults() {
  GameConfig c;
  c.game = "leduc";
  return c;
}

template <typename T>
T Or(const std::optional<T>& value, T fallback) {
  return value.has_value() ? *value : fallback;
}

ValueSource ValuesFor(int samples, uint64_t seed) {
  if (samples <= 0) return {};
  return {ValueMode::kSampled, samples, seed};
}

// Continual depth-limited best response: the fixed opponent is exact up to
// the depth limit and rational beyond it.
AgentConfig CdbrConfig(PolicyPtr opponent, int depth, int iterations) {
  AgentConfig c;
  c.p = 1.0;
  c.depth = {depth};
  c.fixed_opponent = std::move(opponent);
  c.leaf_mode = LeafMode::kRational;
  c.cfr.iterations = iterations;
  return c;
}

AgentConfig AbdConfig(const Game& game, const std::string& portfolio,
                      PolicyPtr opponent, double p, int depth, int iterations,
                      ValueSource values) {
  AgentConfig c;
  c.p = p;
  c.depth = {depth};
  c.fixed_opponent = std::move(opponent);
  c.p1 = BuiltinPortfolio(game, portfolio, Player::kP1);
  c.p2 = BuiltinPortfolio(game, portfolio, Player::kP2);
  c.values = values;
  c.cfr.iterations = iterations;
  return c;
}

TabularPolicy Composite(const GamePtr& game, const AgentConfig& config) {
  Resolver resolver(game, config);
  return ExtractContinualStrategy(resolver).strategy;
}

// Exact P1 utility against `opponent`, checked on the serialized form.
MatchStats ExactChecked(const std::string& out_dir, const std::string& name,
                        const Game& game, const TabularPolicy& policy,
                        const Policy& opponent) {
  TabularPolicy reloaded = PersistStrategy(out_dir, name, game, policy);
  MatchStats direct = EvaluateExact(game, policy, opponent);
  MatchStats stats = EvaluateExact(game, reloaded, opponent);
  RequireClose(direct.mean, stats.mean, name);
  return stats;
}

struct ParetoPoint {
  double gain = 0.0;
  double exploitability = 0.0;
};

ParetoPoint ScoreChecked(const std::string& out_dir, const std::string& name,
                         const Game& game, const TabularPolicy& policy,
                         const Policy& opponent) {
  TabularPolicy reloaded = PersistStrategy(out_dir, name, game, policy);
  ParetoPoint point{Gain(game, reloaded, opponent),
                    Exploitability(game, reloaded, Player::kP1)};
  RequireClose(Gain(game, policy, opponent), point.gain, name + " gain");
  RequireClose(Exploitability(game, policy, Player::kP1),
               point.exploitability, name + " exploitability");
  return point;
}

std::string PName(double p) { return FormatMetric(p); }

}  // namespace

std::vector<std::string> ExperimentHeader(const std::string& id) {
  if (id == "table1") return {"method", "depth", "value", "seconds"};
  if (id == "pareto_battleships" || id == "pareto_leduc") {
    return {"curve", "p", "gain", "exploitability", "seconds"};
  }
  if (id == "table2") return {"method", "opponent", "gain", "ci95", "seconds"};
  if (id == "table3" || id == "large_game") {
    return {"samples", "correct_fraction", "trials", "seconds"};
  }
  throw InvalidArgument("unknown experiment id '" + id + "'");
}

TabularPolicy PersistStrategy(const std::string& out_dir,
                              const std::string& name, const Game& game,
                              const TabularPolicy& policy) {
  std::string text = StrategyToString(policy, game.Id(), Player::kP1);
  std::string source = name;
  if (!out_dir.empty()) {
    std::filesystem::path dir = std::filesystem::path(out_dir) / "strategies";
    std::filesystem::create_directories(dir);
    std::filesystem::path path = dir / (FileName(name) + ".txt");
    {
      std::ofstream out(path, std::ios::binary);
      out << text;
      if (!out) throw AbdError("cannot write '" + path.string() + "'");
    }
    StoredStrategy stored = LoadStrategy(path.string());
    stored.policy.set_missing(policy.missing());
    return std::move(stored.policy);
  }
  std::istringstream in(text);
  StoredStrategy stored = ReadStrategy(in, source);
  stored.policy.set_missing(policy.missing());
  return std::move(stored.policy);
}

bool PlacementCoversTopLeft(const State& root, int action) {
  const auto* s = dynamic_cast<const BattleshipsState*>(&root);
  if (s == nullptr || !s->InPlacement()) {
    throw InvalidArgument("not a Battleships placement decision");
  }
  if (action < 0 || action >= s->NumActions()) {
    throw InvalidArgument("placement action out of range");
  }
  const auto& candidates = s->game().candidates(s->current_ship());
  return (candidates[s->legal_placements()[action]].mask & 1) != 0;
}

CsvTable RunTable1(const ExperimentSpec& spec) {
  GamePtr game = GameOr(spec, BattleshipsDefaults(2, 2, "1x1"));
  PolicyPtr opponent = MakeOpponent(
      *game, spec.game.opponent.empty() ? "corner_avoider" : spec.game.opponent);
  std::vector<int> depths = Or(spec.depths, std::vector<int>{1, 2, 3, 4});
  int iterations = Or(spec.iterations, 1000);
  int baseline_iterations = Or(spec.baseline_iterations, iterations);
  std::string portfolio = Or(spec.portfolio, std::string("avoid4"));
  ValueSource values =
      ValuesFor(Or(spec.value_samples, 0), DeriveSeed(spec.seed, 1, 0));

  CsvTable table{ExperimentHeader("table1"), {}};
  for (const char* method : {"cdbr", "abd"}) {
    for (int d : depths) {
      Stopwatch watch;
      AgentConfig config =
          std::string(method) == "cdbr"
              ? CdbrConfig(opponent, d, baseline_iterations)
              : AbdConfig(*game, portfolio, opponent, 1.0, d, iterations,
                          values);
      TabularPolicy s = Composite(game, config);
      std::string name = std::string(method) + ":d=" + std::to_string(d);
      MatchStats stats = ExactChecked(spec.out_dir, "table1:" + name, *game,
                                      s, *opponent);
      table.rows.push_back({method, std::to_string(d),
                            FormatMetric(stats.mean),
                            FormatSeconds(watch.Seconds())});
    }
  }
  return table;
}

CsvTable RunPareto(const ExperimentSpec& spec) {
  const bool leduc = spec.id == "pareto_leduc";
  GamePtr game = GameOr(spec, leduc ? LeducDefaults()
                                    : BattleshipsDefaults(2, 2, "1x1"));
  std::vector<std::string> opponents;
  if (!spec.game.opponent.empty()) {
    opponents = {spec.game.opponent};
  } else if (leduc) {
    opponents = {"uniform", "s1"};
  } else {
    opponents = {"corner_avoider"};
  }
  int depth = Or(spec.depths, std::vector<int>{leduc ? 1 : 2}).at(0);
  std::vector<double> grid =
      Or(spec.p_grid, leduc ? std::vector<double>{0.0, 0.5, 1.0}
                            : DefaultPGrid());
  int iterations = Or(spec.iterations, 1000);
  int baseline_iterations = Or(spec.baseline_iterations, 300);
  int rnr_iterations = Or(spec.rnr_iterations, 2000);
  bool baseline = Or(spec.baseline, !leduc);
  std::string portfolio =
      Or(spec.portfolio, std::string(leduc ? "leduc2" : "avoid4"));
  ValueSource values =
      ValuesFor(Or(spec.value_samples, 0), DeriveSeed(spec.seed, 1, 0));

  CsvTable table{ExperimentHeader(spec.id), {}};
  auto add = [&](const std::string& curve, double p, ParetoPoint point,
                 double seconds) {
    table.rows.push_back({curve, PName(p), FormatMetric(point.gain),
                          FormatMetric(point.exploitability),
                          FormatSeconds(seconds)});
  };
  for (const std::string& opponent_spec : opponents) {
    PolicyPtr opponent = MakeOpponent(*game, opponent_spec);
    std::string suffix = opponents.size() > 1 || leduc ? ":" + opponent_spec : "";
    CfrConfig rnr_config;
    rnr_config.iterations = rnr_iterations;
    for (double p : grid) {
      Stopwatch watch;
      RnrResult rnr = RestrictedNashResponse(game, {p, opponent}, rnr_config);
      std::string curve = "rnr" + suffix;
      add(curve, p,
          ScoreChecked(spec.out_dir, spec.id + ":" + curve + ":p=" + PName(p),
                       *game, rnr.response, *opponent),
          watch.Seconds());
    }
    for (double p : grid) {
      Stopwatch watch;
      // CFR resolves at every p: the fast path returns an arbitrary best
      // response, which need not be the least exploitable one.
      AgentConfig config = AbdConfig(*game, portfolio, opponent, p, depth,
                                     iterations, values);
      config.fast_path = false;
      TabularPolicy s = Composite(game, config);
      std::string curve = "abd" + suffix;
      add(curve, p,
          ScoreChecked(spec.out_dir, spec.id + ":" + curve + ":p=" + PName(p),
                       *game, s, *opponent),
          watch.Seconds());
    }
    if (!baseline) continue;
    for (double p : grid) {
      Stopwatch watch;
      AgentConfig config = AbdConfig(*game, portfolio, opponent, p, depth,
                                     baseline_iterations, values);
      config.leaf_mode = LeafMode::kRational;
      config.fast_path = false;
      TabularPolicy s = Composite(game, config);
      std::string curve = "cdrnr" + suffix;
      add(curve, p,
          ScoreChecked(spec.out_dir, spec.id + ":" + curve + ":p=" + PName(p),
                       *game, s, *opponent),
          watch.Seconds());
    }
  }
  return table;
}

CsvTable RunTable2(const ExperimentSpec& spec) {
  GamePtr game = GameOr(spec, LeducDefaults());
  std::vector<int> depths = Or(spec.depths, std::vector<int>{1, 2});
  int iterations = Or(spec.iterations, 1000);
  int baseline_iterations = Or(spec.baseline_iterations, iterations);
  int samples = Or(spec.value_samples, 10);
  bool exact_control = Or(spec.exact_control, true);
  int random_opponents = Or(spec.random_opponents, 500);
  std::string portfolio = Or(spec.portfolio, std::string("leduc2"));

  struct Method {
    std::string name;
    int depth;
    int kind;  // 0 CDBR, 1 ABD sampled, 2 ABD exact.
  };
  std::vector<Method> methods;
  for (int d : depths) {
    std::string ds = ":d=" + std::to_string(d);
    methods.push_back({"cdbr" + ds, d, 0});
    if (samples > 0) {
      methods.push_back({"abd" + ds + ":sampled" + std::to_string(samples), d, 1});
    }
    if (samples == 0 || exact_control) {
      methods.push_back({"abd" + ds + ":exact", d, 2});
    }
  }
  std::vector<std::string> scripted;
  if (!spec.game.opponent.empty()) {
    scripted = {spec.game.opponent};
  } else {
    scripted = {"s1", "s2", "s3", "s4"};
  }
  std::vector<std::pair<std::string, PolicyPtr>> opponents;
  for (const std::string& name : scripted) {
    opponents.push_back({name, MakeOpponent(*game, name)});
  }
  const int n_scripted = static_cast<int>(opponents.size());
  for (int k = 0; k < random_opponents; ++k) {
    opponents.push_back(
        {"random", std::make_shared<RandomSeededPolicy>(DeriveSeed(spec.seed, 2, k))});
  }

  const int n_methods = static_cast<int>(methods.size());
  const int n_opponents = static_cast<int>(opponents.size());
  std::vector<double> gain(n_methods * n_opponents, 0.0);
  std::vector<double> seconds(n_methods * n_opponents, 0.0);
  ParallelFor(
      static_cast<int64_t>(n_methods) * n_opponents,
      [&](int64_t job) {
        const int m = static_cast<int>(job / n_opponents);
        const int o = static_cast<int>(job % n_opponents);
        const Method& method = methods[m];
        const PolicyPtr& opponent = opponents[o].second;
        Stopwatch watch;
        AgentConfig config;
        if (method.kind == 0) {
          config = CdbrConfig(opponent, method.depth, baseline_iterations);
        } else {
          ValueSource values =
              method.kind == 1 ? ValuesFor(samples, DeriveSeed(spec.seed, 1, o))
                               : ValueSource{};
          config = AbdConfig(*game, portfolio, opponent, 1.0, method.depth,
                             iterations, values);
        }
        TabularPolicy s = Composite(game, config);
        // Only scripted opponents keep their strategy files; the random
        // ones are checked in memory.
        std::string name = "table2:" + method.name + ":" + opponents[o].first;
        if (o >= n_scripted) name += std::to_string(o - n_scripted);
        MatchStats stats =
            ExactChecked(o < n_scripted ? spec.out_dir : "", name, *game, s,
                         *opponent);
        gain[job] = stats.gain;
        seconds[job] = watch.Seconds();
      },
      spec.threads);

  CsvTable table{ExperimentHeader("table2"), {}};
  for (int m = 0; m < n_methods; ++m) {
    for (int o = 0; o < n_scripted; ++o) {
      const int job = m * n_opponents + o;
      table.rows.push_back({methods[m].name, opponents[o].first,
                            FormatMetric(gain[job]), FormatMetric(0.0),
                            FormatSeconds(seconds[job])});
    }
    if (random_opponents == 0) continue;
    std::vector<double> sample;
    double total = 0.0;
    for (int o = n_scripted; o < n_opponents; ++o) {
      sample.push_back(gain[m * n_opponents + o]);
      total += seconds[m * n_opponents + o];
    }
    MeanCi mc = MeanWithCi(sample);
    table.rows.push_back({methods[m].name, "random", FormatMetric(mc.mean),
                          FormatMetric(mc.ci95), FormatSeconds(total)});
  }
  return table;
}

CsvTable RunTable3(const ExperimentSpec& spec) {
  const bool large = spec.id == "large_game";
  GamePtr game = GameOr(spec, large ? BattleshipsDefaults(5, 5, "2x2,2x2")
                                    : BattleshipsDefaults(3, 3, "2x1"));
  PolicyPtr opponent = MakeOpponent(
      *game, spec.game.opponent.empty() ? "noisy:0.05" : spec.game.opponent);
  int depth = Or(spec.depths, std::vector<int>{2}).at(0);
  std::vector<int> levels =
      Or(spec.samples, large ? std::vector<int>{100}
                             : std::vector<int>{1, 2, 3, 4, 5});
  int trials = Or(spec.trials, large ? 1 : 100);
  std::string portfolio = Or(spec.portfolio, std::string("parity3"));
  auto root = game->NewRoot();
  if (root->Role() != PlayerRole::kP1) {
    throw InvalidArgument("table3 needs P1 to act at the root");
  }
  const std::vector<std::string> path = {root->PublicKey()};
  const std::string infoset = root->InfosetKey(Player::kP1);

  CsvTable table{ExperimentHeader(spec.id), {}};
  for (int n : levels) {
    Stopwatch watch;
    std::vector<char> correct(trials, 0);
    ParallelFor(
        trials,
        [&](int64_t t) {
          AgentConfig config = AbdConfig(
              *game, portfolio, opponent, 1.0, depth, 1,
              {ValueMode::kSampled, n, DeriveSeed(spec.seed, n, t)});
          Resolver resolver(game, config);
          FastResolveResult r = resolver.FastResolve(path, infoset);
          correct[t] = PlacementCoversTopLeft(*root,
                                              ArgmaxAction(r.action_values));
        },
        spec.threads);
    int hits = 0;
    for (char c : correct) hits += c;
    table.rows.push_back({std::to_string(n),
                          FormatMetric(static_cast<double>(hits) / trials),
                          std::to_string(trials),
                          FormatSeconds(watch.Seconds())});
  }
  return table;
}

CsvTable RunExperiment(const ExperimentSpec& spec) {
  ValidateExperimentSpec(spec);
  CsvTable table;
  if (spec.id == "table1") {
    table = RunTable1(spec);
  } else if (spec.id == "pareto_battleships" || spec.id == "pareto_leduc") {
    table = RunPareto(spec);
  } else if (spec.id == "table2") {
    table = RunTable2(spec);
  } else {
    table = RunTable3(spec);
  }
  if (!spec.out_dir.empty()) {
    std::filesystem::create_directories(spec.out_dir);
    SaveCsv((std::filesystem::path(spec.out_dir) / (spec.id + ".csv")).string(),
            table);
  }
  return table;
}

}  // namespace abd
