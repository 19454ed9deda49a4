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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "abd/efg/strategy_io.h"
#include "abd/games/battleships.h"
#include "abd/games/poker.h"
#include "abd/harness/csv.h"
#include "abd/harness/experiment_config.h"
#include "abd/harness/experiments.h"
#include "abd/solver/cfr.h"
#include "gtest/gtest.h"

namespace abd {
namespace {

std::string ScratchDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("abd_harness_test_" + name);
  std::filesystem::remove_all(dir);
  return dir.string();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void ExpectParseError(const std::string& text, int line,
                      const std::string& fragment) {
  try {
    ParseExperimentConfig(text, "cfg");
    FAIL() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos)
        << e.what();
  }
}

TEST(ExperimentConfigTest, ParsesOverrides) {
  ExperimentSpec spec = ParseExperimentConfig(
      "# comment\nid = table3\nseed = 9\nwidth = 4\nheight = 4\n"
      "ships = 2x1\nsamples = 1, 3\np = 0, 0.5\ntrials = 7\n"
      "exact_control = false\n",
      "cfg");
  EXPECT_EQ(spec.id, "table3");
  EXPECT_EQ(spec.seed, 9u);
  EXPECT_TRUE(spec.game_set);
  EXPECT_EQ(spec.game.battleships.width, 4);
  EXPECT_EQ(*spec.samples, (std::vector<int>{1, 3}));
  EXPECT_EQ(*spec.p_grid, (std::vector<double>{0.0, 0.5}));
  EXPECT_EQ(*spec.trials, 7);
  EXPECT_FALSE(*spec.exact_control);
  EXPECT_FALSE(spec.iterations.has_value());
}

TEST(ExperimentConfigTest, RejectsBadInput) {
  ExpectParseError("id = table1\np = 1.5\n", 2, "0 <= p <= 1");
  ExpectParseError("id = table1\n\nfrobnicate = 3\n", 3, "unknown key");
  ExpectParseError("id = table9\n", 1, "unknown experiment id");
  ExpectParseError("trials = 0\n", 1, "trials >= 1");
  ExpectParseError("depth = 1, x\n", 1, "integer");
  ExpectParseError("seed\n", 1, "key = value");
  ExpectParseError("exact_control = maybe\n", 1, "true or false");
  EXPECT_FALSE(ParseExperimentConfig("game = leduc\n", "cfg").id.size());
  EXPECT_THROW(ValidateExperimentSpec(ExperimentSpec{}), InvalidArgument);
}

TEST(CsvTest, RoundTripWithQuoting) {
  CsvTable table{{"a", "b,c", "d"},
                 {{"1", "x\"y", "line\nbreak"}, {"", "2", "3.5"}}};
  std::string text = CsvToString(table);
  EXPECT_EQ(text,
            "a,\"b,c\",d\n1,\"x\"\"y\",\"line\nbreak\"\n,2,3.5\n");
  CsvTable back = ParseCsv(text, "mem");
  EXPECT_EQ(back.header, table.header);
  EXPECT_EQ(back.rows, table.rows);
  EXPECT_EQ(CsvToString(back), text);
  EXPECT_DOUBLE_EQ(back.Number(1, "d"), 3.5);
  EXPECT_THROW(back.Number(0, "b,c"), InvalidArgument);
  CsvTable dropped = DropColumn(back, "b,c");
  EXPECT_EQ(dropped.header, (std::vector<std::string>{"a", "d"}));
  EXPECT_EQ(dropped.rows[1], (std::vector<std::string>{"", "3.5"}));
}

TEST(CsvTest, RejectsRaggedRows) {
  try {
    ParseCsv("a,b\n1,2\n3\n", "mem");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(ParseCsv("a\n\"open\n", "mem"), ParseError);
  EXPECT_THROW(ParseCsv("", "mem"), ParseError);
}

TEST(PersistTest, KuhnStrategyRoundTripIsByteIdentical) {
  auto kuhn = MakeKuhn();
  CfrConfig config;
  config.iterations = 300;
  SolveReport report = CfrSolve(*kuhn, config);
  std::string dir = ScratchDir("persist");
  TabularPolicy reloaded =
      PersistStrategy(dir, "kuhn:cfr", *kuhn, report.average[0]);
  std::string path = dir + "/strategies/kuhn_cfr.txt";
  std::string first = ReadFile(path);
  EXPECT_EQ(first, StrategyToString(report.average[0], kuhn->Id(),
                                    Player::kP1));
  SaveStrategy(dir + "/again.txt", reloaded, kuhn->Id(), Player::kP1);
  EXPECT_EQ(ReadFile(dir + "/again.txt"), first);
}

TEST(PlacementTest, TopLeftCoverage) {
  BattleshipsConfig config;
  config.width = 3;
  config.height = 2;
  config.ships = ParseShips("2x1");
  auto game = MakeBattleships(config);
  auto root = game->NewRoot();
  int covering = 0;
  for (int a = 0; a < root->NumActions(); ++a) {
    bool covers = PlacementCoversTopLeft(*root, a);
    covering += covers;
    EXPECT_EQ(covers, root->ActionLabel(a).rfind("at_x0y0", 0) == 0)
        << root->ActionLabel(a);
  }
  // One horizontal and one vertical placement through the corner.
  EXPECT_EQ(covering, 2);
  EXPECT_THROW(PlacementCoversTopLeft(*root, root->NumActions()),
               InvalidArgument);
}

TEST(ExperimentTest, Table1RowsAndValues) {
  ExperimentSpec spec;
  spec.id = "table1";
  spec.out_dir = ScratchDir("table1");
  CsvTable table = RunExperiment(spec);
  ASSERT_EQ(table.rows.size(), 8u);
  EXPECT_EQ(table.header, ExperimentHeader("table1"));
  const double cdbr[] = {0.25, 0.25, 1.0, 1.0};
  for (size_t r = 0; r < 8; ++r) {
    bool abd = table.At(r, "method") == "abd";
    double expected = abd ? 1.0 : cdbr[r % 4];
    EXPECT_NEAR(table.Number(r, "value"), expected, 0.01) << r;
    EXPECT_GT(table.Number(r, "seconds"), 0.0);
  }
  CsvTable disk = LoadCsv(spec.out_dir + "/table1.csv");
  EXPECT_EQ(CsvToString(disk), CsvToString(table));
  EXPECT_TRUE(std::filesystem::exists(spec.out_dir +
                                      "/strategies/table1_abd_d_2.txt"));
}

TEST(ExperimentTest, Table3IsReproducible) {
  ExperimentSpec spec;
  spec.id = "table3";
  spec.game_set = true;
  spec.game.battleships.width = 2;
  spec.game.battleships.height = 2;
  spec.game.battleships.ships = ParseShips("2x1");
  spec.samples = std::vector<int>{1, 2};
  spec.trials = 6;
  CsvTable a = RunExperiment(spec);
  CsvTable b = RunExperiment(spec);
  ASSERT_EQ(a.rows.size(), 2u);
  EXPECT_EQ(a.At(0, "trials"), "6");
  EXPECT_EQ(CsvToString(DropColumn(a, "seconds")),
            CsvToString(DropColumn(b, "seconds")));
  for (size_t r = 0; r < a.rows.size(); ++r) {
    double f = a.Number(r, "correct_fraction");
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
  }
}

TEST(ExperimentTest, Table2SmallRunHasSchema) {
  ExperimentSpec spec;
  spec.id = "table2";
  spec.depths = std::vector<int>{1};
  spec.random_opponents = 2;
  spec.iterations = 50;
  spec.game.opponent = "s2";
  CsvTable table = RunExperiment(spec);
  EXPECT_EQ(table.header, ExperimentHeader("table2"));
  // cdbr, abd sampled, abd exact; each vs s2 and the random mean.
  ASSERT_EQ(table.rows.size(), 6u);
  EXPECT_EQ(table.At(0, "method"), "cdbr:d=1");
  EXPECT_EQ(table.At(2, "method"), "abd:d=1:sampled10");
  EXPECT_EQ(table.At(3, "opponent"), "random");
  EXPECT_EQ(table.At(4, "method"), "abd:d=1:exact");
}

}  // namespace
}  // namespace abd
