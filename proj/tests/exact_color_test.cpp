#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "twoblock/error.hpp"
#include "twoblock/exact_color.hpp"
#include "twoblock/harness.hpp"

using namespace twoblock;

namespace {

UGraph complete(int n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) e.push_back({a, b});
  }
  return UGraph::build(n, e);
}

UGraph cycle(int n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) e.push_back({a, (a + 1) % n});
  return UGraph::build(n, e);
}

UGraph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return UGraph::build(10, e);
}

}  // namespace

TEST(Chromatic, SmallFamilies) {
  EXPECT_EQ(chromatic_number(complete(5)).chi, 5);
  EXPECT_EQ(chromatic_number(cycle(5)).chi, 3);
  EXPECT_EQ(chromatic_number(cycle(6)).chi, 2);
  EXPECT_EQ(chromatic_number(petersen()).chi, 3);
  EXPECT_EQ(chromatic_number(UGraph::build(3, std::vector<Edge>{})).chi, 1);
  EXPECT_EQ(chromatic_number(underlying_graph(figure1_tournament())).chi, 5);
}

TEST(Chromatic, WitnessIsProper) {
  const UGraph p = petersen();
  const ChromaticResult r = chromatic_number(p);
  EXPECT_TRUE(is_proper_coloring(p, r.witness));
  EXPECT_EQ(r.witness.palette_size, 3);
}

TEST(KColorable, ThresholdOnPetersen) {
  EXPECT_FALSE(k_colorable(petersen(), 2).has_value());
  const auto c = k_colorable(petersen(), 3);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_proper_coloring(petersen(), *c));
}

TEST(KColorable, CapIsEnforced) {
  SearchConfig cfg;
  cfg.chromatic_cap = 4;
  try {
    k_colorable(petersen(), 3, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Chromatic, AgreesWithBacktrackingOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Digraph d = oracle::from_code(n, rng() & rng());
    const UGraph g = underlying_graph(d);
    const ChromaticResult r = chromatic_number(g);
    EXPECT_EQ(r.chi, oracle::chromatic_number(d));
    EXPECT_TRUE(oracle::proper(d, r.witness.colors));
  }
}

TEST(Degeneracy, Examples) {
  EXPECT_EQ(degeneracy(complete(5)).bound, 4);
  EXPECT_EQ(degeneracy(cycle(7)).bound, 2);
  const UGraph path = UGraph::build(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(degeneracy(path).bound, 1);
  EXPECT_EQ(degeneracy(petersen()).bound, 3);
}

TEST(Degeneracy, OrderReplaysAndGreedyStaysWithinBound) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Digraph d = oracle::from_code(n, rng());
    const UGraph g = underlying_graph(d);
    const EliminationOrder e = degeneracy(g);
    EXPECT_TRUE(is_valid_elimination(g, e));
    EXPECT_EQ(oracle::back_degree(d, e.order), *replay_elimination(g, e.order));
    const Coloring c = greedy_color_by_order(g, e);
    EXPECT_TRUE(oracle::proper(d, c.colors));
    EXPECT_LE(oracle::distinct(c.colors), e.bound + 1);
  }
}

TEST(Replay, RejectsNonPermutations) {
  const UGraph g = cycle(4);
  EXPECT_FALSE(replay_elimination(g, {0, 1, 2}).has_value());
  EXPECT_FALSE(replay_elimination(g, {0, 1, 1, 3}).has_value());
  EXPECT_EQ(replay_elimination(g, {0, 1, 2, 3}), 2);
  EXPECT_FALSE(is_valid_elimination(g, EliminationOrder{{0, 1, 2, 3}, 1}));
}

TEST(Compacted, RelabelsByFirstAppearance) {
  const Coloring c = compacted(Coloring{{7, 3, 7, 9}, 10});
  EXPECT_EQ(c.colors, (std::vector<int>{0, 1, 0, 2}));
  EXPECT_EQ(c.palette_size, 3);
}

TEST(ProperColoring, DetectsConflicts) {
  const UGraph g = cycle(3);
  EXPECT_FALSE(is_proper_coloring(g, Coloring{{0, 1, 1}, 2}));
  EXPECT_TRUE(is_proper_coloring(g, Coloring{{0, 1, 2}, 3}));
  EXPECT_FALSE(is_proper_coloring(g, Coloring{{0, 1, 2}, 2}));
}
