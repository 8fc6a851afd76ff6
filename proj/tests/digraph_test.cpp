#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "twoblock/digraph.hpp"
#include "twoblock/error.hpp"
#include "twoblock/harness.hpp"

using namespace twoblock;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Digraph, BuildFigureOne) {
  const Digraph t = figure1_tournament();
  EXPECT_EQ(t.vertex_count(), 5);
  EXPECT_EQ(t.arc_count(), 10u);
  EXPECT_TRUE(t.has_arc(3, 1));
  EXPECT_FALSE(t.has_arc(1, 3));
}

TEST(Digraph, SingleVertexAndDigon) {
  const Digraph one = Digraph::build(1, std::vector<Arc>{});
  EXPECT_EQ(one.vertex_count(), 1);
  EXPECT_EQ(one.arc_count(), 0u);
  const Digraph digon = Digraph::build(2, std::vector<Arc>{{0, 1}, {1, 0}});
  EXPECT_EQ(digon.arc_count(), 2u);
}

TEST(Digraph, RejectsInvalidArcs) {
  EXPECT_EQ(kind_of([] { Digraph::build(3, std::vector<Arc>{{1, 1}}); }), ErrorKind::LoopArc);
  EXPECT_EQ(kind_of([] { Digraph::build(3, std::vector<Arc>{{0, 1}, {0, 1}}); }), ErrorKind::DuplicateArc);
  EXPECT_EQ(kind_of([] { Digraph::build(3, std::vector<Arc>{{0, 3}}); }), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { Digraph::build(3, std::vector<Arc>{{-1, 0}}); }), ErrorKind::VertexOutOfRange);
}

TEST(Digraph, NeighbourhoodsAndMasks) {
  const Digraph d = Digraph::build(4, std::vector<Arc>{{0, 1}, {0, 2}, {3, 0}, {2, 0}});
  ASSERT_EQ(d.out_neighbors(0).size(), 2u);
  EXPECT_EQ(d.out_neighbors(0)[1], 2);
  EXPECT_EQ(d.in_neighbors(0).size(), 2u);
  EXPECT_EQ(d.out_mask(0), bit(1) | bit(2));
  EXPECT_EQ(d.in_mask(0), bit(2) | bit(3));
  EXPECT_EQ(d.all_mask(), Mask{0b1111});
}

TEST(UnderlyingGraph, Examples) {
  const UGraph digon = underlying_graph(Digraph::build(2, std::vector<Arc>{{0, 1}, {1, 0}}));
  EXPECT_EQ(digon.edge_count(), 1u);
  EXPECT_TRUE(digon.has_edge(1, 0));

  const UGraph k5 = underlying_graph(figure1_tournament());
  EXPECT_EQ(k5.edge_count(), 10u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(k5.degree(v), 4);

  const UGraph c6 = underlying_graph(oracle::directed_cycle(6));
  EXPECT_EQ(c6.edge_count(), 6u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(c6.degree(v), 2);
}

TEST(UGraph, CollapsesDuplicatesAndRejectsLoops) {
  const UGraph g = UGraph::build(3, std::vector<Edge>{{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_ANY_THROW(UGraph::build(3, std::vector<Edge>{{2, 2}}));
}

TEST(StrongComponents, Examples) {
  EXPECT_TRUE(is_strong(oracle::directed_cycle(3)));
  EXPECT_TRUE(is_strong(figure1_tournament()));
  const Digraph arc = Digraph::build(2, std::vector<Arc>{{0, 1}});
  EXPECT_FALSE(is_strong(arc));
  const auto comps = strong_components(arc);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_FALSE(is_strong(Digraph(0)));
  EXPECT_TRUE(is_strong(Digraph(1)));
}

TEST(StrongComponents, AgreesWithReachabilityOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Digraph d = oracle::from_code(n, rng());
    EXPECT_EQ(is_strong(d), oracle::is_strong(d));
    const auto reach = oracle::reachability(d);
    for (const auto& comp : strong_components(d)) {
      for (Vertex a : comp) {
        for (Vertex b : comp) EXPECT_TRUE(reach[a][b] && reach[b][a]);
      }
    }
    int covered = 0;
    for (const auto& comp : strong_components(d)) covered += static_cast<int>(comp.size());
    EXPECT_EQ(covered, n);
  }
}

TEST(Contract, WholeTriangle) {
  const std::vector<Vertex> all{0, 1, 2};
  const Contraction c = contract(oracle::directed_cycle(3), all);
  EXPECT_EQ(c.digraph.vertex_count(), 1);
  EXPECT_EQ(c.digraph.arc_count(), 0u);
  EXPECT_EQ(c.preimage.images[0], all);
}

TEST(Contract, TwoVerticesOfTriangleGiveDigon) {
  // a=0 -> b=1 -> c=2 -> a; contracting {b, c} leaves a and v_S.
  const std::vector<Vertex> s{1, 2};
  const Contraction c = contract(oracle::directed_cycle(3), s);
  ASSERT_EQ(c.digraph.vertex_count(), 2);
  EXPECT_TRUE(c.digraph.has_arc(0, 1));
  EXPECT_TRUE(c.digraph.has_arc(1, 0));
  EXPECT_EQ(c.preimage.contracted, 1);
  EXPECT_EQ(c.preimage.images[1], s);
  EXPECT_EQ(c.preimage.target[2], 1);
}

TEST(Contract, SingletonIsIsomorphism) {
  const Digraph t = figure1_tournament();
  const std::vector<Vertex> s{2};
  const Contraction c = contract(t, s);
  EXPECT_EQ(c.digraph.arc_count(), t.arc_count());
  for (const auto& img : c.preimage.images) EXPECT_EQ(img.size(), 1u);
  std::vector<Vertex> perm(5);
  for (Vertex v = 0; v < 5; ++v) perm[v] = c.preimage.target[v];
  EXPECT_EQ(relabeled(t, perm), c.digraph);
}

TEST(Contract, Errors) {
  const Digraph t = figure1_tournament();
  EXPECT_EQ(kind_of([&] { contract(t, std::vector<Vertex>{}); }), ErrorKind::EmptySet);
  EXPECT_EQ(kind_of([&] { contract(t, std::vector<Vertex>{7}); }), ErrorKind::VertexOutOfRange);
}

TEST(Contract, UnexpandAndStrongnessProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Digraph d = oracle::from_code(n, rng());
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2 == 0) s.push_back(v);
    }
    if (s.empty()) s.push_back(0);
    const Contraction c = contract(d, s);
    const PreimageMap& pm = c.preimage;
    const Vertex vs = pm.contracted;
    for (const Arc& a : c.digraph.arcs()) {
      bool ok = false;
      for (Vertex x : pm.images[a.tail]) {
        for (Vertex y : pm.images[a.head]) ok = ok || d.has_arc(x, y);
      }
      EXPECT_TRUE(ok);
      if (a.tail != vs && a.head != vs) EXPECT_TRUE(d.has_arc(pm.images[a.tail][0], pm.images[a.head][0]));
    }
    // Every arc of D with ends in different images survives.
    for (const Arc& a : d.arcs()) {
      if (pm.target[a.tail] != pm.target[a.head]) {
        EXPECT_TRUE(c.digraph.has_arc(pm.target[a.tail], pm.target[a.head]));
      }
    }
    EXPECT_LE(underlying_graph(c.digraph).edge_count(), underlying_graph(d).edge_count());
    if (is_strong(d) && is_strong(induced(d, s).digraph)) EXPECT_TRUE(is_strong(c.digraph));
  }
}

TEST(Induced, Examples) {
  const Digraph t = figure1_tournament();
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_EQ(induced(t, all).digraph, t);

  const std::vector<Vertex> first{0, 1, 2};
  const InducedSubdigraph sub = induced(t, first);
  EXPECT_EQ(sub.digraph.arcs(), (std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(sub.local[3], -1);

  EXPECT_EQ(induced(t, std::vector<Vertex>{}).digraph.vertex_count(), 0);
  EXPECT_ANY_THROW(induced(t, std::vector<Vertex>{9}));
}

TEST(CycleSegment, Examples) {
  const DiCycle c{{0, 1, 2, 3}};
  EXPECT_EQ(cycle_segment(c, 0, 2).vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(cycle_segment(c, 2, 0).vertices, (std::vector<Vertex>{2, 3, 0}));
  EXPECT_EQ(cycle_segment(c, 1, 1).length(), 0);
  EXPECT_EQ(kind_of([&] { cycle_segment(c, 0, 7); }), ErrorKind::NotOnCycle);
}

TEST(CycleSegment, LengthsSumToCycle) {
  const DiCycle c{{4, 2, 7, 1, 5, 0}};
  for (Vertex u : c.vertices) {
    for (Vertex v : c.vertices) {
      if (u == v) continue;
      EXPECT_EQ(cycle_segment(c, u, v).length() + cycle_segment(c, v, u).length(), c.length());
      EXPECT_EQ(cycle_distance(c, u, v), cycle_segment(c, u, v).length());
    }
  }
}

TEST(Paths, Checks) {
  const Digraph d = oracle::directed_cycle(4);
  EXPECT_TRUE(is_path_in(d, DiPath{{0, 1, 2}}));
  EXPECT_FALSE(is_path_in(d, DiPath{{0, 2}}));
  EXPECT_FALSE(is_path_in(d, DiPath{{0, 1, 2, 3, 0}}));
  EXPECT_TRUE(is_cycle_in(d, DiCycle{{1, 2, 3, 0}}));
  EXPECT_FALSE(is_cycle_in(d, DiCycle{{0, 1, 2}}));
  EXPECT_EQ(concat(DiPath{{0, 1}}, DiPath{{1, 2, 3}}).vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(normalized(DiCycle{{2, 3, 0, 1}}).vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  const DiCycle c{{5, 3, 8}};
  EXPECT_EQ(c.successor(8), 5);
  EXPECT_EQ(c.predecessor(5), 8);
  EXPECT_EQ(c.position(3), 1);
  EXPECT_EQ(c.position(4), -1);
}
