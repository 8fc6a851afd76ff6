#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "twoblock/error.hpp"
#include "twoblock/harness.hpp"

using namespace twoblock;

namespace {

Digraph permuted(const Digraph& d, const std::vector<Vertex>& perm) {
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return Digraph::build(d.vertex_count(), arcs);
}

}  // namespace

TEST(Encoding, KnownValues) {
  EXPECT_EQ(encode_adjacency(Digraph(3)), "0");
  // 2 vertices, arc 0 -> 1: bits 0100 row-major, so 4.
  EXPECT_EQ(encode_adjacency(Digraph::build(2, std::vector<Arc>{{0, 1}})), "4");
  EXPECT_EQ(encode_adjacency(Digraph::build(2, std::vector<Arc>{{1, 0}})), "2");
}

TEST(Encoding, RoundTripAndErrors) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Digraph d = random_strong_digraph(n, 0.3, rng());
    EXPECT_EQ(decode_adjacency(n, encode_adjacency(d)), d);
  }
  EXPECT_THROW(decode_adjacency(2, "zz"), Error);
  EXPECT_THROW(decode_adjacency(2, "8"), Error);    // diagonal bit
  EXPECT_THROW(decode_adjacency(2, "1f"), Error);   // too wide
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Digraph d = oracle::from_code(n, rng());
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(d), canonical_form(permuted(d, perm)));
  }
  EXPECT_NE(canonical_form(oracle::directed_cycle(4)),
            canonical_form(Digraph::build(4, std::vector<Arc>{{0, 1}, {1, 0}, {2, 3}, {3, 2}})));
  try {
    canonical_form(Digraph(8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Tournaments, Counts) {
  EXPECT_EQ(enumerate_tournaments(3).size(), 8u);
  EXPECT_EQ(enumerate_tournaments(3, true).size(), 2u);
  EXPECT_EQ(enumerate_tournaments(4, true).size(), 4u);
  EXPECT_EQ(enumerate_tournaments(5).size(), 1024u);
  EXPECT_EQ(enumerate_tournaments(5, true).size(), 12u);
  int strong_classes = 0;
  for (const Digraph& t : enumerate_tournaments(4, true)) strong_classes += oracle::is_strong(t) ? 1 : 0;
  EXPECT_EQ(strong_classes, 1);
  for (const Digraph& t : enumerate_tournaments(4)) EXPECT_TRUE(is_tournament(t));
  EXPECT_EQ(tournament_from_index(5, 37), enumerate_tournaments(5)[37]);
}

TEST(Tournaments, FigureOne) {
  const Digraph t = figure1_tournament();
  EXPECT_TRUE(is_tournament(t));
  EXPECT_TRUE(oracle::is_strong(t));
  EXPECT_EQ(oracle::chromatic_number(t), 5);
  EXPECT_FALSE(oracle::has_two_block_cycle(t, 4, 1));
  EXPECT_TRUE(oracle::has_two_block_cycle(t, 3, 2));
}

TEST(Problem1, FiveVertexSearchFindsFigureOne) {
  const Problem1Result r = search_problem1(5);
  EXPECT_EQ(r.labeled, 1024);
  const std::string target = canonical_form(figure1_tournament());
  bool seen = false;
  for (const InstanceRecord& rec : r.hits) {
    seen = seen || canonical_form(decode_adjacency(5, rec.encoding)) == target;
    EXPECT_FALSE(reverify(rec).has_value());
  }
  EXPECT_TRUE(seen);
  EXPECT_GE(r.hit_classes, 1);
  EXPECT_EQ(problem1_pairs(5), (std::vector<PairVerdict>{{4, 1, false}, {3, 2, false}}));
}

TEST(Generators, StrongFreeInstances) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const int k = 2 + static_cast<int>(seed % 3);
    const int ell = 1 + static_cast<int>(seed % k);
    const Digraph d = random_strong_ckl_free(n, k, ell, seed);
    EXPECT_EQ(d.vertex_count(), n);
    EXPECT_TRUE(oracle::is_strong(d));
    EXPECT_TRUE(oracle::is_hamiltonian(d));
    EXPECT_FALSE(oracle::has_two_block_cycle(d, k, ell));
    EXPECT_EQ(d, random_strong_ckl_free(n, k, ell, seed));
  }
}

TEST(Generators, CactusAndMinDegree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Digraph c = random_cycle_tree_ckl_free(9, 3, 2, 4, seed);
    EXPECT_TRUE(oracle::is_strong(c));
    EXPECT_FALSE(oracle::has_two_block_cycle(c, 3, 2));

    const Digraph h = random_hamiltonian_min_degree(8, 4, seed);
    EXPECT_TRUE(oracle::is_hamiltonian(h));
    const UGraph g = underlying_graph(h);
    for (Vertex v = 0; v < 8; ++v) EXPECT_GE(g.degree(v), 4);

    EXPECT_TRUE(oracle::is_strong(random_strong_digraph(7, 0.2, seed)));
  }
  EXPECT_THROW(random_strong_ckl_free(40, 2, 1, 0), Error);
}

TEST(ParallelMap, KeepsOrderAndPropagatesErrors) {
  const auto squares = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < squares.size(); ++i) EXPECT_EQ(squares[i], static_cast<int>(i * i));
  EXPECT_THROW(parallel_map<int>(20, 3,
                                 [](std::size_t i) -> int {
                                   if (i == 7) throw std::runtime_error("boom");
                                   return 0;
                                 }),
               std::runtime_error);
  EXPECT_TRUE(parallel_map<int>(0, 2, [](std::size_t) { return 1; }).empty());
}

TEST(Records, ReverifyDetectsTampering) {
  const std::vector<PairVerdict> pairs{{4, 1, false}, {3, 2, false}, {2, 1, false}};
  const InstanceRecord r = measure_instance(0, 5, figure1_tournament(), pairs);
  EXPECT_EQ(r.chi, 5);
  EXPECT_EQ(r.longest_cycle, 5);
  EXPECT_FALSE(r.verdicts[0].present);
  EXPECT_TRUE(r.verdicts[1].present);
  EXPECT_FALSE(reverify(r).has_value());

  InstanceRecord chi = r;
  chi.chi = 4;
  EXPECT_TRUE(reverify(chi).has_value());
  InstanceRecord verdict = r;
  verdict.verdicts[0].present = true;
  EXPECT_TRUE(reverify(verdict).has_value());
  InstanceRecord tag = r;
  tag.tournament = false;
  EXPECT_TRUE(reverify(tag).has_value());
}

TEST(Bondy, SmallAudit) {
  std::vector<Digraph> corpus;
  for (std::uint64_t s = 0; s < 20; ++s) corpus.push_back(random_strong_digraph(2 + s % 8, 0.2, s));
  const BondyReport r = audit_bondy(corpus, 1, default_config(), 2);
  EXPECT_EQ(r.records.size(), 20u);
  EXPECT_EQ(r.violations, 0);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(*r.records[i].chi, oracle::chromatic_number(corpus[i]));
    EXPECT_EQ(*r.records[i].longest_cycle, oracle::longest_cycle_length(corpus[i]));
  }
}

TEST(Bw, FourVertexTable) {
  const BwReport r = audit_bw_claim(4);
  EXPECT_EQ(r.labeled, 64);
  EXPECT_EQ(r.classes, 4);
  // Pairs (3,1) and (2,2) for every class.
  EXPECT_EQ(r.rows.size(), 8u);
  std::set<std::string> canon;
  for (const BwRow& row : r.rows) {
    canon.insert(row.canonical);
    const Digraph t = decode_adjacency(4, row.canonical);
    EXPECT_EQ(row.present, oracle::has_two_block_cycle(t, row.k, row.ell));
    EXPECT_EQ(row.strong, oracle::is_strong(t));
  }
  EXPECT_EQ(canon.size(), 4u);
  EXPECT_EQ(r.csv(), audit_bw_claim(4).csv());
  EXPECT_EQ(r.csv().rfind("class,canonical,strong,k,ell,present\n", 0), 0u);
  EXPECT_THROW(audit_bw_claim(3), Error);
}

TEST(Generators, PreconditionsAndChordlessCase) {
  try {
    random_strong_ckl_free(5, 1, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
  // Any chord of a directed cycle closes a c(2,1), so only the cycle survives.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Digraph d = random_strong_ckl_free(4 + static_cast<int>(seed % 6), 2, 1, seed);
    EXPECT_EQ(d.arc_count(), static_cast<std::size_t>(d.vertex_count()));
  }
}

TEST(Bondy, NamedInstances) {
  const std::vector<Digraph> corpus{oracle::directed_cycle(5), figure1_tournament()};
  const BondyReport r = audit_bondy(corpus, 0);
  EXPECT_EQ(r.violations, 0);
  EXPECT_EQ(r.records[0].chi, 3);
  EXPECT_EQ(r.records[0].longest_cycle, 5);
  EXPECT_EQ(r.records[1].chi, 5);
  EXPECT_EQ(r.records[1].longest_cycle, 5);
}

TEST(Problem1, FourVertexVerdicts) {
  const Problem1Result r = search_problem1(4);
  EXPECT_EQ(r.labeled, 64);
  EXPECT_GT(r.strong, 0);
  for (const InstanceRecord& rec : r.hits) {
    ASSERT_EQ(rec.verdicts.size(), 2u);
    const Digraph d = decode_adjacency(4, rec.encoding);
    for (const PairVerdict& p : rec.verdicts) EXPECT_EQ(p.present, oracle::has_two_block_cycle(d, p.k, p.ell));
  }
  EXPECT_THROW(search_problem1(3), Error);
}
