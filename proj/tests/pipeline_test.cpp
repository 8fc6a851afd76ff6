#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "twoblock/error.hpp"
#include "twoblock/harness.hpp"
#include "twoblock/pipeline.hpp"

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

Digraph from_cycles(int n, const std::vector<DiCycle>& cycles, const std::vector<Arc>& extra = {}) {
  std::vector<Arc> arcs = extra;
  for (const DiCycle& c : cycles) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      arcs.push_back({c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]});
    }
  }
  return Digraph::build(n, arcs);
}

ContractionTrace trace_of(const Digraph& d, int k, int ell) {
  TraceOutcome r = build_contraction_trace(d, k, ell);
  EXPECT_TRUE(std::holds_alternative<ContractionTrace>(r));
  return std::get<ContractionTrace>(r);
}

// C0 = 0 1 2 3 and C1 = 2 4 5 6 hanging at 2.
const std::vector<DiCycle> kTwoCycles{DiCycle{{0, 1, 2, 3}}, DiCycle{{2, 4, 5, 6}}};

}  // namespace

TEST(Trace, HexagonContractsOnceForKTwo) {
  const Digraph c6 = oracle::directed_cycle(6);
  const ContractionTrace t = trace_of(c6, 2, 1);
  EXPECT_EQ(t.step_count(), 1);
  EXPECT_EQ(t.lengths(), (std::vector<int>{6}));
  EXPECT_EQ(t.final_digraph.vertex_count(), 1);
  EXPECT_EQ(t.preimage_class(0), (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(validate_trace(t, c6).ok());
}

TEST(Trace, ColourableInputNeedsNoContraction) {
  const ContractionTrace t = trace_of(oracle::directed_cycle(6), 3, 1);
  EXPECT_EQ(t.step_count(), 0);
  EXPECT_LE(t.final_coloring.palette_size, 3);

  const Digraph fig = figure1_tournament();
  const ContractionTrace f = trace_of(fig, 4, 1);
  EXPECT_EQ(f.step_count(), 0);
  EXPECT_EQ(f.final_coloring.palette_size, 5);
  EXPECT_TRUE(validate_trace(f, fig).ok());
  EXPECT_TRUE(std::holds_alternative<Singleton>(extract_cycle_tree(f, 3)));
}

TEST(Trace, Preconditions) {
  const Digraph c5 = oracle::directed_cycle(5);
  EXPECT_EQ(kind_of([&] { build_contraction_trace(c5, 1, 1); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([&] { build_contraction_trace(c5, 2, 3); }), ErrorKind::PreconditionViolated);
  const Digraph path = Digraph::build(3, std::vector<Arc>{{0, 1}, {1, 2}});
  EXPECT_EQ(kind_of([&] { build_contraction_trace(path, 2, 1); }), ErrorKind::NotStrong);
}

TEST(Trace, ScreenReturnsCertificate) {
  const Digraph d = Digraph::build(5, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  const TraceOutcome r = build_contraction_trace(d, 2, 1);
  ASSERT_TRUE(std::holds_alternative<TwoBlockCertificate>(r));
  EXPECT_TRUE(verify_certificate(d, std::get<TwoBlockCertificate>(r), 2, 1));
}

TEST(Trace, TamperingIsDetected) {
  const Digraph c6 = oracle::directed_cycle(6);
  ContractionTrace t = trace_of(c6, 2, 1);
  ContractionTrace bad_cycle = t;
  bad_cycle.steps[0].cycle.vertices = {0, 2, 4};
  EXPECT_FALSE(validate_trace(bad_cycle, c6).ok());

  ContractionTrace wrong_input = t;
  EXPECT_FALSE(validate_trace(wrong_input, oracle::directed_cycle(7)).ok());

  ContractionTrace colour = trace_of(oracle::directed_cycle(6), 3, 1);
  colour.final_coloring.colors.assign(6, 0);
  EXPECT_FALSE(validate_trace(colour, c6).ok());
}

TEST(Uncontract, LiftedCertificatesVerify) {
  // Contract the longest cycle of random strong digraphs, find a certificate
  // in the contraction and carry it back.
  int lifted = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const Digraph d = random_strong_digraph(n, 0.15, seed);
    const DiCycle c = longest_cycle(d);
    if (c.length() == n) continue;
    const Contraction con = contract(d, c.vertices);
    for (int k = 1; k <= 3; ++k) {
      for (int ell = 1; ell <= k; ++ell) {
        const DetectionResult r = find_two_block_cycle(con.digraph, k, ell);
        if (!found(r)) continue;
        const auto& cert = std::get<TwoBlockCertificate>(r);
        const TwoBlockCertificate up = uncontract_certificate(d, c, con.preimage, cert);
        EXPECT_TRUE(verify_certificate(d, up, k, ell)) << "seed " << seed;
        ++lifted;
      }
    }
  }
  EXPECT_GT(lifted, 40);
}

TEST(ExtractTree, SingleCycleClass) {
  const ContractionTrace t = trace_of(oracle::directed_cycle(6), 2, 1);
  const ClassTree ct = extract_cycle_tree(t, 0);
  ASSERT_TRUE(std::holds_alternative<CycleTree>(ct));
  const CycleTree& tree = std::get<CycleTree>(ct);
  EXPECT_EQ(tree.cycle_count(), 1);
  EXPECT_EQ(tree.vertices().size(), 6u);
  EXPECT_TRUE(validate_cycle_tree(oracle::directed_cycle(6), t.preimage_class(0), tree, t.lengths(), 2).ok());
  EXPECT_EQ(kind_of([&] { extract_cycle_tree(t, 5); }), ErrorKind::VertexOutOfRange);
}

TEST(ExtractTree, TwoLevels) {
  // Two triangles sharing vertex 2: contracting both leaves one vertex.
  const Digraph d = from_cycles(5, {DiCycle{{0, 1, 2}}, DiCycle{{2, 3, 4}}});
  const ContractionTrace t = trace_of(d, 2, 1);
  ASSERT_EQ(t.step_count(), 2);
  const ClassTree ct = extract_cycle_tree(t, 0);
  ASSERT_TRUE(std::holds_alternative<CycleTree>(ct));
  const CycleTree& tree = std::get<CycleTree>(ct);
  EXPECT_EQ(tree.cycle_count(), 2);
  EXPECT_EQ(tree.vertices(), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(validate_cycle_tree(d, t.preimage_class(0), tree, t.lengths(), 2).ok());
}

TEST(ExtractTree, AttachMismatch) {
  // Triangle 0 1 2 plus 0 -> 3 -> 1: after contracting the triangle the digon
  // through 3 enters and leaves it at different vertices.
  const Digraph d0 = from_cycles(4, {DiCycle{{0, 1, 2}}}, {{0, 3}, {3, 1}});
  const DiCycle c0{{0, 1, 2}};
  const Contraction first = contract(d0, c0.vertices);
  const Vertex vc = first.preimage.contracted;
  const Vertex three = first.preimage.target[3];
  const DiCycle c1{{vc, three}};
  const Contraction second = contract(first.digraph, c1.vertices);

  ContractionTrace t;
  t.k = 2;
  t.steps.push_back({d0, c0, first.preimage, true});
  t.steps.push_back({first.digraph, c1, second.preimage, true});
  t.final_digraph = second.digraph;
  t.final_coloring = Coloring{{0}, 1};
  EXPECT_EQ(kind_of([&] { extract_cycle_tree(t, 0); }), ErrorKind::AttachMismatch);
}

TEST(Phi, Labels) {
  const CycleTree tree = CycleTree::build(kTwoCycles);
  const Digraph f = from_cycles(7, kTwoCycles);
  const PhiLabels l3 = phi_labeling(f, tree, 3);
  // Only 6 is within one arc of the parent vertex 2 along C1.
  EXPECT_EQ(l3.label, (std::vector<int>{0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(l3.home, (std::vector<int>{0, 0, 0, 0, 1, 1, 1}));
  const PhiLabels l4 = phi_labeling(f, tree, 4);
  EXPECT_EQ(l4.label, (std::vector<int>{0, 0, 0, 0, 0, 1, 1}));
  const PhiLabels l1 = phi_labeling(f, tree, 1);
  EXPECT_EQ(l1.label, std::vector<int>(7, 0));
}

TEST(Split, LabelCrossingExternalArcGoesToF2) {
  const CycleTree tree = CycleTree::build(kTwoCycles);
  const Digraph f = from_cycles(7, kTwoCycles, {{6, 3}, {5, 1}, {0, 2}});
  const PhiLabels labels = phi_labeling(f, tree, 3);
  EXPECT_TRUE(is_external_arc(tree, {6, 3}));
  EXPECT_FALSE(is_external_arc(tree, {0, 2}));
  const ArcSplit s = split_arcs(f, tree, labels);
  EXPECT_EQ(s.f2_arcs, (std::vector<Arc>{{6, 3}}));
  EXPECT_EQ(s.f1_arcs.size() + s.f2_arcs.size(), f.arc_count());
}

TEST(Structure, TreeAloneIsClean) {
  const CycleTree tree = CycleTree::build(kTwoCycles);
  const Digraph f = from_cycles(7, kTwoCycles);
  for (int ell = 1; ell <= 3; ++ell) {
    const ArcSplit s = split_arcs(f, tree, phi_labeling(f, tree, ell));
    EXPECT_TRUE(check_structure(f, tree, s, 3, ell).ok());
  }
}

TEST(Structure, InjectedViolations) {
  const CycleTree tree = CycleTree::build(kTwoCycles);
  // An external arc with ell = 1.
  const Digraph f = from_cycles(7, kTwoCycles, {{4, 1}});
  const ArcSplit s = split_arcs(f, tree, phi_labeling(f, tree, 1));
  EXPECT_FALSE(check_structure(f, tree, s, 3, 1).ok());
  EXPECT_EQ(kind_of([&] { validate_structure(f, tree, s, 3, 1); }), ErrorKind::StructuralViolation);
  // 4 -> 1 closes a long cycle 1 2 4: the tree path from 1 back to 4 is too
  // long for ell = 2.
  const ArcSplit s2 = split_arcs(f, tree, phi_labeling(f, tree, 2));
  EXPECT_FALSE(check_structure(f, tree, s2, 3, 2).ok());
}

TEST(OrderF1, PeelingAndPerCycleOrdersMeetTheBound) {
  const CycleTree tree = CycleTree::build(kTwoCycles);
  // The chord 0 -> 2 gives a c(2, 1) but no c(3, 1).
  const Digraph f = from_cycles(7, kTwoCycles, {{0, 2}});
  for (int k = 3; k <= 4; ++k) {
    const EliminationOrder peel = order_F1(f, tree, k, 1);
    EXPECT_LE(peel.bound, k);
    EXPECT_EQ(oracle::back_degree(f, peel.order), *replay_elimination(underlying_graph(f), peel.order));
    EXPECT_LE(oracle::back_degree(f, peel.order), k);
    const EliminationOrder per = cycle_by_cycle_order_F1(f, tree, k, 1);
    EXPECT_EQ(per.order.size(), 7u);
    EXPECT_LE(oracle::back_degree(f, per.order), k);
  }
}

TEST(ColorF, Hexagon) {
  const Digraph c6 = oracle::directed_cycle(6);
  const CycleTree tree = CycleTree::build({DiCycle{{0, 1, 2, 3, 4, 5}}});
  const ClassColoring r = color_F(c6, tree, 2, 1);
  EXPECT_TRUE(oracle::proper(c6, r.coloring.colors));
  EXPECT_LE(r.coloring.palette_size, 2 * (2 + 2 * 1 - 1));
  EXPECT_EQ(r.coloring.palette_size, 2);
  const CycleTree partial = CycleTree::build({DiCycle{{0, 1, 2}}});
  EXPECT_EQ(kind_of([&] { color_F(c6, partial, 2, 1); }), ErrorKind::PreconditionViolated);
}

TEST(Pipeline, SmallExamples) {
  const Digraph c6 = oracle::directed_cycle(6);
  const auto r = run_pipeline(c6, 2, 1);
  ASSERT_TRUE(std::holds_alternative<PipelineResult>(r));
  const auto& res = std::get<PipelineResult>(r);
  EXPECT_TRUE(oracle::proper(c6, res.coloring.colors));
  EXPECT_EQ(res.palette_bound, 2 * 1 * 3);
  EXPECT_EQ(res.classes.size(), 1u);

  const auto fig = color_strong_digraph(figure1_tournament(), 4, 1);
  ASSERT_TRUE(std::holds_alternative<Coloring>(fig));
  EXPECT_EQ(std::get<Coloring>(fig).palette_size, 5);

  EXPECT_EQ(kind_of([] { color_strong_digraph(Digraph::build(2, std::vector<Arc>{{0, 1}}), 2, 1); }),
            ErrorKind::NotStrong);
  EXPECT_EQ(kind_of([&] { color_strong_digraph(c6, 1, 1); }), ErrorKind::PreconditionViolated);
}

TEST(Pipeline, RandomCactusCorpus) {
  int multi = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int k = 2 + static_cast<int>(seed % 3);
    const int ell = 1 + static_cast<int>(seed / 3 % k);
    const int n = 6 + static_cast<int>(seed % 7);
    const Digraph d = random_cycle_tree_ckl_free(n, k, ell, 2 * k - 2, seed);
    ASSERT_TRUE(oracle::is_strong(d));
    const auto r = run_pipeline(d, k, ell);
    ASSERT_TRUE(std::holds_alternative<PipelineResult>(r)) << "seed " << seed;
    const auto& res = std::get<PipelineResult>(r);
    EXPECT_TRUE(oracle::proper(d, res.coloring.colors));
    EXPECT_LE(oracle::distinct(res.coloring.colors), strong_palette_bound(k, ell));
    for (const auto& c : res.classes) multi += c.cycle_count > 1 ? 1 : 0;
  }
  EXPECT_GT(multi, 0);
}

TEST(Pipeline, LabelCrossingArcsAreColouredApart) {
  // Seeds whose cactus has an external arc between differently labelled ends.
  const SearchConfig cfg = default_config().with_cap(14);
  struct Case {
    int n, k, min_cycle;
    std::uint64_t seed;
  };
  for (const Case& c : {Case{10, 3, 4, 85}, Case{12, 4, 6, 162}}) {
    const Digraph d = random_cycle_tree_ckl_free(c.n, c.k, c.k, c.min_cycle, c.seed, 1 << 30, cfg);
    const auto r = run_pipeline(d, c.k, c.k, cfg);
    ASSERT_TRUE(std::holds_alternative<PipelineResult>(r));
    const auto& res = std::get<PipelineResult>(r);
    std::size_t f2 = 0;
    for (const auto& cls : res.classes) f2 += cls.result.f2_arcs;
    EXPECT_GT(f2, 0u);
    EXPECT_TRUE(oracle::proper(d, res.coloring.colors));
    EXPECT_LE(res.coloring.palette_size, strong_palette_bound(c.k, c.k));
  }
}
