#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twoblock/config.hpp"
#include "twoblock/cycle_tree.hpp"
#include "twoblock/detection.hpp"
#include "twoblock/digraph.hpp"
#include "twoblock/exact_color.hpp"

namespace twoblock {

// D^(i), its contracted longest cycle C^(i), and the map onto D^(i+1).
struct TraceStep {
  Digraph digraph;
  DiCycle cycle;
  PreimageMap preimage;
  bool cycle_exact = true;
};

struct ContractionTrace {
  int k = 2;
  int ell = 1;
  std::vector<TraceStep> steps;
  Digraph final_digraph;    // D^(m)
  Coloring final_coloring;  // at most 2k-3 colours
  // False when a longest cycle or a freeness check came from a heuristic.
  bool verified_construction = true;

  int step_count() const { return static_cast<int>(steps.size()); }
  const Digraph& digraph_at(int j) const {
    return j == step_count() ? final_digraph : steps[j].digraph;
  }
  // The multiset L of contracted cycle lengths, in contraction order.
  std::vector<int> lengths() const;
  // φ^(m)(s) as a sorted subset of V(D).
  std::vector<Vertex> preimage_class(Vertex s) const;
};

using TraceOutcome = std::variant<ContractionTrace, TwoBlockCertificate>;

// Contracts longest cycles until the digraph is (2k-3)-colourable. Each
// D^(j) is screened by the detector; a hit is un-contracted back to D and
// returned instead. Throws NotStrong, PreconditionViolated (need k >= 2 and
// k >= ell >= 1), CapExceeded, or LemmaViolation if a level has no cycle of
// length >= 2k-2 although it is not (2k-3)-colourable.
TraceOutcome build_contraction_trace(const Digraph& d, int k, int ell,
                                     const SearchConfig& config = default_config());

// A certificate in parent/V(cycle) carried back into parent: the contracted
// vertex is replaced by a segment of `cycle`.
TwoBlockCertificate uncontract_certificate(const Digraph& parent, const DiCycle& cycle,
                                           const PreimageMap& map,
                                           const TwoBlockCertificate& cert);

struct Diagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Independent re-check of every trace invariant against D. With
// check_freeness, every D^(j) is also re-screened by the detector.
Diagnostics validate_trace(const ContractionTrace& trace, const Digraph& d,
                           const SearchConfig& config = default_config(),
                           bool check_freeness = true);

struct Singleton {
  Vertex vertex = 0;
};

using ClassTree = std::variant<CycleTree, Singleton>;

// Spanning cycle-tree of D[φ^(m)(s)], in the ids of D, obtained by replaying
// the trace backwards. Throws AttachMismatch when a tree cycle through the
// contracted vertex would re-attach at two different vertices.
ClassTree extract_cycle_tree(const ContractionTrace& trace, Vertex s);

// Checks that `tree` spans `vertices` inside `host`, that its ordering has the
// single-vertex intersection property, that it is strong, and that every
// cycle length is in `lengths` and at least 2k-2.
Diagnostics validate_cycle_tree(const Digraph& host, const std::vector<Vertex>& vertices,
                                const CycleTree& tree, const std::vector<int>& lengths, int k);

struct PhiLabels {
  std::vector<int> label;  // 0 or 1 per vertex
  std::vector<int> home;   // index of C_v per vertex
};

// label(v) = 1 iff C_v is not C_0 and |v C_v p_v| <= ell-2.
// `f` and `tree` share vertex ids and the tree spans f.
PhiLabels phi_labeling(const Digraph& f, const CycleTree& tree, int ell);

struct ArcSplit {
  std::vector<Arc> f1_arcs;
  std::vector<Arc> f2_arcs;  // external arcs whose ends have different labels
};

bool is_external_arc(const CycleTree& tree, Arc a);

ArcSplit split_arcs(const Digraph& f, const CycleTree& tree, const PhiLabels& labels);

// Checks the external-arc structure: no external arc when ell < 2, both
// backward tree paths of every external arc of length <= ell-2, every
// external arc of F1 comparable, and at most max(0, ell-2) external
// neighbours for each v in C_i - p_i inside the prefix F_i.
Diagnostics check_structure(const Digraph& f, const CycleTree& tree, const ArcSplit& split,
                            int k, int ell);

// check_structure, throwing StructuralViolation with the first witness (and a
// certificate from the detector when one can be found) on failure.
Diagnostics validate_structure(const Digraph& f, const CycleTree& tree, const ArcSplit& split,
                               int k, int ell, const SearchConfig& config = default_config());

// Deletion order for F1 with bound <= k+2ell-2 by minimum-degree peeling;
// if peeling overshoots, the per-cycle construction below is used instead.
// Throws StructuralViolation when neither meets the bound.
EliminationOrder order_F1(const Digraph& f1, const CycleTree& tree, int k, int ell,
                          const SearchConfig& config = default_config());

// Builds C_0's Hamiltonian order, then each later cycle's vertices other
// than p_i, using the Hamiltonian degeneracy order inside every cycle, and
// returns the reverse as a deletion order.
EliminationOrder cycle_by_cycle_order_F1(const Digraph& f1, const CycleTree& tree, int k, int ell,
                                         const SearchConfig& config = default_config());

struct ClassColoring {
  Coloring coloring;  // ids of f
  int f1_bound = 0;   // bound of the F1 order (0 for singletons)
  std::size_t external_arcs = 0;
  std::size_t f2_arcs = 0;
};

// ρ(v) = (ρ1(v), φ(v)) flattened and compacted: at most 2(k+2ell-1) colours.
ClassColoring color_F(const Digraph& f, const CycleTree& tree, int k, int ell,
                      const SearchConfig& config = default_config());

struct ClassReport {
  Vertex representative = 0;  // vertex of D^(m)
  std::vector<Vertex> vertices;
  int cycle_count = 0;
  ClassColoring result;
};

struct PipelineResult {
  ContractionTrace trace;
  std::vector<ClassReport> classes;
  Coloring coloring;
  int palette_bound = 0;  // 2(2k-3)(k+2ell-1)
};

using PipelineOutcome = std::variant<PipelineResult, TwoBlockCertificate>;

// The full pipeline with every intermediate validated; throws
// StructuralViolation (or AttachMismatch) on a failed invariant.
PipelineOutcome run_pipeline(const Digraph& d, int k, int ell,
                             const SearchConfig& config = default_config());

using StrongColorOutcome = std::variant<Coloring, TwoBlockCertificate>;

StrongColorOutcome color_strong_digraph(const Digraph& d, int k, int ell,
                                        const SearchConfig& config = default_config());

inline int strong_palette_bound(int k, int ell) { return 2 * (2 * k - 3) * (k + 2 * ell - 1); }

}  // namespace twoblock
