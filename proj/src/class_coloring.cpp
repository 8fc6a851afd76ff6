#include <algorithm>
#include <set>
#include <string>

#include "twoblock/error.hpp"
#include "twoblock/ham_degeneracy.hpp"
#include "twoblock/pipeline.hpp"

namespace twoblock {

PhiLabels phi_labeling(const Digraph& f, const CycleTree& tree, int ell) {
  const int n = f.vertex_count();
  PhiLabels out;
  out.label.assign(n, 0);
  out.home.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    const int h = tree.home_cycle(v);
    out.home[v] = h;
    if (h != 0 && cycle_distance(tree.cycle(h), v, tree.parent_vertex(h)) <= ell - 2) {
      out.label[v] = 1;
    }
  }
  return out;
}

bool is_external_arc(const CycleTree& tree, Arc a) { return !tree.share_cycle(a.tail, a.head); }

ArcSplit split_arcs(const Digraph& f, const CycleTree& tree, const PhiLabels& labels) {
  ArcSplit out;
  for (const Arc& a : f.arcs()) {
    if (is_external_arc(tree, a) && labels.label[a.tail] != labels.label[a.head]) {
      out.f2_arcs.push_back(a);
    } else {
      out.f1_arcs.push_back(a);
    }
  }
  return out;
}

namespace {

std::string arc_text(Arc a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

}  // namespace

Diagnostics check_structure(const Digraph& f, const CycleTree& tree, const ArcSplit& split,
                            int k, int ell) {
  (void)k;
  Diagnostics diag;
  auto fail = [&](const std::string& msg) { diag.violations.push_back(msg); };

  std::vector<Arc> external;
  for (const Arc& a : f.arcs()) {
    if (is_external_arc(tree, a)) external.push_back(a);
  }
  if (!external.empty() && ell < 2) fail("external arc " + arc_text(external.front()) + " with ell < 2");

  for (const Arc& a : external) {
    const CycleTree::Route r = tree.route(a.tail, a.head);
    const Vertex u = r.junctions.front();
    const Vertex v = r.junctions.back();
    const int back_x = tree.tree_path(v, a.tail).length();
    const int back_y = tree.tree_path(a.head, u).length();
    if (back_x > ell - 2) {
      fail("external arc " + arc_text(a) + ": |vTx| = " + std::to_string(back_x) + " with v = " +
           std::to_string(v));
    }
    if (back_y > ell - 2) {
      fail("external arc " + arc_text(a) + ": |yTu| = " + std::to_string(back_y) + " with u = " +
           std::to_string(u));
    }
  }

  std::vector<std::vector<Vertex>> ext_nbrs(f.vertex_count());
  for (const Arc& a : split.f1_arcs) {
    if (!is_external_arc(tree, a)) continue;
    const int hu = tree.home_cycle(a.tail);
    const int hv = tree.home_cycle(a.head);
    if (!tree.is_cycle_ancestor(hu, hv) && !tree.is_cycle_ancestor(hv, hu)) {
      fail("external F1 arc " + arc_text(a) + " is not comparable");
    }
    ext_nbrs[a.tail].push_back(a.head);
    ext_nbrs[a.head].push_back(a.tail);
  }
  const int limit = std::max(0, ell - 2);
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    const int i = tree.home_cycle(v);
    if (i == 0) continue;
    std::set<Vertex> inside;
    for (Vertex w : ext_nbrs[v]) {
      if (tree.home_cycle(w) <= i) inside.insert(w);
    }
    if (static_cast<int>(inside.size()) > limit) {
      fail("vertex " + std::to_string(v) + " of cycle " + std::to_string(i) + " has " +
           std::to_string(inside.size()) + " external F1 neighbours in F_" + std::to_string(i));
    }
  }
  return diag;
}

Diagnostics validate_structure(const Digraph& f, const CycleTree& tree, const ArcSplit& split,
                               int k, int ell, const SearchConfig& config) {
  Diagnostics diag = check_structure(f, tree, split, k, ell);
  if (diag.ok()) return diag;
  std::string msg = diag.violations.front();
  SearchConfig loose = config;
  loose.strict = false;
  try {
    DetectionResult r = find_two_block_cycle(f, k, ell, loose);
    if (const auto* cert = std::get_if<TwoBlockCertificate>(&r)) {
      msg += "; c(k,ell) between " + std::to_string(cert->u) + " and " + std::to_string(cert->v);
    }
  } catch (const Error&) {
    // The witness above stands on its own.
  }
  throw Error(ErrorKind::StructuralViolation, msg);
}

EliminationOrder cycle_by_cycle_order_F1(const Digraph& f1, const CycleTree& tree, int k, int ell,
                                         const SearchConfig& config) {
  EliminationOrder out;
  for (int i = tree.cycle_count() - 1; i >= 0; --i) {
    const DiCycle& c = tree.cycle(i);
    const InducedSubdigraph sub = induced(f1, c.vertices);
    DiCycle local;
    for (Vertex v : c.vertices) local.vertices.push_back(sub.local[v]);
    HamOrderOutcome r = ham_degeneracy_order(sub.digraph, local, k, ell, config);
    if (const auto* cert = std::get_if<TwoBlockCertificate>(&r)) {
      throw Error(ErrorKind::StructuralViolation,
                  "cycle " + std::to_string(i) + " of the tree spans a c(k,ell) from " +
                      std::to_string(sub.original[cert->u]));
    }
    for (Vertex v : std::get<EliminationOrder>(r).order) {
      const Vertex host = sub.original[v];
      if (i == 0 || host != tree.parent_vertex(i)) out.order.push_back(host);
    }
  }
  const auto bound = replay_elimination(underlying_graph(f1), out.order);
  if (!bound) throw Error(ErrorKind::StructuralViolation, "per-cycle order is not a permutation");
  out.bound = *bound;
  return out;
}

EliminationOrder order_F1(const Digraph& f1, const CycleTree& tree, int k, int ell,
                          const SearchConfig& config) {
  const int target = k + 2 * ell - 2;
  EliminationOrder peel = degeneracy(underlying_graph(f1));
  if (peel.bound <= target) return peel;
  EliminationOrder fallback = cycle_by_cycle_order_F1(f1, tree, k, ell, config);
  if (fallback.bound <= target) return fallback;
  throw Error(ErrorKind::StructuralViolation,
              "F1 has no deletion order with bound " + std::to_string(target) + " (peeling " +
                  std::to_string(peel.bound) + ", per-cycle " + std::to_string(fallback.bound) + ")");
}

ClassColoring color_F(const Digraph& f, const CycleTree& tree, int k, int ell,
                      const SearchConfig& config) {
  const int n = f.vertex_count();
  if (static_cast<int>(tree.vertices().size()) != n ||
      (n > 0 && tree.vertices().back() != n - 1)) {
    throw Error(ErrorKind::PreconditionViolated, "cycle-tree does not span F");
  }
  const PhiLabels labels = phi_labeling(f, tree, ell);
  const ArcSplit split = split_arcs(f, tree, labels);
  validate_structure(f, tree, split, k, ell, config);

  const Digraph f1 = Digraph::build(n, split.f1_arcs);
  const UGraph g1 = underlying_graph(f1);
  const EliminationOrder order = order_F1(f1, tree, k, ell, config);
  if (!is_valid_elimination(g1, order)) {
    throw Error(ErrorKind::BoundExceeded, "F1 deletion order fails the independent check");
  }
  const Coloring rho1 = greedy_color_by_order(g1, order);

  ClassColoring out;
  out.f1_bound = order.bound;
  out.f2_arcs = split.f2_arcs.size();
  for (const Arc& a : f.arcs()) out.external_arcs += is_external_arc(tree, a) ? 1 : 0;
  Coloring rho;
  rho.colors.resize(n);
  for (Vertex v = 0; v < n; ++v) rho.colors[v] = 2 * rho1.colors[v] + labels.label[v];
  rho.palette_size = 2 * rho1.palette_size;
  out.coloring = compacted(rho);
  if (!is_proper_coloring(underlying_graph(f), out.coloring)) {
    throw Error(ErrorKind::StructuralViolation, "product colouring of F is not proper");
  }
  if (out.coloring.palette_size > 2 * (k + 2 * ell - 1)) {
    throw Error(ErrorKind::BoundExceeded, "F uses more than 2(k+2ell-1) colours");
  }
  return out;
}

PipelineOutcome run_pipeline(const Digraph& d, int k, int ell, const SearchConfig& config) {
  TraceOutcome built = build_contraction_trace(d, k, ell, config);
  if (auto* cert = std::get_if<TwoBlockCertificate>(&built)) return *cert;

  PipelineResult out;
  out.trace = std::move(std::get<ContractionTrace>(built));
  out.palette_bound = strong_palette_bound(k, ell);
  const ContractionTrace& trace = out.trace;
  {
    const Diagnostics diag = validate_trace(trace, d, config);
    if (!diag.ok()) throw Error(ErrorKind::StructuralViolation, diag.violations.front());
  }

  const int per_class = 2 * (k + 2 * ell - 1);
  const std::vector<int> lengths = trace.lengths();
  Coloring combined;
  combined.colors.assign(d.vertex_count(), -1);
  combined.palette_size = std::max(trace.final_coloring.palette_size, 1) * per_class;

  for (Vertex s = 0; s < trace.final_digraph.vertex_count(); ++s) {
    ClassReport report;
    report.representative = s;
    report.vertices = trace.preimage_class(s);
    const int block = trace.final_coloring.colors[s];
    ClassTree ct = extract_cycle_tree(trace, s);
    if (const auto* tree = std::get_if<CycleTree>(&ct)) {
      const Diagnostics diag = validate_cycle_tree(d, report.vertices, *tree, lengths, k);
      if (!diag.ok()) throw Error(ErrorKind::StructuralViolation, diag.violations.front());
      const InducedSubdigraph sub = induced(d, report.vertices);
      const CycleTree local = tree->relabeled(sub.local);
      report.cycle_count = tree->cycle_count();
      report.result = color_F(sub.digraph, local, k, ell, config);
      for (std::size_t i = 0; i < sub.original.size(); ++i) {
        combined.colors[sub.original[i]] = block * per_class + report.result.coloring.colors[i];
      }
    } else {
      report.result.coloring = Coloring{{0}, 1};
      combined.colors[std::get<Singleton>(ct).vertex] = block * per_class;
    }
    out.classes.push_back(std::move(report));
  }

  out.coloring = compacted(combined);
  if (!is_proper_coloring(underlying_graph(d), out.coloring)) {
    throw Error(ErrorKind::StructuralViolation, "combined colouring of D is not proper");
  }
  if (out.coloring.palette_size > out.palette_bound) {
    throw Error(ErrorKind::BoundExceeded, "palette exceeds 2(2k-3)(k+2ell-1)");
  }
  return out;
}

StrongColorOutcome color_strong_digraph(const Digraph& d, int k, int ell,
                                        const SearchConfig& config) {
  PipelineOutcome r = run_pipeline(d, k, ell, config);
  if (auto* cert = std::get_if<TwoBlockCertificate>(&r)) return *cert;
  return std::get<PipelineResult>(r).coloring;
}

}  // namespace twoblock
