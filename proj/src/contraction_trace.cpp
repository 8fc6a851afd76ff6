#include <algorithm>
#include <set>
#include <string>

#include "twoblock/error.hpp"
#include "twoblock/pipeline.hpp"

namespace twoblock {

std::vector<int> ContractionTrace::lengths() const {
  std::vector<int> out;
  for (const TraceStep& s : steps) out.push_back(s.cycle.length());
  return out;
}

std::vector<Vertex> ContractionTrace::preimage_class(Vertex s) const {
  std::vector<Vertex> cur{s};
  for (int j = step_count() - 1; j >= 0; --j) {
    std::vector<Vertex> next;
    for (Vertex w : cur) {
      const auto& img = steps[j].preimage.images.at(w);
      next.insert(next.end(), img.begin(), img.end());
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

namespace {

// First vertex of `cycle`, in cycle order, satisfying pred.
template <typename Pred>
Vertex first_on_cycle(const DiCycle& cycle, Pred pred) {
  for (Vertex c : cycle.vertices) {
    if (pred(c)) return c;
  }
  throw Error(ErrorKind::LemmaViolation, "contracted vertex has no matching cycle vertex");
}

}  // namespace

TwoBlockCertificate uncontract_certificate(const Digraph& parent, const DiCycle& cycle,
                                           const PreimageMap& map,
                                           const TwoBlockCertificate& cert) {
  const Vertex vs = map.contracted;
  auto up = [&](Vertex w) { return map.images.at(w).front(); };
  // First cycle vertex entered from `from`, and first one leaving to `to`.
  auto entry = [&](Vertex from) {
    return first_on_cycle(cycle, [&](Vertex c) { return parent.has_arc(from, c); });
  };
  auto exit = [&](Vertex to) {
    return first_on_cycle(cycle, [&](Vertex c) { return parent.has_arc(c, to); });
  };

  auto lift_interior = [&](const DiPath& p) {
    DiPath out;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      const Vertex w = p.vertices[i];
      if (w != vs) {
        out.vertices.push_back(up(w));
        continue;
      }
      const Vertex a = entry(up(p.vertices[i - 1]));
      const Vertex b = exit(up(p.vertices[i + 1]));
      const DiPath seg = cycle_segment(cycle, a, b);
      out.vertices.insert(out.vertices.end(), seg.vertices.begin(), seg.vertices.end());
    }
    return out;
  };

  TwoBlockCertificate out = cert;
  if (cert.u == vs) {
    const Vertex qa = up(cert.path_a.vertices[1]);
    const Vertex qb = up(cert.path_b.vertices[1]);
    const Vertex ba = exit(qa);
    const Vertex bb = exit(qb);
    DiPath tail_a{{cert.path_a.vertices.begin() + 1, cert.path_a.vertices.end()}};
    DiPath tail_b{{cert.path_b.vertices.begin() + 1, cert.path_b.vertices.end()}};
    out.path_a = concat(DiPath{{ba, qa}}, lift_interior(tail_a));
    out.path_b = concat(concat(cycle_segment(cycle, ba, bb), DiPath{{bb, qb}}),
                        lift_interior(tail_b));
    out.u = ba;
    out.v = up(cert.v);
  } else if (cert.v == vs) {
    const auto& va = cert.path_a.vertices;
    const auto& vb = cert.path_b.vertices;
    const Vertex pa = up(va[va.size() - 2]);
    const Vertex pb = up(vb[vb.size() - 2]);
    const Vertex aa = entry(pa);
    const Vertex ab = entry(pb);
    DiPath head_a{{va.begin(), va.end() - 1}};
    DiPath head_b{{vb.begin(), vb.end() - 1}};
    out.path_a = concat(lift_interior(head_a), DiPath{{pa, aa}});
    out.path_b =
        concat(concat(lift_interior(head_b), DiPath{{pb, ab}}), cycle_segment(cycle, ab, aa));
    out.u = up(cert.u);
    out.v = aa;
  } else {
    out.path_a = lift_interior(cert.path_a);
    out.path_b = lift_interior(cert.path_b);
    out.u = up(cert.u);
    out.v = up(cert.v);
  }
  return out;
}

TraceOutcome build_contraction_trace(const Digraph& d, int k, int ell,
                                     const SearchConfig& config) {
  if (k < 2 || ell < 1 || ell > k) {
    throw Error(ErrorKind::PreconditionViolated, "need k >= 2 and k >= ell >= 1");
  }
  if (!is_strong(d)) throw Error(ErrorKind::NotStrong, "input digraph is not strong");

  ContractionTrace trace;
  trace.k = k;
  trace.ell = ell;
  Digraph cur = d;
  while (true) {
    DetectionResult screen = find_two_block_cycle(cur, k, ell, config);
    if (auto* cert = std::get_if<TwoBlockCertificate>(&screen)) {
      TwoBlockCertificate lifted = *cert;
      for (int j = trace.step_count() - 1; j >= 0; --j) {
        const TraceStep& step = trace.steps[j];
        lifted = uncontract_certificate(step.digraph, step.cycle, step.preimage, lifted);
        if (!verify_certificate(step.digraph, lifted, k, ell)) {
          throw Error(ErrorKind::LemmaViolation,
                      "un-contracted certificate invalid at level " + std::to_string(j));
        }
      }
      return lifted;
    }
    if (std::get<AbsenceReport>(screen).mode == SearchMode::Capped) {
      trace.verified_construction = false;
    }

    if (auto col = k_colorable(underlying_graph(cur), 2 * k - 3, config)) {
      trace.final_digraph = std::move(cur);
      trace.final_coloring = *col;
      return trace;
    }
    CycleSearch longest = longest_cycle_search(cur, config);
    if (!longest.exact) trace.verified_construction = false;
    if (longest.cycle.length() < 2 * k - 2) {
      throw Error(ErrorKind::LemmaViolation,
                  "not (2k-3)-colourable but longest cycle has length " +
                      std::to_string(longest.cycle.length()));
    }
    Contraction next = contract(cur, longest.cycle.vertices);
    trace.steps.push_back({std::move(cur), longest.cycle, next.preimage, longest.exact});
    cur = std::move(next.digraph);
  }
}

Diagnostics validate_trace(const ContractionTrace& trace, const Digraph& d,
                           const SearchConfig& config, bool check_freeness) {
  Diagnostics diag;
  auto fail = [&](const std::string& msg) { diag.violations.push_back(msg); };
  const int k = trace.k;
  const int ell = trace.ell;
  const int m = trace.step_count();

  if (!(trace.digraph_at(0) == d)) fail("D^(0) differs from the input digraph");
  for (int j = 0; j <= m; ++j) {
    const Digraph& dj = trace.digraph_at(j);
    const std::string tag = "D^(" + std::to_string(j) + ")";
    if (!is_strong(dj)) fail(tag + " is not strong");
    if (check_freeness) {
      SearchConfig screen = config;
      screen.strict = false;
      DetectionResult r = find_two_block_cycle(dj, k, ell, screen);
      if (found(r)) fail(tag + " contains c(k,ell)");
    }
  }
  int previous = -1;
  for (int j = 0; j < m; ++j) {
    const TraceStep& step = trace.steps[j];
    const std::string tag = "C^(" + std::to_string(j) + ")";
    if (!is_cycle_in(step.digraph, step.cycle)) {
      fail(tag + " is not a cycle of D^(" + std::to_string(j) + ")");
      continue;
    }
    const int len = step.cycle.length();
    if (len < 2 * k - 2) fail(tag + " shorter than 2k-2");
    if (previous != -1 && len > previous) fail(tag + " longer than its predecessor");
    previous = len;
    if (step.cycle_exact && step.digraph.vertex_count() <= config.longest_cycle_cap) {
      SearchConfig exact = config;
      exact.strict = true;
      if (longest_cycle(step.digraph, exact).length() != len) fail(tag + " is not a longest cycle");
    }
    Contraction redo = contract(step.digraph, step.cycle.vertices);
    if (!(redo.digraph == trace.digraph_at(j + 1))) {
      fail("D^(" + std::to_string(j + 1) + ") is not D^(" + std::to_string(j) + ")/" + tag);
    }
    if (redo.preimage.images != step.preimage.images) fail("preimage map of step " + std::to_string(j));
  }
  const UGraph gm = underlying_graph(trace.final_digraph);
  if (!is_proper_coloring(gm, trace.final_coloring)) fail("final colouring is not proper");
  if (trace.final_coloring.palette_size > std::max(2 * k - 3, 0)) fail("final palette exceeds 2k-3");
  return diag;
}

ClassTree extract_cycle_tree(const ContractionTrace& trace, Vertex s) {
  const int m = trace.step_count();
  if (!trace.final_digraph.contains(s)) {
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(s) + " not in D^(m)");
  }
  std::vector<Vertex> members{s};
  std::vector<DiCycle> cycles;  // cycle-tree ordering, ids of the current level

  for (int j = m - 1; j >= 0; --j) {
    const TraceStep& step = trace.steps[j];
    const PreimageMap& pm = step.preimage;
    const Vertex u = pm.contracted;
    auto up = [&](Vertex w) { return pm.images[w].front(); };

    const bool hit = std::find(members.begin(), members.end(), u) != members.end();
    std::vector<Vertex> next_members;
    for (Vertex w : members) {
      next_members.insert(next_members.end(), pm.images[w].begin(), pm.images[w].end());
    }

    std::vector<DiCycle> next;
    int first_through_u = -1;
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      const DiCycle& c = cycles[ci];
      DiCycle lifted;
      if (hit && c.contains(u)) {
        const Vertex xp = up(c.predecessor(u));
        const Vertex yp = up(c.successor(u));
        std::vector<Vertex> xs;
        std::vector<Vertex> ys;
        for (Vertex w : step.cycle.vertices) {
          if (step.digraph.has_arc(xp, w)) xs.push_back(w);
          if (step.digraph.has_arc(w, yp)) ys.push_back(w);
        }
        if (xs.size() != 1 || ys.size() != 1 || xs.front() != ys.front()) {
          std::string detail = "tree cycle through the contracted vertex of step " +
                               std::to_string(j) + " enters C at {";
          for (Vertex w : xs) detail += " " + std::to_string(w);
          detail += " } and leaves at {";
          for (Vertex w : ys) detail += " " + std::to_string(w);
          detail += " }";
          throw Error(ErrorKind::AttachMismatch, detail);
        }
        for (Vertex w : c.vertices) lifted.vertices.push_back(w == u ? xs.front() : up(w));
        if (first_through_u == -1) first_through_u = static_cast<int>(ci);
      } else {
        for (Vertex w : c.vertices) lifted.vertices.push_back(up(w));
      }
      next.push_back(std::move(lifted));
    }
    if (hit) {
      const auto at = first_through_u == -1 ? next.begin() : next.begin() + first_through_u + 1;
      next.insert(at, step.cycle);
    }
    cycles = std::move(next);
    members = std::move(next_members);
  }
  if (cycles.empty()) return Singleton{members.front()};
  return CycleTree::build(std::move(cycles));
}

Diagnostics validate_cycle_tree(const Digraph& host, const std::vector<Vertex>& vertices,
                                const CycleTree& tree, const std::vector<int>& lengths, int k) {
  Diagnostics diag;
  auto fail = [&](const std::string& msg) { diag.violations.push_back(msg); };
  std::set<Vertex> covered;
  std::multiset<int> allowed(lengths.begin(), lengths.end());
  std::vector<Arc> arcs;
  for (int i = 0; i < tree.cycle_count(); ++i) {
    const DiCycle& c = tree.cycle(i);
    const std::string tag = "tree cycle " + std::to_string(i);
    if (!is_cycle_in(host, c)) fail(tag + " is not a cycle of the host");
    if (!allowed.contains(c.length())) fail(tag + " has a length outside L");
    if (c.length() < 2 * k - 2) fail(tag + " shorter than 2k-2");
    if (i > 0) {
      int shared = 0;
      for (Vertex v : c.vertices) shared += covered.contains(v) ? 1 : 0;
      if (shared != 1) fail(tag + " meets earlier cycles in " + std::to_string(shared) + " vertices");
    }
    for (int t = 0; t < c.length(); ++t) {
      covered.insert(c.vertices[t]);
      arcs.push_back({c.vertices[t], c.vertices[(t + 1) % c.length()]});
    }
  }
  if (!std::equal(covered.begin(), covered.end(), vertices.begin(), vertices.end())) {
    fail("tree does not span its class");
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  bool arcs_in_range = true;
  for (const Arc& a : arcs) arcs_in_range &= host.contains(a.tail) && host.contains(a.head);
  if (arcs_in_range && diag.ok()) {
    const Digraph skeleton = Digraph::build(host.vertex_count(), arcs);
    if (!is_strong(induced(skeleton, vertices).digraph)) fail("tree is not strong");
  }
  return diag;
}

}  // namespace twoblock
