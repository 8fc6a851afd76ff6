#include "twoblock/ham_degeneracy.hpp"

#include <algorithm>
#include <string>

#include "twoblock/error.hpp"

namespace twoblock {

bool is_hamiltonian_cycle(const Digraph& d, const DiCycle& ham) {
  return ham.length() == d.vertex_count() && is_cycle_in(d, ham);
}

namespace {

void check_inputs(const Digraph& d, const DiCycle& ham, int k, int ell) {
  if (k < 1 || ell < 1 || k + ell < 3) {
    throw Error(ErrorKind::PreconditionViolated, "need k, ell >= 1 and k + ell >= 3");
  }
  if (!is_hamiltonian_cycle(d, ham)) {
    throw Error(ErrorKind::NotHamiltonian, "given cycle is not a Hamiltonian cycle");
  }
}

std::vector<int> underlying_degrees(const Digraph& d) {
  const UGraph g = underlying_graph(d);
  std::vector<int> deg(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v) deg[v] = g.degree(v);
  return deg;
}

TwoBlockCertificate detect_or_throw(const Digraph& d, int k, int ell,
                                    const SearchConfig& config) {
  DetectionResult r = find_two_block_cycle(d, k, ell, config);
  if (auto* cert = std::get_if<TwoBlockCertificate>(&r)) return *cert;
  if (std::get<AbsenceReport>(r).mode == SearchMode::Capped) {
    throw Error(ErrorKind::CapExceeded, "heuristic detection found no certificate");
  }
  throw Error(ErrorKind::LemmaViolation,
              "minimum degree >= k+ell but exhaustive detection found no c(k,ell)");
}

}  // namespace

ShortcutReduction reduce_at(const Digraph& d, const std::vector<Vertex>& cycle, Vertex v0) {
  const auto it = std::find(cycle.begin(), cycle.end(), v0);
  if (it == cycle.end() || cycle.size() < 3) {
    throw Error(ErrorKind::PreconditionViolated, "vertex not on a cycle of length >= 3");
  }
  const auto pos = it - cycle.begin();
  const auto len = static_cast<std::ptrdiff_t>(cycle.size());
  ShortcutReduction out;
  out.step.removed = v0;
  out.step.pred = cycle[(pos + len - 1) % len];
  out.step.succ = cycle[(pos + 1) % len];
  out.step.added = !d.has_arc(out.step.pred, out.step.succ);
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (a.tail != v0 && a.head != v0) arcs.push_back(a);
  }
  if (out.step.added) arcs.push_back({out.step.pred, out.step.succ});
  out.digraph = Digraph::build(d.vertex_count(), arcs);
  out.cycle = cycle;
  out.cycle.erase(out.cycle.begin() + pos);
  return out;
}

TwoBlockCertificate lift_shortcut(TwoBlockCertificate cert, const ShortcutStep& step) {
  if (!step.added) return cert;
  for (DiPath* p : {&cert.path_a, &cert.path_b}) {
    auto& vs = p->vertices;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      if (vs[i] == step.pred && vs[i + 1] == step.succ) {
        vs.insert(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1, step.removed);
        break;
      }
    }
  }
  return cert;
}

LowDegreeOutcome low_degree_or_certificate(const Digraph& d, const DiCycle& ham, int k, int ell,
                                           const SearchConfig& config) {
  check_inputs(d, ham, k, ell);
  const std::vector<int> deg = underlying_degrees(d);
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (deg[v] <= k + ell - 1) return v;
  }
  return detect_or_throw(d, k, ell, config);
}

HamOrderOutcome ham_degeneracy_order(const Digraph& d, const DiCycle& ham, int k, int ell,
                                     const SearchConfig& config) {
  check_inputs(d, ham, k, ell);
  const int n = d.vertex_count();

  {
    DetectionResult screen = find_two_block_cycle(d, k, ell, config);
    if (auto* cert = std::get_if<TwoBlockCertificate>(&screen)) return *cert;
  }

  // Every level keeps the original vertex ids; deleted vertices stay isolated.
  std::vector<Digraph> snapshots{d};
  std::vector<ShortcutStep> steps;
  std::vector<Vertex> cycle = ham.vertices;
  std::vector<bool> alive(n, true);
  EliminationOrder out;
  out.bound = k + ell - 1;

  while (static_cast<int>(cycle.size()) > k + ell) {
    const std::vector<int> deg = underlying_degrees(snapshots.back());
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && deg[v] <= k + ell - 1) {
        pick = v;
        break;
      }
    }
    if (pick == -1) {
      TwoBlockCertificate cert = detect_or_throw(snapshots.back(), k, ell, config);
      for (std::size_t i = steps.size(); i-- > 0;) {
        cert = lift_shortcut(std::move(cert), steps[i]);
        if (!verify_certificate(snapshots[i], cert, k, ell)) {
          throw Error(ErrorKind::LemmaViolation,
                      "lifted certificate invalid at level " + std::to_string(i));
        }
      }
      return cert;
    }
    ShortcutReduction next = reduce_at(snapshots.back(), cycle, pick);
    steps.push_back(next.step);
    snapshots.push_back(std::move(next.digraph));
    cycle = std::move(next.cycle);
    alive[pick] = false;
    out.order.push_back(pick);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) out.order.push_back(v);
  }
  return out;
}

HamColorOutcome color_hamiltonian(const Digraph& d, const DiCycle& ham, int k, int ell,
                                  const SearchConfig& config) {
  HamOrderOutcome r = ham_degeneracy_order(d, ham, k, ell, config);
  if (auto* cert = std::get_if<TwoBlockCertificate>(&r)) return *cert;
  const UGraph g = underlying_graph(d);
  const auto& order = std::get<EliminationOrder>(r);
  if (!is_valid_elimination(g, order)) {
    throw Error(ErrorKind::BoundExceeded, "deletion order exceeds k+ell-1");
  }
  return greedy_color_by_order(g, order);
}

}  // namespace twoblock
