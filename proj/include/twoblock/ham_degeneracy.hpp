#pragma once

#include <variant>

#include "twoblock/config.hpp"
#include "twoblock/detection.hpp"
#include "twoblock/digraph.hpp"
#include "twoblock/exact_color.hpp"

namespace twoblock {

using LowDegreeOutcome = std::variant<Vertex, TwoBlockCertificate>;
using HamOrderOutcome = std::variant<EliminationOrder, TwoBlockCertificate>;
using HamColorOutcome = std::variant<Coloring, TwoBlockCertificate>;

// Lowest-id vertex of underlying degree <= k+ell-1, or, when the minimum
// degree is at least k+ell, a c(k, ell) found by the detector.
// Throws NotHamiltonian, PreconditionViolated (k+ell < 3), CapExceeded, or
// LemmaViolation if the detector finds nothing on a high-degree instance.
LowDegreeOutcome low_degree_or_certificate(const Digraph& d, const DiCycle& ham, int k, int ell,
                                           const SearchConfig& config = default_config());

// One reduction step of the degeneracy recursion: v0 = `removed` is deleted
// and the shortcut (pred, succ) = (v_{n-1}, v_1) is added unless present.
struct ShortcutStep {
  Vertex removed = 0;
  Vertex pred = 0;
  Vertex succ = 0;
  bool added = false;
};

struct ShortcutReduction {
  Digraph digraph;         // same vertex ids; `removed` becomes isolated
  std::vector<Vertex> cycle;  // the shortened Hamiltonian cycle
  ShortcutStep step;
};

// Requires `cycle` to be a spanning cycle of the non-isolated part of `d`
// and to contain v0.
ShortcutReduction reduce_at(const Digraph& d, const std::vector<Vertex>& cycle, Vertex v0);

// Replaces a use of an added shortcut by the path pred, removed, succ.
// Certificates not using the shortcut come back unchanged.
TwoBlockCertificate lift_shortcut(TwoBlockCertificate cert, const ShortcutStep& step);

// Deletion order with bound k+ell-1 for a Hamiltonian c(k, ell)-free digraph.
// The input is screened by the detector first; a c(k, ell) there is returned
// as the certificate. Then repeatedly deletes the lowest-id vertex of degree
// <= k+ell-1 with reduce_at until at most k+ell vertices remain. If some
// level has no such vertex, the detector's certificate at that level is
// lifted back through every shortcut and re-verified at each level.
HamOrderOutcome ham_degeneracy_order(const Digraph& d, const DiCycle& ham, int k, int ell,
                                     const SearchConfig& config = default_config());

// ham_degeneracy_order followed by greedy colouring: at most k+ell colours.
HamColorOutcome color_hamiltonian(const Digraph& d, const DiCycle& ham, int k, int ell,
                                  const SearchConfig& config = default_config());

// True iff `ham` is a Hamiltonian cycle of `d`.
bool is_hamiltonian_cycle(const Digraph& d, const DiCycle& ham);

}  // namespace twoblock
