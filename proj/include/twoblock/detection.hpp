#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "twoblock/config.hpp"
#include "twoblock/digraph.hpp"

namespace twoblock {

// Positive witness of c(k, ell): two internally disjoint u->v paths with
// |path_a| >= k_req and |path_b| >= ell_req.
struct TwoBlockCertificate {
  Vertex u = 0;
  Vertex v = 0;
  DiPath path_a;
  DiPath path_b;
  int k_req = 1;
  int ell_req = 1;

  friend bool operator==(const TwoBlockCertificate&, const TwoBlockCertificate&) = default;
};

enum class SearchMode { Exhaustive, Capped };

struct AbsenceReport {
  int k = 1;
  int ell = 1;
  SearchMode mode = SearchMode::Exhaustive;
  std::int64_t pairs_checked = 0;
};

using DetectionResult = std::variant<TwoBlockCertificate, AbsenceReport>;

inline bool found(const DetectionResult& r) {
  return std::holds_alternative<TwoBlockCertificate>(r);
}

// For every ordered pair (u, v): DFS over simple u->v paths long enough for the
// larger requirement, then a second DFS for the other path in D minus the
// first path's interior. Exhaustive up to config.detect_cap vertices; above it
// the strict mode throws CapExceeded and the heuristic mode runs a budgeted
// randomized search whose negative answer is a Capped report.
// Throws PreconditionViolated if k < 1 or ell < 1.
DetectionResult find_two_block_cycle(const Digraph& d, int k, int ell,
                                     const SearchConfig& config = default_config());

// True iff `cert` is a c(k, ell) of `d` with k_req == k and ell_req == ell.
bool verify_certificate(const Digraph& d, const TwoBlockCertificate& cert, int k, int ell);

// Same requirements with the certificate's own k_req/ell_req.
bool verify_certificate(const Digraph& d, const TwoBlockCertificate& cert);

struct CycleSearch {
  DiCycle cycle;
  bool exact = true;  // false when a heuristic budget cut the search short
};

// Longest cycle by branch and bound. Among longest cycles, returns the
// lexicographically least vertex sequence starting at its minimum vertex.
// Throws Acyclic, or CapExceeded in strict mode beyond config.longest_cycle_cap.
CycleSearch longest_cycle_search(const Digraph& d, const SearchConfig& config = default_config());

inline DiCycle longest_cycle(const Digraph& d, const SearchConfig& config = default_config()) {
  return longest_cycle_search(d, config).cycle;
}

// Exact Hamiltonian cycle search (subset dynamic programming).
// Throws CapExceeded beyond config.longest_cycle_cap.
std::optional<DiCycle> hamiltonian_cycle(const Digraph& d,
                                         const SearchConfig& config = default_config());

// The two configurations in which a crossing chord pair may fail to give a
// c(k, ell).
struct ExceptionA {};  // |uCx| = k-1, arcs (u,v) and (y,x)
struct ExceptionB {};  // |vCy| = ell-1, arcs (v,u) and (x,y)

using CrossingOutcome = std::variant<TwoBlockCertificate, ExceptionA, ExceptionB>;

// Four distinct vertices u, v, x, y of the Hamiltonian cycle `c` with x
// inside uCv and y inside vCu; `chord_uv` is an arc on {u, v} and `chord_xy`
// an arc on {x, y}, neither an edge of c. Requires |uCx| >= k-1 and
// |vCy| >= ell-1 (PreconditionViolated otherwise, NotAChord for cycle edges).
//
// The certificate is built from the realized orientation:
//   (u,v),(x,y): uCx+(x,y)        and (u,v)+vCy
//   (u,v),(y,x): uCx              and (u,v)+vCy+(y,x)
//   (v,u),(x,y): (v,u)+uCx+(x,y)  and vCy
//   (v,u),(y,x): (v,u)+uCx        and vCy+(y,x)
// with the first path in the k role.
CrossingOutcome crossing_chord_case(const DiCycle& c, Vertex u, Vertex v, Vertex x, Vertex y,
                                    Arc chord_uv, Arc chord_xy, int k, int ell);

// c plus the two chords, on vertex_count = max vertex + 1.
Digraph crossing_host(const DiCycle& c, Arc chord_uv, Arc chord_xy);

}  // namespace twoblock
