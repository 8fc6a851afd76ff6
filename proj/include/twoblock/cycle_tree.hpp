#pragma once

#include <span>
#include <vector>

#include "twoblock/digraph.hpp"

namespace twoblock {

// A strong digraph given as an ordering C_0, ..., C_n of its cycles in which
// every C_i (i >= 1) meets the union of the earlier cycles in exactly one
// vertex p_i, the parent vertex.
//
// Internally the cycles and vertices form a rooted incidence tree: a vertex
// hangs below the first cycle containing it (its home cycle C_v, the one
// with the shortest cycle-path to C_0) and a cycle C_i hangs below p_i.
// Cycle-paths and tree paths are paths in this incidence tree.
class CycleTree {
 public:
  CycleTree() = default;

  // Throws StructuralViolation if `cycles` is not a cycle-tree ordering.
  static CycleTree build(std::vector<DiCycle> cycles);

  int cycle_count() const { return static_cast<int>(cycles_.size()); }
  const std::vector<DiCycle>& cycles() const { return cycles_; }
  const DiCycle& cycle(int i) const { return cycles_[i]; }

  // Sorted vertex set.
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool contains(Vertex v) const;

  // -1 for C_0.
  int parent_cycle(int i) const { return parent_cycle_[i]; }
  Vertex parent_vertex(int i) const { return parent_vertex_[i]; }
  int depth(int i) const { return depth_[i]; }

  // Index of C_v.
  int home_cycle(Vertex v) const;

  // Whether some cycle of the tree contains both a and b.
  bool share_cycle(Vertex a, Vertex b) const;

  // Λ(C_a, C_b): cycle indices from a to b.
  std::vector<int> cycle_path(int a, int b) const;

  // Cycles on the cycle-path between x's and y's home-side cycles that
  // minimizes its length, together with the junction vertices between
  // consecutive cycles. For x == y or a shared cycle the path has one cycle.
  struct Route {
    std::vector<int> cycles;
    std::vector<Vertex> junctions;  // junctions[i] joins cycles[i] and cycles[i+1]
  };
  Route route(Vertex x, Vertex y) const;

  // uTv, the unique directed u->v path in the tree.
  DiPath tree_path(Vertex u, Vertex v) const;

  // Whether cycle `anc` lies on Λ(C_desc, C_0).
  bool is_cycle_ancestor(int anc, int desc) const;

  // The same tree with every vertex v renamed to map[v].
  CycleTree relabeled(std::span<const Vertex> map) const;

 private:
  std::vector<DiCycle> cycles_;
  std::vector<Vertex> vertices_;
  std::vector<int> parent_cycle_;
  std::vector<Vertex> parent_vertex_;
  std::vector<int> depth_;
  std::vector<int> home_;  // indexed by vertex id, -1 outside the tree
};

}  // namespace twoblock
