#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace twoblock {

using Vertex = int;

// Vertex subset of a digraph with at most 64 vertices. All exact searches run on
// masks; larger digraphs are representable but exceed every search cap.
using Mask = std::uint64_t;
inline constexpr int kMaskBits = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple digraph: no loops, no parallel arcs, opposite pairs allowed.
// Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertex_count);

  // Validating constructor. Throws LoopArc, DuplicateArc or VertexOutOfRange.
  static Digraph build(int vertex_count, std::span<const Arc> arcs);

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  // Sorted by (tail, head).
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_arc(Vertex tail, Vertex head) const;
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  // Sorted ascending.
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }

  bool fits_mask() const { return n_ <= kMaskBits; }
  Mask out_mask(Vertex v) const { return out_mask_[v]; }
  Mask in_mask(Vertex v) const { return in_mask_[v]; }
  Mask all_mask() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<Mask> out_mask_;
  std::vector<Mask> in_mask_;
};

inline Digraph build_digraph(int vertex_count, std::span<const Arc> arcs) {
  return Digraph::build(vertex_count, arcs);
}

struct Edge {
  Vertex a = 0;  // a < b
  Vertex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph.
class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(int vertex_count);

  // Duplicate edges (in either orientation) collapse; loops and out-of-range
  // endpoints throw.
  static UGraph build(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex a, Vertex b) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool fits_mask() const { return n_ <= kMaskBits; }
  Mask neighbor_mask(Vertex v) const { return mask_[v]; }

  friend bool operator==(const UGraph& a, const UGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Mask> mask_;
};

UGraph underlying_graph(const Digraph& d);

struct DiPath {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const DiPath&, const DiPath&) = default;
};

struct DiCycle {
  std::vector<Vertex> vertices;  // cyclic order, no repeated first vertex

  int length() const { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const;
  // Position of v in `vertices`, or -1.
  int position(Vertex v) const;
  Vertex successor(Vertex v) const;
  Vertex predecessor(Vertex v) const;
  friend bool operator==(const DiCycle&, const DiCycle&) = default;
};

// Rotates so the minimum vertex id comes first.
DiCycle normalized(DiCycle c);

bool is_path_in(const Digraph& d, const DiPath& p);
bool is_cycle_in(const Digraph& d, const DiCycle& c);

// uCv: the subpath of `c` from u to v following the cycle's direction.
// Throws NotOnCycle.
DiPath cycle_segment(const DiCycle& c, Vertex u, Vertex v);

// Length of uCv without materializing it.
int cycle_distance(const DiCycle& c, Vertex u, Vertex v);

// Joins p and q where p.back() == q.front().
DiPath concat(const DiPath& p, const DiPath& q);

std::vector<std::vector<Vertex>> strong_components(const Digraph& d);
bool is_strong(const Digraph& d);

// Images of the contracted digraph's vertices in the source digraph.
struct PreimageMap {
  std::vector<std::vector<Vertex>> images;  // indexed by contracted vertex, each sorted
  std::vector<Vertex> target;               // indexed by source vertex
  Vertex contracted = -1;                   // the vertex v_S

  int source_count() const { return static_cast<int>(target.size()); }
  int target_count() const { return static_cast<int>(images.size()); }
};

struct Contraction {
  Digraph digraph;
  PreimageMap preimage;
};

// D/S. Vertices outside S keep their relative order and get ids 0..n-|S|-1;
// v_S is the last vertex. Throws EmptySet or VertexOutOfRange.
Contraction contract(const Digraph& d, std::span<const Vertex> s);

struct InducedSubdigraph {
  Digraph digraph;
  std::vector<Vertex> original;  // new id -> id in the host, ascending
  std::vector<Vertex> local;     // host id -> new id, or -1
};

// D[S]. Throws VertexOutOfRange.
InducedSubdigraph induced(const Digraph& d, std::span<const Vertex> s);

// The same digraph with vertices renamed by `perm` (old id -> new id).
Digraph relabeled(const Digraph& d, std::span<const Vertex> perm);

// Digraph with exactly the given arcs added or removed; used by generators.
Digraph with_arc(const Digraph& d, Arc a);

}  // namespace twoblock
