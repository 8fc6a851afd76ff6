#include "twoblock/digraph.hpp"

#include <algorithm>
#include <string>

#include "twoblock/error.hpp"

namespace twoblock {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Digraph::Digraph(int vertex_count)
    : n_(vertex_count), out_(vertex_count), in_(vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
  }
  if (fits_mask()) {
    out_mask_.assign(n_, 0);
    in_mask_.assign(n_, 0);
  }
}

Digraph Digraph::build(int vertex_count, std::span<const Arc> arcs) {
  Digraph d(vertex_count);
  d.arcs_.assign(arcs.begin(), arcs.end());
  for (const Arc& a : d.arcs_) {
    check_vertex(vertex_count, a.tail);
    check_vertex(vertex_count, a.head);
    if (a.tail == a.head) {
      throw Error(ErrorKind::LoopArc, "loop at vertex " + std::to_string(a.tail));
    }
  }
  std::sort(d.arcs_.begin(), d.arcs_.end());
  auto dup = std::adjacent_find(d.arcs_.begin(), d.arcs_.end());
  if (dup != d.arcs_.end()) {
    throw Error(ErrorKind::DuplicateArc,
                "arc (" + std::to_string(dup->tail) + "," + std::to_string(dup->head) + ")");
  }
  for (const Arc& a : d.arcs_) {
    d.out_[a.tail].push_back(a.head);
    d.in_[a.head].push_back(a.tail);
    if (d.fits_mask()) {
      d.out_mask_[a.tail] |= bit(a.head);
      d.in_mask_[a.head] |= bit(a.tail);
    }
  }
  for (auto& in : d.in_) std::sort(in.begin(), in.end());
  return d;
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (!contains(tail) || !contains(head)) return false;
  if (fits_mask()) return (out_mask_[tail] & bit(head)) != 0;
  return std::binary_search(out_[tail].begin(), out_[tail].end(), head);
}

Mask Digraph::all_mask() const {
  return n_ >= kMaskBits ? ~Mask{0} : (Mask{1} << n_) - 1;
}

UGraph::UGraph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
  if (fits_mask()) mask_.assign(n_, 0);
}

UGraph UGraph::build(int vertex_count, std::span<const Edge> edges) {
  UGraph g(vertex_count);
  for (Edge e : edges) {
    check_vertex(vertex_count, e.a);
    check_vertex(vertex_count, e.b);
    if (e.a == e.b) throw Error(ErrorKind::LoopArc, "loop at vertex " + std::to_string(e.a));
    if (e.a > e.b) std::swap(e.a, e.b);
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adj_[e.a].push_back(e.b);
    g.adj_[e.b].push_back(e.a);
    if (g.fits_mask()) {
      g.mask_[e.a] |= bit(e.b);
      g.mask_[e.b] |= bit(e.a);
    }
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

bool UGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  if (fits_mask()) return (mask_[a] & bit(b)) != 0;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

UGraph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) edges.push_back({a.tail, a.head});
  return UGraph::build(d.vertex_count(), edges);
}

bool DiCycle::contains(Vertex v) const { return position(v) >= 0; }

int DiCycle::position(Vertex v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

Vertex DiCycle::successor(Vertex v) const {
  int i = position(v);
  if (i < 0) throw Error(ErrorKind::NotOnCycle, "vertex " + std::to_string(v));
  return vertices[(i + 1) % vertices.size()];
}

Vertex DiCycle::predecessor(Vertex v) const {
  int i = position(v);
  if (i < 0) throw Error(ErrorKind::NotOnCycle, "vertex " + std::to_string(v));
  return vertices[(i + vertices.size() - 1) % vertices.size()];
}

DiCycle normalized(DiCycle c) {
  auto it = std::min_element(c.vertices.begin(), c.vertices.end());
  std::rotate(c.vertices.begin(), it, c.vertices.end());
  return c;
}

bool is_path_in(const Digraph& d, const DiPath& p) {
  if (p.vertices.empty()) return false;
  std::vector<Vertex> seen = p.vertices;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (Vertex v : p.vertices) {
    if (!d.contains(v)) return false;
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (!d.has_arc(p.vertices[i], p.vertices[i + 1])) return false;
  }
  return true;
}

bool is_cycle_in(const Digraph& d, const DiCycle& c) {
  if (c.vertices.size() < 2) return false;
  DiPath p{c.vertices};
  return is_path_in(d, p) && d.has_arc(c.vertices.back(), c.vertices.front());
}

DiPath cycle_segment(const DiCycle& c, Vertex u, Vertex v) {
  int i = c.position(u);
  int j = c.position(v);
  if (i < 0 || j < 0) {
    throw Error(ErrorKind::NotOnCycle,
                "segment endpoints " + std::to_string(u) + "," + std::to_string(v));
  }
  DiPath p;
  const int len = c.length();
  for (int x = i;; x = (x + 1) % len) {
    p.vertices.push_back(c.vertices[x]);
    if (x == j) break;
  }
  return p;
}

int cycle_distance(const DiCycle& c, Vertex u, Vertex v) {
  int i = c.position(u);
  int j = c.position(v);
  if (i < 0 || j < 0) {
    throw Error(ErrorKind::NotOnCycle,
                "segment endpoints " + std::to_string(u) + "," + std::to_string(v));
  }
  return (j - i + c.length()) % c.length();
}

DiPath concat(const DiPath& p, const DiPath& q) {
  DiPath r = p;
  r.vertices.insert(r.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
  return r;
}

// Iterative Tarjan; components come out in reverse topological order.
std::vector<std::vector<Vertex>> strong_components(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> comps;
  int counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      auto succ = d.out_neighbors(f.v);
      if (f.next < succ.size()) {
        Vertex w = succ[f.next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

bool is_strong(const Digraph& d) {
  return d.vertex_count() >= 1 && strong_components(d).size() == 1;
}

Contraction contract(const Digraph& d, std::span<const Vertex> s) {
  const int n = d.vertex_count();
  if (s.empty()) throw Error(ErrorKind::EmptySet, "contraction of an empty set");
  std::vector<bool> in_s(n, false);
  for (Vertex v : s) {
    check_vertex(n, v);
    in_s[v] = true;
  }
  Contraction out;
  PreimageMap& pm = out.preimage;
  pm.target.assign(n, -1);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_s[v]) {
      pm.target[v] = next++;
      pm.images.push_back({v});
    }
  }
  pm.contracted = next;
  pm.images.emplace_back();
  for (Vertex v = 0; v < n; ++v) {
    if (in_s[v]) {
      pm.target[v] = pm.contracted;
      pm.images.back().push_back(v);
    }
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    Vertex t = pm.target[a.tail];
    Vertex h = pm.target[a.head];
    if (t != h) arcs.push_back({t, h});
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  out.digraph = Digraph::build(next + 1, arcs);
  return out;
}

InducedSubdigraph induced(const Digraph& d, std::span<const Vertex> s) {
  InducedSubdigraph out;
  out.local.assign(d.vertex_count(), -1);
  for (Vertex v : s) check_vertex(d.vertex_count(), v);
  out.original.assign(s.begin(), s.end());
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()), out.original.end());
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    out.local[out.original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (out.local[a.tail] >= 0 && out.local[a.head] >= 0) {
      arcs.push_back({out.local[a.tail], out.local[a.head]});
    }
  }
  out.digraph = Digraph::build(static_cast<int>(out.original.size()), arcs);
  return out;
}

Digraph relabeled(const Digraph& d, std::span<const Vertex> perm) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return Digraph::build(d.vertex_count(), arcs);
}

Digraph with_arc(const Digraph& d, Arc a) {
  if (d.has_arc(a.tail, a.head)) return d;
  std::vector<Arc> arcs = d.arcs();
  arcs.push_back(a);
  return Digraph::build(d.vertex_count(), arcs);
}

}  // namespace twoblock
