#include "twoblock/cycle_tree.hpp"

#include <algorithm>
#include <string>

#include "twoblock/error.hpp"

namespace twoblock {

namespace {

struct Node {
  bool is_cycle;
  int id;
  friend bool operator==(const Node&, const Node&) = default;
};

}  // namespace

CycleTree CycleTree::build(std::vector<DiCycle> cycles) {
  if (cycles.empty()) throw Error(ErrorKind::StructuralViolation, "cycle-tree without cycles");
  CycleTree t;
  Vertex max_v = -1;
  for (const DiCycle& c : cycles) {
    if (c.length() < 2) throw Error(ErrorKind::StructuralViolation, "cycle shorter than 2");
    for (Vertex v : c.vertices) {
      if (v < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex in cycle-tree");
      max_v = std::max(max_v, v);
    }
  }
  t.home_.assign(max_v + 1, -1);
  t.cycles_ = std::move(cycles);
  const int m = t.cycle_count();
  t.parent_cycle_.assign(m, -1);
  t.parent_vertex_.assign(m, -1);
  t.depth_.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    const DiCycle& c = t.cycles_[i];
    std::vector<Vertex> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::StructuralViolation, "cycle " + std::to_string(i) + " repeats a vertex");
    }
    std::vector<Vertex> shared;
    for (Vertex v : c.vertices) {
      if (t.home_[v] != -1) shared.push_back(v);
    }
    if (i > 0) {
      if (shared.size() != 1) {
        throw Error(ErrorKind::StructuralViolation,
                    "cycle " + std::to_string(i) + " meets earlier cycles in " +
                        std::to_string(shared.size()) + " vertices");
      }
      t.parent_vertex_[i] = shared.front();
      t.parent_cycle_[i] = t.home_[shared.front()];
      t.depth_[i] = t.depth_[t.parent_cycle_[i]] + 1;
    }
    for (Vertex v : c.vertices) {
      if (t.home_[v] == -1) {
        t.home_[v] = i;
        t.vertices_.push_back(v);
      }
    }
  }
  std::sort(t.vertices_.begin(), t.vertices_.end());
  return t;
}

bool CycleTree::contains(Vertex v) const {
  return v >= 0 && v < static_cast<Vertex>(home_.size()) && home_[v] != -1;
}

int CycleTree::home_cycle(Vertex v) const {
  if (!contains(v)) throw Error(ErrorKind::NotOnCycle, "vertex " + std::to_string(v) + " not in tree");
  return home_[v];
}

bool CycleTree::share_cycle(Vertex a, Vertex b) const {
  return cycles_[home_cycle(a)].contains(b) || cycles_[home_cycle(b)].contains(a);
}

namespace {

std::vector<Node> incidence_path(Node a, Node b, const CycleTree& t) {
  auto level = [&](Node x) {
    return x.is_cycle ? 2 * t.depth(x.id) : 2 * t.depth(t.home_cycle(x.id)) + 1;
  };
  auto parent = [&](Node x) {
    return x.is_cycle ? Node{false, t.parent_vertex(x.id)} : Node{true, t.home_cycle(x.id)};
  };
  std::vector<Node> up_a;
  std::vector<Node> up_b;
  while (level(a) > level(b)) {
    up_a.push_back(a);
    a = parent(a);
  }
  while (level(b) > level(a)) {
    up_b.push_back(b);
    b = parent(b);
  }
  while (!(a == b)) {
    up_a.push_back(a);
    up_b.push_back(b);
    a = parent(a);
    b = parent(b);
  }
  up_a.push_back(a);
  up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
  return up_a;
}

}  // namespace

std::vector<int> CycleTree::cycle_path(int a, int b) const {
  std::vector<int> out;
  for (Node x : incidence_path({true, a}, {true, b}, *this)) {
    if (x.is_cycle) out.push_back(x.id);
  }
  return out;
}

CycleTree::Route CycleTree::route(Vertex x, Vertex y) const {
  Route r;
  if (x == y) {
    r.cycles.push_back(home_cycle(x));
    return r;
  }
  const std::vector<Node> path = incidence_path({false, x}, {false, y}, *this);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i].is_cycle) {
      r.cycles.push_back(path[i].id);
    } else if (i != 0 && i + 1 != path.size()) {
      r.junctions.push_back(path[i].id);
    }
  }
  return r;
}

DiPath CycleTree::tree_path(Vertex u, Vertex v) const {
  home_cycle(u);
  home_cycle(v);
  if (u == v) return DiPath{{u}};
  const std::vector<Node> path = incidence_path({false, u}, {false, v}, *this);
  DiPath out{{u}};
  for (std::size_t i = 1; i + 1 < path.size(); i += 2) {
    out = concat(out, cycle_segment(cycles_[path[i].id], path[i - 1].id, path[i + 1].id));
  }
  return out;
}

bool CycleTree::is_cycle_ancestor(int anc, int desc) const {
  for (int c = desc; c != -1; c = parent_cycle_[c]) {
    if (c == anc) return true;
  }
  return false;
}

CycleTree CycleTree::relabeled(std::span<const Vertex> map) const {
  std::vector<DiCycle> out = cycles_;
  for (DiCycle& c : out) {
    for (Vertex& v : c.vertices) v = map[v];
  }
  return build(std::move(out));
}

}  // namespace twoblock
