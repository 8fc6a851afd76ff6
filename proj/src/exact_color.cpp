#include "twoblock/exact_color.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "twoblock/error.hpp"
#include "twoblock/search_util.hpp"

namespace twoblock {

bool is_proper_coloring(const UGraph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count()) return false;
  for (int col : c.colors) {
    if (col < 0 || col >= c.palette_size) return false;
  }
  for (const Edge& e : g.edges()) {
    if (c.colors[e.a] == c.colors[e.b]) return false;
  }
  return true;
}

std::optional<int> replay_elimination(const UGraph& g, const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  std::vector<bool> removed(n, false);
  for (Vertex v : order) {
    if (v < 0 || v >= n || removed[v]) return std::nullopt;
    removed[v] = true;
  }
  std::fill(removed.begin(), removed.end(), false);
  int worst = 0;
  for (Vertex v : order) {
    int remaining = 0;
    for (Vertex w : g.neighbors(v)) remaining += removed[w] ? 0 : 1;
    worst = std::max(worst, remaining);
    removed[v] = true;
  }
  return worst;
}

bool is_valid_elimination(const UGraph& g, const EliminationOrder& e) {
  auto worst = replay_elimination(g, e.order);
  return worst && *worst <= e.bound;
}

namespace {

bool is_complete(const UGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::optional<std::vector<int>> two_coloring(const UGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex x = queue[i];
      for (Vertex w : g.neighbors(x)) {
        if (side[w] == -1) {
          side[w] = 1 - side[x];
          queue.push_back(w);
        } else if (side[w] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

class Dsatur {
 public:
  Dsatur(const UGraph& g, int c) : g_(g), c_(c), colors_(g.vertex_count(), -1) {}

  bool solve() { return extend(0, 0); }
  const std::vector<int>& colors() const { return colors_; }

 private:
  bool extend(int colored, int used) {
    const int n = g_.vertex_count();
    if (colored == n) return true;
    Vertex pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    std::uint64_t pick_forbidden = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (colors_[v] != -1) continue;
      std::uint64_t forbidden = 0;
      int deg = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (colors_[w] != -1) {
          forbidden |= std::uint64_t{1} << colors_[w];
        } else {
          ++deg;
        }
      }
      const int sat = std::popcount(forbidden);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
        pick_forbidden = forbidden;
      }
    }
    const int limit = std::min(c_, used + 1);
    for (int col = 0; col < limit; ++col) {
      if (pick_forbidden & (std::uint64_t{1} << col)) continue;
      colors_[pick] = col;
      if (extend(colored + 1, std::max(used, col + 1))) return true;
    }
    colors_[pick] = -1;
    return false;
  }

  const UGraph& g_;
  const int c_;
  std::vector<int> colors_;
};

int max_clique_size(const UGraph& g) {
  int best = 0;
  auto expand = [&](auto&& self, int size, Mask cand) -> void {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(cand) <= best) return;
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      Vertex v = std::countr_zero(cand);
      cand &= cand - 1;
      self(self, size + 1, cand & g.neighbor_mask(v));
    }
  };
  expand(expand, 0, g.vertex_count() >= kMaskBits ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1);
  return best;
}

}  // namespace

std::optional<Coloring> k_colorable(const UGraph& g, int c, const SearchConfig& config) {
  const int n = g.vertex_count();
  if (c < 0) throw Error(ErrorKind::PreconditionViolated, "negative palette size");
  if (n == 0) return Coloring{{}, c};
  if (c == 0) return std::nullopt;
  if (g.edge_count() == 0) return Coloring{std::vector<int>(n, 0), c};
  if (is_complete(g)) {
    if (c < n) return std::nullopt;
    Coloring out{std::vector<int>(n), c};
    for (Vertex v = 0; v < n; ++v) out.colors[v] = v;
    return out;
  }
  if (c == 1) return std::nullopt;
  if (auto side = two_coloring(g)) return Coloring{*side, c};
  if (c == 2) return std::nullopt;
  if (n > config.chromatic_cap || n > kMaskBits) {
    throw Error(ErrorKind::CapExceeded, "colouring on " + std::to_string(n) +
                                            " vertices exceeds cap " +
                                            std::to_string(config.chromatic_cap));
  }
  if (c >= n) {
    Coloring out{std::vector<int>(n), c};
    for (Vertex v = 0; v < n; ++v) out.colors[v] = v;
    return out;
  }
  Dsatur search(g, std::min(c, 64));
  if (!search.solve()) return std::nullopt;
  return Coloring{search.colors(), c};
}

ChromaticResult chromatic_number(const UGraph& g, const SearchConfig& config) {
  const int n = g.vertex_count();
  if (n == 0) return {0, Coloring{{}, 0}};
  if (g.edge_count() == 0) return {1, Coloring{std::vector<int>(n, 0), 1}};
  if (is_complete(g)) return {n, *k_colorable(g, n, config)};
  if (auto side = two_coloring(g)) return {2, Coloring{*side, 2}};
  if (n > config.chromatic_cap || n > kMaskBits) {
    throw Error(ErrorKind::CapExceeded, "chromatic number on " + std::to_string(n) +
                                            " vertices exceeds cap " +
                                            std::to_string(config.chromatic_cap));
  }
  for (int c = std::max(3, max_clique_size(g));; ++c) {
    if (auto col = k_colorable(g, c, config)) return {c, *col};
  }
}

EliminationOrder degeneracy(const UGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  EliminationOrder out;
  out.order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    }
    out.bound = std::max(out.bound, deg[pick]);
    out.order.push_back(pick);
    removed[pick] = true;
    for (Vertex w : g.neighbors(pick)) {
      if (!removed[w]) --deg[w];
    }
  }
  return out;
}

Coloring greedy_color_by_order(const UGraph& g, const EliminationOrder& order) {
  const int n = g.vertex_count();
  Coloring out{std::vector<int>(n, -1), 0};
  std::vector<bool> taken;
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    const Vertex v = *it;
    taken.assign(g.degree(v) + 1, false);
    for (Vertex w : g.neighbors(v)) {
      const int col = out.colors[w];
      if (col >= 0 && col < static_cast<int>(taken.size())) taken[col] = true;
    }
    int col = 0;
    while (taken[col]) ++col;
    out.colors[v] = col;
    out.palette_size = std::max(out.palette_size, col + 1);
  }
  return out;
}

Coloring compacted(Coloring c) {
  std::vector<int> remap;
  int next = 0;
  for (int& col : c.colors) {
    if (col >= static_cast<int>(remap.size())) remap.resize(col + 1, -1);
    if (remap[col] == -1) remap[col] = next++;
    col = remap[col];
  }
  c.palette_size = next;
  return c;
}

}  // namespace twoblock
