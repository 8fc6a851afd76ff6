#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "twoblock/detection.hpp"
#include "twoblock/error.hpp"
#include "twoblock/harness.hpp"

namespace twoblock {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Vertex> random_perm(int n, Rng& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<Arc> hamiltonian_arcs(int n, Rng& rng) {
  const std::vector<Vertex> p = random_perm(n, rng);
  std::vector<Arc> arcs;
  if (n < 2) return arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({p[i], p[(i + 1) % n]});
  return arcs;
}

// Cycles of length in [min_cycle, max_cycle] glued at single vertices.
std::vector<Arc> cactus_arcs(int n, int min_cycle, int max_cycle, Rng& rng) {
  std::vector<std::vector<Vertex>> cycles;
  int next = 0;
  const int first = std::min(n, uniform(rng, min_cycle, std::max(min_cycle, max_cycle)));
  std::vector<Vertex> c0(first);
  std::iota(c0.begin(), c0.end(), 0);
  next = first;
  if (n - next > 0 && n - next < min_cycle - 1) {
    while (next < n) c0.push_back(next++);
  }
  cycles.push_back(c0);
  while (next < n) {
    const int left = n - next;
    int fresh = std::min(left, uniform(rng, min_cycle - 1, std::max(min_cycle, max_cycle) - 1));
    if (left - fresh > 0 && left - fresh < min_cycle - 1) fresh = left;
    std::vector<Vertex> c{uniform(rng, 0, next - 1)};
    for (int i = 0; i < fresh; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  const std::vector<Vertex> label = random_perm(n, rng);
  std::set<Arc> arcs;
  for (const auto& c : cycles) {
    const int len = static_cast<int>(c.size());
    if (len < 2) continue;
    for (int i = 0; i < len; ++i) arcs.insert({label[c[i]], label[c[(i + 1) % len]]});
  }
  return {arcs.begin(), arcs.end()};
}

// Adds shuffled candidate arcs one at a time, keeping each only while the
// exhaustive detector still reports no c(k, ell).
Digraph grow_ckl_free(int n, std::vector<Arc> arcs, int k, int ell, Rng& rng, int max_chords,
                      const SearchConfig& config) {
  SearchConfig strict = config;
  strict.strict = true;
  std::set<Arc> present(arcs.begin(), arcs.end());
  std::vector<Arc> candidates;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !present.contains({u, v})) candidates.push_back({u, v});
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  if (static_cast<int>(candidates.size()) > max_chords) candidates.resize(max_chords);
  Digraph d = Digraph::build(n, arcs);
  if (found(find_two_block_cycle(d, k, ell, strict))) {
    throw Error(ErrorKind::PreconditionViolated, "base digraph already contains c(k,ell)");
  }
  for (const Arc& a : candidates) {
    arcs.push_back(a);
    Digraph trial = Digraph::build(n, arcs);
    if (found(find_two_block_cycle(trial, k, ell, strict))) {
      arcs.pop_back();
    } else {
      d = std::move(trial);
    }
  }
  return d;
}

void check_n(int n, const SearchConfig& config) {
  if (n < 1) throw Error(ErrorKind::PreconditionViolated, "need n >= 1");
  if (n > config.detect_cap) {
    throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " beyond the detection cap");
  }
}

}  // namespace

Digraph random_strong_ckl_free(int n, int k, int ell, std::uint64_t seed,
                               const SearchConfig& config) {
  if (k < 2 || ell < 1 || ell > k) {
    throw Error(ErrorKind::PreconditionViolated, "need k >= 2 and k >= ell >= 1");
  }
  return random_hamiltonian_ckl_free(n, k, ell, seed, config);
}

Digraph random_hamiltonian_ckl_free(int n, int k, int ell, std::uint64_t seed,
                                    const SearchConfig& config) {
  if (k < 1 || ell < 1 || k + ell < 3) {
    throw Error(ErrorKind::PreconditionViolated, "need k, ell >= 1 and k + ell >= 3");
  }
  check_n(n, config);
  Rng rng(seed);
  return grow_ckl_free(n, hamiltonian_arcs(n, rng), k, ell, rng, 1 << 30, config);
}

Digraph random_cycle_tree_ckl_free(int n, int k, int ell, int min_cycle, std::uint64_t seed,
                                   int max_chords, const SearchConfig& config) {
  if (k < 1 || ell < 1 || min_cycle < 2) {
    throw Error(ErrorKind::PreconditionViolated, "need k, ell >= 1 and cycles of length >= 2");
  }
  check_n(n, config);
  Rng rng(seed);
  std::vector<Arc> base = cactus_arcs(n, min_cycle, min_cycle + 3, rng);
  return grow_ckl_free(n, std::move(base), k, ell, rng, max_chords, config);
}

Digraph random_hamiltonian_min_degree(int n, int min_degree, std::uint64_t seed) {
  if (n < 2 || min_degree > n - 1) {
    throw Error(ErrorKind::PreconditionViolated, "need n > min_degree and n >= 2");
  }
  Rng rng(seed);
  std::vector<Arc> arcs = hamiltonian_arcs(n, rng);
  std::vector<std::set<Vertex>> nbr(n);
  for (const Arc& a : arcs) {
    nbr[a.tail].insert(a.head);
    nbr[a.head].insert(a.tail);
  }
  std::set<Arc> present(arcs.begin(), arcs.end());
  while (true) {
    std::vector<Vertex> low;
    for (Vertex v = 0; v < n; ++v) {
      if (static_cast<int>(nbr[v].size()) < min_degree) low.push_back(v);
    }
    if (low.empty()) break;
    const Vertex v = low[uniform(rng, 0, static_cast<int>(low.size()) - 1)];
    std::vector<Vertex> options;
    for (Vertex w = 0; w < n; ++w) {
      if (w != v && !nbr[v].contains(w)) options.push_back(w);
    }
    const Vertex w = options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
    const Arc a = uniform(rng, 0, 1) == 0 ? Arc{v, w} : Arc{w, v};
    arcs.push_back(a);
    present.insert(a);
    nbr[v].insert(w);
    nbr[w].insert(v);
  }
  // A few extra arcs, some of them opposite to existing ones, for variety.
  const int extra = uniform(rng, 0, n);
  for (int i = 0; i < extra; ++i) {
    const Arc a{uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)};
    if (a.tail != a.head && present.insert(a).second) arcs.push_back(a);
  }
  return Digraph::build(n, arcs);
}

Digraph random_strong_digraph(int n, double density, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::PreconditionViolated, "need n >= 1");
  Rng rng(seed);
  std::vector<Arc> base = cactus_arcs(n, 2, std::max(2, n), rng);
  std::set<Arc> arcs(base.begin(), base.end());
  std::bernoulli_distribution coin(density);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) arcs.insert({u, v});
    }
  }
  return Digraph::build(n, std::vector<Arc>(arcs.begin(), arcs.end()));
}

}  // namespace twoblock
