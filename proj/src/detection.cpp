#include "twoblock/detection.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

#include "twoblock/error.hpp"
#include "twoblock/search_util.hpp"

namespace twoblock {

namespace {

struct BudgetExhausted {};

class Budget {
 public:
  explicit Budget(std::optional<std::uint64_t> limit) : limit_(limit) {}
  void tick() {
    if (limit_ && ++used_ > *limit_) throw BudgetExhausted{};
  }

 private:
  std::optional<std::uint64_t> limit_;
  std::uint64_t used_ = 0;
};

// Searches one ordered pair (u, v) for a path A of length >= big and an
// internally disjoint path B of length >= small.
class PairSearch {
 public:
  PairSearch(const Digraph& d, Vertex u, Vertex v, int big, int small, Budget& budget,
             std::mt19937_64* rng)
      : d_(d), all_(d.all_mask()), u_(u), v_(v), big_(big), small_(small), budget_(budget),
        rng_(rng) {}

  bool run() {
    a_.assign(1, u_);
    return extend_a(u_, bit(u_));
  }

  DiPath path_a() const { return DiPath{a_}; }
  DiPath path_b() const { return DiPath{b_}; }

 private:
  std::vector<Vertex> order(Mask m) const {
    std::vector<Vertex> out = mask_vertices(m);
    if (rng_) std::shuffle(out.begin(), out.end(), *rng_);
    return out;
  }

  bool extend_a(Vertex c, Mask used) {
    if (c == v_) {
      const int len = static_cast<int>(a_.size()) - 1;
      if (len < big_) return false;
      const Mask interior = used & ~bit(u_) & ~bit(v_);
      const int need = len == 1 ? std::max(small_, 2) : small_;
      const std::uint64_t key = interior ^ (static_cast<std::uint64_t>(need) << 58);
      if (failed_b_.contains(key)) return false;
      if (find_b(interior, need)) return true;
      failed_b_.insert(key);
      return false;
    }
    for (Vertex w : order(d_.out_mask(c) & ~used)) {
      budget_.tick();
      const Mask used_after = used | bit(w);
      if (w != v_) {
        const Mask r = reach_from(d_, bit(w), all_ & ~used_after);
        if (!(r & bit(v_))) continue;
        const int len_after = static_cast<int>(a_.size());
        if (len_after + std::popcount(r & ~bit(w)) < big_) continue;
        const Mask interior = used_after & ~bit(u_) & ~bit(v_);
        if (!(reach_from(d_, bit(u_), all_ & ~interior) & bit(v_))) continue;
      }
      a_.push_back(w);
      if (extend_a(w, used_after)) return true;
      a_.pop_back();
    }
    return false;
  }

  bool find_b(Mask interior, int need) {
    b_.assign(1, u_);
    blocked_ = interior;
    need_ = need;
    return extend_b(u_, bit(u_) | interior);
  }

  bool extend_b(Vertex c, Mask used) {
    const int len = static_cast<int>(b_.size()) - 1;
    for (Vertex w : order(d_.out_mask(c) & ~used)) {
      budget_.tick();
      if (w == v_) {
        if (len + 1 >= need_) {
          b_.push_back(w);
          return true;
        }
        continue;
      }
      const Mask used_after = used | bit(w);
      const Mask r = reach_from(d_, bit(w), all_ & ~used_after);
      if (!(r & bit(v_))) continue;
      if (len + 1 + std::popcount(r & ~bit(w)) < need_) continue;
      b_.push_back(w);
      if (extend_b(w, used_after)) return true;
      b_.pop_back();
    }
    return false;
  }

  const Digraph& d_;
  const Mask all_;
  const Vertex u_;
  const Vertex v_;
  const int big_;
  const int small_;
  Budget& budget_;
  std::mt19937_64* rng_;

  std::vector<Vertex> a_;
  std::vector<Vertex> b_;
  Mask blocked_ = 0;
  int need_ = 0;
  std::unordered_set<std::uint64_t> failed_b_;
};

}  // namespace

DetectionResult find_two_block_cycle(const Digraph& d, int k, int ell,
                                     const SearchConfig& config) {
  if (k < 1 || ell < 1) {
    throw Error(ErrorKind::PreconditionViolated, "k and ell must be positive");
  }
  const int n = d.vertex_count();
  const bool exhaustive = n <= config.detect_cap && d.fits_mask();
  if (!exhaustive && (config.strict || !d.fits_mask())) {
    throw Error(ErrorKind::CapExceeded, "two-block detection on " + std::to_string(n) +
                                            " vertices exceeds cap " +
                                            std::to_string(config.detect_cap));
  }

  const int big = std::max(k, ell);
  const int small = std::min(k, ell);

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  std::mt19937_64 rng(config.heuristic_seed);
  std::mt19937_64* rng_ptr = nullptr;
  if (!exhaustive) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    rng_ptr = &rng;
  }
  Budget budget(exhaustive ? std::nullopt : std::optional(config.heuristic_budget));

  AbsenceReport report{k, ell, exhaustive ? SearchMode::Exhaustive : SearchMode::Capped, 0};
  try {
    for (auto [u, v] : pairs) {
      if (reach_from(d, bit(u), d.all_mask()) & bit(v)) {
        PairSearch search(d, u, v, big, small, budget, rng_ptr);
        if (search.run()) {
          TwoBlockCertificate cert{u, v, search.path_a(), search.path_b(), k, ell};
          if (k < ell) std::swap(cert.path_a, cert.path_b);
          return cert;
        }
      }
      ++report.pairs_checked;
    }
  } catch (const BudgetExhausted&) {
    // Heuristic negative: report what was covered.
  }
  return report;
}

bool verify_certificate(const Digraph& d, const TwoBlockCertificate& cert, int k, int ell) {
  if (cert.k_req != k || cert.ell_req != ell) return false;
  return verify_certificate(d, cert);
}

bool verify_certificate(const Digraph& d, const TwoBlockCertificate& cert) {
  if (cert.k_req < 1 || cert.ell_req < 1) return false;
  if (cert.u == cert.v) return false;
  for (const DiPath* p : {&cert.path_a, &cert.path_b}) {
    if (!is_path_in(d, *p)) return false;
    if (p->front() != cert.u || p->back() != cert.v) return false;
  }
  if (cert.path_a.length() < cert.k_req || cert.path_b.length() < cert.ell_req) return false;
  if (cert.path_a.length() == 1 && cert.path_b.length() == 1) return false;
  const auto& a = cert.path_a.vertices;
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    const auto& b = cert.path_b.vertices;
    if (std::find(b.begin() + 1, b.end() - 1, a[i]) != b.end() - 1) return false;
  }
  return true;
}

CycleSearch longest_cycle_search(const Digraph& d, const SearchConfig& config) {
  const int n = d.vertex_count();
  const bool exact = n <= config.longest_cycle_cap && d.fits_mask();
  if (!exact && (config.strict || !d.fits_mask())) {
    throw Error(ErrorKind::CapExceeded, "longest cycle on " + std::to_string(n) +
                                            " vertices exceeds cap " +
                                            std::to_string(config.longest_cycle_cap));
  }
  Budget budget(exact ? std::nullopt : std::optional(config.heuristic_budget));

  std::vector<Vertex> best;
  std::vector<Vertex> path;
  bool complete = true;

  // Cycles whose minimum vertex is s, through vertices > s only.
  auto search_from = [&](Vertex s) {
    const Mask allowed = d.all_mask() & ~((bit(s) << 1) - 1);
    auto dfs = [&](auto&& self, Vertex c, Mask used) -> void {
      const int len = static_cast<int>(path.size());
      if (len >= 2 && d.has_arc(c, s) && len > static_cast<int>(best.size())) best = path;
      for (Vertex w : mask_vertices(d.out_mask(c) & allowed & ~used)) {
        budget.tick();
        const Mask used_after = used | bit(w);
        const Mask r = reach_from(d, bit(w), allowed & ~used_after);
        if (!(d.in_mask(s) & r)) continue;
        if (len + 1 + std::popcount(r & ~bit(w)) <= static_cast<int>(best.size())) continue;
        path.push_back(w);
        self(self, w, used_after);
        path.pop_back();
      }
    };
    path.assign(1, s);
    dfs(dfs, s, bit(s));
  };

  try {
    for (Vertex s = 0; s < n; ++s) {
      if (static_cast<int>(best.size()) >= n - s) break;
      search_from(s);
    }
  } catch (const BudgetExhausted&) {
    complete = false;
  }
  if (best.empty()) {
    if (complete) throw Error(ErrorKind::Acyclic, "digraph has no cycle");
    // Budget ran out before any cycle closed; fall back to a shortest cycle
    // through the first vertex of a nontrivial strong component.
    for (const auto& comp : strong_components(d)) {
      if (comp.size() < 2) continue;
      const Vertex s = comp.front();
      std::vector<Vertex> parent(n, -1);
      std::vector<Vertex> queue{s};
      for (std::size_t i = 0; i < queue.size() && parent[s] == -1; ++i) {
        for (Vertex w : d.out_neighbors(queue[i])) {
          if (parent[w] == -1) {
            parent[w] = queue[i];
            queue.push_back(w);
          }
        }
      }
      for (Vertex x = parent[s]; x != s; x = parent[x]) best.push_back(x);
      best.push_back(s);
      std::reverse(best.begin(), best.end());
      break;
    }
    if (best.empty()) throw Error(ErrorKind::Acyclic, "digraph has no cycle");
    return {normalized(DiCycle{best}), false};
  }
  return {DiCycle{best}, exact && complete};
}

std::optional<DiCycle> hamiltonian_cycle(const Digraph& d, const SearchConfig& config) {
  const int n = d.vertex_count();
  if (n > config.longest_cycle_cap || n > 30) {
    throw Error(ErrorKind::CapExceeded, "Hamiltonian search on " + std::to_string(n) +
                                            " vertices exceeds cap " +
                                            std::to_string(config.longest_cycle_cap));
  }
  if (n < 2 || !is_strong(d)) return std::nullopt;

  // ends[m] for subsets containing vertex 0, indexed by m >> 1: the set of
  // vertices at which some path from 0 covering exactly m can end.
  const std::size_t subsets = std::size_t{1} << (n - 1);
  std::vector<std::uint32_t> ends(subsets, 0);
  ends[0] = 1;
  for (std::size_t idx = 0; idx < subsets; ++idx) {
    const Mask m = (static_cast<Mask>(idx) << 1) | 1;
    for (Vertex e : mask_vertices(ends[idx])) {
      Mask next = d.out_mask(e) & ~m & d.all_mask();
      for (Vertex w : mask_vertices(next)) ends[(m | bit(w)) >> 1] |= std::uint32_t{1} << w;
    }
  }
  const Mask full = d.all_mask();
  Mask m = full;
  std::vector<Vertex> rev;
  Vertex last = -1;
  for (Vertex e : mask_vertices(ends[full >> 1])) {
    if (d.has_arc(e, 0)) {
      last = e;
      break;
    }
  }
  if (last < 0) return std::nullopt;
  Vertex cur = last;
  while (cur != 0) {
    rev.push_back(cur);
    const Mask prev = m & ~bit(cur);
    Vertex pick = -1;
    for (Vertex p : mask_vertices(ends[prev >> 1])) {
      if (d.has_arc(p, cur)) {
        pick = p;
        break;
      }
    }
    m = prev;
    cur = pick;
  }
  rev.push_back(0);
  std::reverse(rev.begin(), rev.end());
  return DiCycle{rev};
}

namespace {

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

bool same_edge(Arc a, Vertex p, Vertex q) {
  return (a.tail == p && a.head == q) || (a.tail == q && a.head == p);
}

}  // namespace

Digraph crossing_host(const DiCycle& c, Arc chord_uv, Arc chord_xy) {
  std::vector<Arc> arcs;
  Vertex max_v = 0;
  for (int i = 0; i < c.length(); ++i) {
    arcs.push_back({c.vertices[i], c.vertices[(i + 1) % c.length()]});
    max_v = std::max(max_v, c.vertices[i]);
  }
  for (Arc a : {chord_uv, chord_xy}) {
    if (std::find(arcs.begin(), arcs.end(), a) == arcs.end()) arcs.push_back(a);
  }
  return Digraph::build(max_v + 1, arcs);
}

CrossingOutcome crossing_chord_case(const DiCycle& c, Vertex u, Vertex v, Vertex x, Vertex y,
                                    Arc chord_uv, Arc chord_xy, int k, int ell) {
  require(k >= 1 && ell >= 1, ErrorKind::PreconditionViolated, "k and ell must be positive");
  for (Vertex w : {u, v, x, y}) {
    require(c.contains(w), ErrorKind::PreconditionViolated,
            "vertex " + std::to_string(w) + " not on the cycle");
  }
  std::vector<Vertex> four{u, v, x, y};
  std::sort(four.begin(), four.end());
  require(std::adjacent_find(four.begin(), four.end()) == four.end(),
          ErrorKind::PreconditionViolated, "u, v, x, y must be distinct");
  require(same_edge(chord_uv, u, v), ErrorKind::PreconditionViolated, "first chord not on {u,v}");
  require(same_edge(chord_xy, x, y), ErrorKind::PreconditionViolated, "second chord not on {x,y}");
  for (auto [p, q] : {std::pair{u, v}, std::pair{x, y}}) {
    const bool cycle_edge = c.successor(p) == q || c.successor(q) == p;
    require(!cycle_edge, ErrorKind::NotAChord,
            "{" + std::to_string(p) + "," + std::to_string(q) + "} is an edge of the cycle");
  }
  const int uv = cycle_distance(c, u, v);
  const int ux = cycle_distance(c, u, x);
  const int uy = cycle_distance(c, u, y);
  require(ux < uv && uy > uv, ErrorKind::PreconditionViolated,
          "need x inside uCv and y inside vCu");
  const int len_ux = ux;
  const int len_vy = uy - uv;
  require(len_ux >= k - 1 && len_vy >= ell - 1, ErrorKind::PreconditionViolated,
          "need |uCx| >= k-1 and |vCy| >= ell-1");

  const bool forward_uv = chord_uv.tail == u;
  const bool forward_xy = chord_xy.tail == x;
  const DiPath ucx = cycle_segment(c, u, x);
  const DiPath vcy = cycle_segment(c, v, y);
  auto arc_path = [](Vertex a, Vertex b) { return DiPath{{a, b}}; };

  TwoBlockCertificate cert;
  cert.k_req = k;
  cert.ell_req = ell;
  if (forward_uv && forward_xy) {
    cert.u = u;
    cert.v = y;
    cert.path_a = concat(ucx, arc_path(x, y));
    cert.path_b = concat(arc_path(u, v), vcy);
  } else if (forward_uv) {
    if (len_ux == k - 1) return ExceptionA{};
    cert.u = u;
    cert.v = x;
    cert.path_a = ucx;
    cert.path_b = concat(concat(arc_path(u, v), vcy), arc_path(y, x));
  } else if (forward_xy) {
    if (len_vy == ell - 1) return ExceptionB{};
    cert.u = v;
    cert.v = y;
    cert.path_a = concat(concat(arc_path(v, u), ucx), arc_path(x, y));
    cert.path_b = vcy;
  } else {
    cert.u = v;
    cert.v = x;
    cert.path_a = concat(arc_path(v, u), ucx);
    cert.path_b = concat(vcy, arc_path(y, x));
  }
  if (!verify_certificate(crossing_host(c, chord_uv, chord_xy), cert, k, ell)) {
    throw Error(ErrorKind::LemmaViolation, "crossing construction produced an invalid certificate");
  }
  return cert;
}

}  // namespace twoblock
