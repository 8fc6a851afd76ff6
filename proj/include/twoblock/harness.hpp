#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twoblock/config.hpp"
#include "twoblock/digraph.hpp"
#include "twoblock/json_io.hpp"

namespace twoblock {

// n x n adjacency matrix, row-major with the diagonal included, read as one
// big-endian binary number (row 0 most significant) and printed in lowercase
// hex without leading zeros ("0" for the empty digraph).
std::string encode_adjacency(const Digraph& d);
// Throws ParseError on malformed hex, a set diagonal bit, or overflow.
Digraph decode_adjacency(int n, std::string_view hex);

// Minimum encoding over all vertex permutations. Throws CapExceeded for n > 7.
std::string canonical_form(const Digraph& d);

bool is_tournament(const Digraph& d);

// The five-vertex tournament with no c(4,1) and chromatic number 5.
Digraph figure1_tournament();

// All 2^(n choose 2) labeled tournaments in a fixed order (bit i of the index
// orients the i-th pair a<b as b->a), or one per isomorphism class (the
// first labeled representative) with dedup. Throws CapExceeded for n > 7.
std::vector<Digraph> enumerate_tournaments(int n, bool dedup = false);
Digraph tournament_from_index(int n, std::uint64_t index);

// Generators. All are deterministic per seed.
//
// Random Hamiltonian cycle plus random chords, each kept only while
// exhaustive detection still reports no c(k, ell). Requires k >= 2 and
// k >= ell >= 1; throws CapExceeded beyond config.detect_cap.
Digraph random_strong_ckl_free(int n, int k, int ell, std::uint64_t seed,
                               const SearchConfig& config = default_config());
// Same construction for any k, ell >= 1 with k + ell >= 3.
Digraph random_hamiltonian_ckl_free(int n, int k, int ell, std::uint64_t seed,
                                    const SearchConfig& config = default_config());
// A random cactus of directed cycles (lengths >= min_cycle) plus c(k, ell)-free
// chords, so contraction traces produce multi-cycle trees. At most
// max_chords candidate chords are tried.
Digraph random_cycle_tree_ckl_free(int n, int k, int ell, int min_cycle, std::uint64_t seed,
                                   int max_chords = 1 << 30,
                                   const SearchConfig& config = default_config());
// Hamiltonian digraph whose underlying minimum degree is at least min_degree.
// Requires n > min_degree.
Digraph random_hamiltonian_min_degree(int n, int min_degree, std::uint64_t seed);
// Strong digraph: a random cactus plus independent extra arcs with
// probability density.
Digraph random_strong_digraph(int n, double density, std::uint64_t seed);

struct PairVerdict {
  int k = 1;
  int ell = 1;
  bool present = false;
  friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

struct InstanceRecord {
  std::int64_t instance_id = 0;
  std::uint64_t seed = 0;
  int vertex_count = 0;
  std::string encoding;
  bool strong = false;
  bool tournament = false;
  bool hamiltonian = false;
  std::optional<int> chi;
  std::optional<int> longest_cycle;
  std::vector<PairVerdict> verdicts;
  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

void to_json(json& j, const InstanceRecord& r);
void from_json(const json& j, InstanceRecord& r);

// Measures an instance: tags, exact χ and longest cycle when within caps,
// and one exhaustive verdict per pair.
InstanceRecord measure_instance(std::int64_t id, std::uint64_t seed, const Digraph& d,
                                std::span<const PairVerdict> pairs,
                                const SearchConfig& config = default_config());

// Decodes and recomputes every stored property; returns a description of the
// first mismatch, or nullopt if the record reproduces exactly.
std::optional<std::string> reverify(const InstanceRecord& r,
                                    const SearchConfig& config = default_config());

// Runs fn(i) for i in [0, count) on a pool of `workers` threads and returns
// the results in index order. workers <= 0 uses the hardware concurrency.
template <typename T>
std::vector<T> parallel_map(std::size_t count, int workers, const std::function<T(std::size_t)>& fn);

// Pairs (k, ell) with k >= ell >= 1 and k + ell = n, largest k first.
std::vector<PairVerdict> problem1_pairs(int n);

struct Problem1Result {
  int n = 0;
  std::int64_t labeled = 0;         // labeled tournaments enumerated
  std::int64_t strong = 0;          // strong among them
  std::vector<InstanceRecord> hits;  // strong tournaments missing some pair
  std::int64_t hit_classes = 0;     // isomorphism classes among the hits
};

// Requires 4 <= n <= 7.
Problem1Result search_problem1(int n, const SearchConfig& config = default_config(),
                               int workers = 0);

struct BondyReport {
  std::vector<InstanceRecord> records;  // chi and longest_cycle filled
  int violations = 0;
};

BondyReport audit_bondy(std::span<const Digraph> instances, std::uint64_t seed,
                        const SearchConfig& config = default_config(), int workers = 0);

struct BwRow {
  int class_index = 0;
  std::string canonical;
  bool strong = false;
  int k = 1;
  int ell = 1;
  bool present = false;
};

struct BwReport {
  int n = 0;
  std::int64_t labeled = 0;
  int classes = 0;
  std::vector<BwRow> rows;
  int violations = 0;  // rows with present == false

  // Header `class,canonical,strong,k,ell,present` and one row per line.
  std::string csv() const;
};

// One row per (tournament isomorphism class, pair). Requires 4 <= n <= 6.
BwReport audit_bw_claim(int n, const SearchConfig& config = default_config());

}  // namespace twoblock

#include "twoblock/parallel_map.inl"
