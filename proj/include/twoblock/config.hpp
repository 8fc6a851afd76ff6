#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace twoblock {

// Size caps for the exact solvers. In strict mode a call beyond its cap throws
// CapExceeded; in heuristic mode it degrades to a budgeted search whose
// negative answers are reported as unverified.
struct SearchConfig {
  int detect_cap = 12;
  int longest_cycle_cap = 20;
  int chromatic_cap = 16;
  bool strict = true;

  std::uint64_t heuristic_seed = 0x5eed;
  std::uint64_t heuristic_budget = 2'000'000;  // DFS nodes per heuristic call

  // Applies one cap to every solver.
  SearchConfig with_cap(int cap) const {
    SearchConfig c = *this;
    c.detect_cap = c.longest_cycle_cap = c.chromatic_cap = cap;
    return c;
  }
};

// Parses a TWOBLOCK_CAP value. Accepted forms: "14" (all caps) or a
// comma-separated list such as "detect=14,longest=20,chromatic=16".
// Returns nullopt on malformed input.
std::optional<SearchConfig> parse_cap_override(std::string_view text, SearchConfig base);

// Defaults with the TWOBLOCK_CAP environment override applied when present
// and well-formed.
SearchConfig default_config();

}  // namespace twoblock
