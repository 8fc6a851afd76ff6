#pragma once

#include <optional>
#include <vector>

#include "twoblock/config.hpp"
#include "twoblock/digraph.hpp"

namespace twoblock {

struct Coloring {
  std::vector<int> colors;  // per vertex, in [0, palette_size)
  int palette_size = 0;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Deletion sequence: each vertex, when removed, has at most `bound`
// neighbours still present.
struct EliminationOrder {
  std::vector<Vertex> order;
  int bound = 0;
};

// Independent checkers.
bool is_proper_coloring(const UGraph& g, const Coloring& c);
// Largest number of remaining neighbours seen while replaying `order` as a
// deletion sequence, or nullopt if `order` is not a permutation of V(g).
std::optional<int> replay_elimination(const UGraph& g, const std::vector<Vertex>& order);
bool is_valid_elimination(const UGraph& g, const EliminationOrder& e);

// Exact c-colourability by DSATUR backtracking. Throws CapExceeded beyond
// config.chromatic_cap vertices.
std::optional<Coloring> k_colorable(const UGraph& g, int c,
                                    const SearchConfig& config = default_config());

struct ChromaticResult {
  int chi = 0;
  Coloring witness;
};

ChromaticResult chromatic_number(const UGraph& g, const SearchConfig& config = default_config());

// Minimum-degree peeling, lowest id on ties. The bound is the degeneracy.
EliminationOrder degeneracy(const UGraph& g);

// Colours vertices from the last deleted to the first, each with the smallest
// colour unused by already-coloured neighbours: at most bound + 1 colours.
Coloring greedy_color_by_order(const UGraph& g, const EliminationOrder& order);

// Relabels colours to 0..used-1 in order of first appearance.
Coloring compacted(Coloring c);

}  // namespace twoblock
