#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "twoblock/digraph.hpp"
#include "twoblock/exact_color.hpp"

namespace twoblock {

// Edge-list format: the first non-comment line holds n, every further line
// one 0-based `tail head` pair. `#` starts a comment. Errors are ParseError
// with a "line N:" prefix.
Digraph parse_edge_list(std::string_view text);
Digraph read_edge_list(const std::filesystem::path& path);
std::string format_edge_list(const Digraph& d);
void write_edge_list(const std::filesystem::path& path, const Digraph& d);

// Graphviz digraph; with a colouring every vertex gets a fill colour keyed by
// its class.
std::string write_dot(const Digraph& d, const Coloring* coloring = nullptr);

}  // namespace twoblock
