#pragma once

#include <bit>
#include <vector>

#include "twoblock/digraph.hpp"

namespace twoblock {

// Ascending list of the vertices in m.
inline std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> out;
  out.reserve(std::popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Vertices reachable from `start` moving only into `allowed`; includes start.
inline Mask reach_from(const Digraph& d, Mask start, Mask allowed) {
  Mask seen = start;
  Mask frontier = start;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= d.out_mask(std::countr_zero(f));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace twoblock
