#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twosphere/skeleton.hpp"

namespace twosphere {

/// Tree decomposition of a graph on vertices 0..n-1. Bags are sorted vertex
/// lists; the convention for the empty graph is a single empty bag (width -1).
struct TreeDecomposition {
  std::vector<std::vector<std::uint32_t>> bags;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;

  int width() const;
};

/// Min-fill elimination ordering heuristic.
TreeDecomposition tree_decomposition_of_graph(
    std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

TreeDecomposition tree_decomposition(const ColoredSkeleton& g);

/// Checks bag coverage of every edge, vertex coverage, connectivity of the
/// subtree of bags containing each vertex, and that the bag graph is a tree.
bool validate_tree_decomposition(std::size_t n,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                                 const TreeDecomposition& td);

}  // namespace twosphere
