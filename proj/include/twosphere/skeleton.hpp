#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twosphere/complex.hpp"

namespace twosphere {

/// A vertex of the 1-skeleton of a barycentric subdivision: one per nonempty
/// simplex of the source complex, colored by the simplex dimension.
struct SkeletonVertex {
  std::vector<VertexId> simplex;  // sorted source vertex ids, size 1..3
  int dim = 0;                    // |simplex| - 1
};

/// The 1-skeleton of Sd(K) with the dim coloring. Vertices are ordered by
/// (dim, simplex); edges connect strictly nested simplices.
struct ColoredSkeleton {
  std::vector<SkeletonVertex> vertices;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, sorted
  std::vector<std::vector<std::uint32_t>> adj;

  std::size_t size() const { return vertices.size(); }
  bool has_edge(std::uint32_t a, std::uint32_t b) const;
  std::array<std::size_t, 3> color_counts() const;
};

ColoredSkeleton skeleton_with_dims(const Complex2& k);

/// Barycentric subdivision as a complex on fresh contiguous vertex ids
/// (one per simplex of k, ordered by (dim, simplex)).
Complex2 barycentric_subdivision(const Complex2& k);

}  // namespace twosphere
