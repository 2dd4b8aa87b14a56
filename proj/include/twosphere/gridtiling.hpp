#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "twosphere/complex.hpp"

namespace twosphere {

/// Grid Tiling instance: k x k grid of nonempty sets of pairs over [n] x [n].
/// Tiles and pair entries are 1-based.
struct GridTilingInstance {
  int n = 0;
  int k = 0;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> sets;

  void validate() const;
};

using Selection = std::map<std::pair<int, int>, std::pair<int, int>>;

/// The triangulated square gadget: a 3x3 vertex grid with the four cell
/// centers coned, 13 vertices / 28 edges / 16 triangles. Boundary paths are
/// oriented vertex triples (left and right run top to bottom, top and bottom
/// run left to right).
struct SquareGadget {
  Complex2 complex;
  VertexId center = 0;
  std::array<VertexId, 3> left{}, top{}, right{}, bottom{};
};

SquareGadget build_square_gadget();

struct ReductionOutput {
  Complex2 complex;
  long long k_prime = 0;
  /// (a, b, i, j) -> the 16 triangles of that placed square in the output.
  std::map<std::array<int, 4>, std::vector<Triangle>> tile_squares;
  std::vector<Triangle> back_sheet;
};

/// Build the hardness-reduction complex: one gadget copy per (a,b) in each
/// S_{i,j}, the five identification families, and a single-apex back sheet
/// coned over the 8k outer boundary edges.
ReductionOutput generate_reduction(const GridTilingInstance& g);

/// Triangles of the selected squares plus the back sheet. No validity check.
std::vector<Triangle> assemble_solution(const ReductionOutput& r, const Selection& selection);

/// Brute force over per-tile choices; returns the lexicographically first
/// selection satisfying the row and column constraints.
std::optional<Selection> solve_grid_tiling(const GridTilingInstance& g, int guard_n = 4,
                                           int guard_k = 3);

}  // namespace twosphere
