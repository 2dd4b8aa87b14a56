#pragma once

#include <string>
#include <vector>

#include "twosphere/complex.hpp"

namespace twosphere {

/// Isomorph-free list of all simplicial triangulations of the 2-sphere with
/// 4, 6, 8, ... up to max_triangles triangles, generated by vertex splits
/// starting from the tetrahedron boundary, with canonical-form duplicate
/// rejection. Returns an empty list for max_triangles < 4.
std::vector<Complex2> enumerate_sphere_triangulations(int max_triangles);

/// Canonical form of a sphere triangulation, derived from its rotation system
/// (minimal BFS code over all directed-edge starts and both orientations).
/// Two sphere triangulations are isomorphic iff their codes are equal.
std::vector<std::int32_t> sphere_canonical_code(const Complex2& k);

}  // namespace twosphere
