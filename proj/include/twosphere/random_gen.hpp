#pragma once

#include <cstdint>

#include "twosphere/complex.hpp"
#include "twosphere/gridtiling.hpp"

namespace twosphere {

/// Small deterministic RNG (splitmix64 core) so that seeded generation is
/// bit-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9E3779B97F4A7C15ull) { next(); }

  std::uint64_t next();
  /// uniform in [0, n), n > 0
  std::uint64_t below(std::uint64_t n);
  /// uniform in [0, 1)
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

struct RandomComplexParams {
  std::size_t target_triangles = 10;
  /// probability that a new triangle is glued onto an arbitrary existing edge
  /// (possibly creating an edge with three or more triangles) instead of a
  /// boundary edge
  double conflict_density = 0.3;
  double fresh_vertex_prob = 0.55;
  /// probability of seeding with a closed sphere (tetrahedron or octahedron)
  double sphere_seed_prob = 0.5;
  double disjoint_prob = 0.05;
};

/// Random complex by seeded triangle gluing; exercises free edges, conflict
/// edges, pinches and multiple components.
Complex2 random_complex(std::uint64_t seed, const RandomComplexParams& params = {});

/// Random grid tiling instance with nonempty sets; when force_no is set the
/// first row gets contradictory first coordinates so no selection exists.
GridTilingInstance random_grid_tiling(std::uint64_t seed, int n, int k, bool force_no = false);

}  // namespace twosphere
