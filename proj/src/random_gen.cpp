#include "twosphere/random_gen.hpp"

#include <algorithm>
#include <set>

namespace twosphere {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return next() % n; }

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Complex2 random_complex(std::uint64_t seed, const RandomComplexParams& params) {
  Rng rng(seed);
  std::set<Triangle> tris;
  VertexId fresh = 0;

  auto add_tetra = [&]() {
    VertexId b = fresh;
    fresh += 4;
    tris.insert(Triangle(b, b + 1, b + 2));
    tris.insert(Triangle(b, b + 1, b + 3));
    tris.insert(Triangle(b, b + 2, b + 3));
    tris.insert(Triangle(b + 1, b + 2, b + 3));
  };
  auto add_octa = [&]() {
    VertexId b = fresh;
    fresh += 6;
    // antipodal pairs (b,b+1), (b+2,b+3), (b+4,b+5)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z)
          tris.insert(Triangle(b + x, b + 2 + y, b + 4 + z));
  };

  if (rng.chance(params.sphere_seed_prob)) {
    if (rng.chance(0.7))
      add_tetra();
    else
      add_octa();
  } else {
    tris.insert(Triangle(fresh, fresh + 1, fresh + 2));
    fresh += 3;
  }

  int stall = 0;
  while (tris.size() < params.target_triangles && stall < 200) {
    if (rng.chance(params.disjoint_prob)) {
      tris.insert(Triangle(fresh, fresh + 1, fresh + 2));
      fresh += 3;
      continue;
    }
    Complex2 cur = Complex2::from_triangles({tris.begin(), tris.end()});
    std::vector<Edge> pool;
    if (!rng.chance(params.conflict_density)) pool = boundary_edges(cur);
    if (pool.empty())
      for (const auto& [e, inc] : cur.edge_index()) pool.push_back(e);
    Edge e = pool[rng.below(pool.size())];

    VertexId third;
    if (rng.chance(params.fresh_vertex_prob)) {
      third = fresh++;
    } else {
      auto verts = cur.vertices();
      third = verts[rng.below(verts.size())];
      if (e.has_vertex(third)) {
        ++stall;
        continue;
      }
    }
    Triangle t(e.v[0], e.v[1], third);
    if (!tris.insert(t).second) ++stall;
  }
  return Complex2::from_triangles({tris.begin(), tris.end()});
}

GridTilingInstance random_grid_tiling(std::uint64_t seed, int n, int k, bool force_no) {
  Rng rng(seed);
  GridTilingInstance g;
  g.n = n;
  g.k = k;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      std::set<std::pair<int, int>> s;
      std::uint64_t count = 1 + rng.below(static_cast<std::uint64_t>(n));
      while (s.size() < count)
        s.insert({1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                  1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))});
      g.sets[{i, j}] = {s.begin(), s.end()};
    }
  if (force_no && n >= 2 && k >= 2) {
    // tile (1,1) only allows a = 1, tile (1,2) only allows a = 2
    g.sets[{1, 1}] = {{1, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))}};
    g.sets[{1, 2}] = {{2, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))}};
  }
  return g;
}

}  // namespace twosphere
