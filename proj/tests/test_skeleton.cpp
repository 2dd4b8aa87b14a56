#include <doctest.h>

#include "support.hpp"
#include "twosphere/random_gen.hpp"
#include "twosphere/skeleton.hpp"

using namespace twosphere;
using namespace tsupport;

namespace {

// independent oracle: count strict containment pairs among the simplices
std::size_t containment_pairs(const Complex2& k) {
  std::vector<std::set<VertexId>> simplices;
  for (const auto& [v, _] : k.vertex_index()) simplices.push_back({v});
  for (const auto& [e, _] : k.edge_index()) simplices.push_back({e.v[0], e.v[1]});
  for (const Triangle& t : k.triangles()) simplices.push_back({t.v[0], t.v[1], t.v[2]});
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < simplices.size(); ++i)
    for (std::size_t j = 0; j < simplices.size(); ++j) {
      if (simplices[i].size() >= simplices[j].size()) continue;
      if (std::includes(simplices[j].begin(), simplices[j].end(), simplices[i].begin(),
                        simplices[i].end()))
        ++pairs;
    }
  return pairs;
}

}  // namespace

TEST_CASE("barycentric subdivision counts") {
  Complex2 one = Complex2::from_triples({{5, 9, 11}});
  Complex2 sd = barycentric_subdivision(one);
  CHECK(sd.vertex_count() == 7);
  CHECK(sd.edge_count() == 12);
  CHECK(sd.triangle_count() == 6);

  Complex2 sdt = barycentric_subdivision(tetra());
  CHECK(sdt.vertex_count() == 14);
  CHECK(sdt.edge_count() == 36);
  CHECK(sdt.triangle_count() == 24);
  CHECK(classify_surface(sdt).kind == SurfaceKind::Sphere);

  CHECK(barycentric_subdivision(Complex2()).empty());
}

TEST_CASE("barycentric subdivision preserves the euler characteristic") {
  for (std::uint64_t seed = 50; seed < 80; ++seed) {
    Complex2 k = random_complex(seed, {1 + seed % 12, 0.35, 0.5, 0.4, 0.1});
    Complex2 sd = barycentric_subdivision(k);
    CHECK(sd.triangle_count() == 6 * k.triangle_count());
    CHECK(euler_characteristic(sd) == euler_characteristic(k));
  }
}

TEST_CASE("skeleton_with_dims counts and colors") {
  auto g1 = skeleton_with_dims(Complex2::from_triples({{0, 1, 2}}));
  CHECK(g1.size() == 7);
  CHECK(g1.edges.size() == 12);
  CHECK(g1.color_counts() == std::array<std::size_t, 3>{3, 3, 1});

  // two triangles sharing an edge; expected values computed by the
  // containment-pair oracle below (4+5+2 simplices, 22 nesting pairs)
  Complex2 two = Complex2::from_triples({{1, 2, 3}, {2, 3, 4}});
  CHECK(containment_pairs(two) == 22);
  auto g2 = skeleton_with_dims(two);
  CHECK(g2.size() == 11);
  CHECK(g2.edges.size() == 22);

  auto g3 = skeleton_with_dims(tetra());
  CHECK(g3.size() == 14);
  CHECK(g3.color_counts() == std::array<std::size_t, 3>{4, 6, 4});
}

TEST_CASE("skeleton edges match the containment oracle on random complexes") {
  for (std::uint64_t seed = 100; seed < 125; ++seed) {
    Complex2 k = random_complex(seed, {1 + seed % 9, 0.4, 0.5, 0.3, 0.1});
    auto g = skeleton_with_dims(k);
    CHECK(g.size() == k.vertex_count() + k.edge_count() + k.triangle_count());
    CHECK(g.edges.size() == containment_pairs(k));
    // color equals simplex dimension
    for (const auto& v : g.vertices) CHECK(v.dim == static_cast<int>(v.simplex.size()) - 1);
  }
}

TEST_CASE("complex isomorphism iff color-preserving skeleton isomorphism") {
  Rng rng(2024);
  int iso_seen = 0, noniso_seen = 0;
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    Complex2 a = random_complex(seed, {2 + seed % 5, 0.3, 0.35, 0.2, 0.15});
    if (a.vertex_count() > 7) continue;

    Complex2 b;
    if (seed % 2 == 0) {
      // relabeled copy
      auto verts = a.vertices();
      std::vector<VertexId> images;
      for (std::size_t i = 0; i < verts.size(); ++i)
        images.push_back(static_cast<VertexId>(2 * i + 31));
      for (std::size_t i = images.size(); i > 1; --i)
        std::swap(images[i - 1], images[rng.below(i)]);
      std::map<VertexId, VertexId> f;
      for (std::size_t i = 0; i < verts.size(); ++i) f[verts[i]] = images[i];
      b = relabel(a, f);
    } else {
      b = random_complex(seed + 7000, {2 + seed % 5, 0.3, 0.35, 0.2, 0.15});
      if (b.vertex_count() > 7) continue;
    }

    bool complex_iso = complexes_isomorphic(a, b);
    bool skel_iso = skeletons_color_isomorphic(skeleton_with_dims(a), skeleton_with_dims(b));
    CHECK(complex_iso == skel_iso);
    (complex_iso ? iso_seen : noniso_seen)++;
  }
  CHECK(iso_seen > 5);
  CHECK(noniso_seen > 5);
}

TEST_CASE("subcomplex existence iff skeleton subgraph embedding") {
  int yes_seen = 0, no_seen = 0;
  for (std::uint64_t seed = 300; seed < 360; ++seed) {
    Complex2 host = random_complex(seed, {4 + seed % 5, 0.35, 0.45, 0.3, 0.1});
    Complex2 pattern = random_complex(seed + 900, {1 + seed % 3, 0.2, 0.4, 0.15, 0.0});
    if (host.triangle_count() > 9 || pattern.triangle_count() > 3) continue;

    // brute force over triangle subsets of the host
    bool sub_iso = false;
    const auto& ht = host.triangles();
    std::size_t m = pattern.triangle_count();
    std::vector<std::uint32_t> idx(ht.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::vector<std::uint32_t> comb(m);
    if (m <= ht.size()) {
      std::iota(comb.begin(), comb.end(), 0u);
      for (;;) {
        std::vector<Triangle> sel;
        for (std::uint32_t i : comb) sel.push_back(ht[i]);
        if (complexes_isomorphic(Complex2::from_triangles(sel), pattern)) {
          sub_iso = true;
          break;
        }
        std::size_t pos = m;
        while (pos > 0 && comb[pos - 1] == ht.size() - m + (pos - 1)) --pos;
        if (pos == 0) break;
        ++comb[pos - 1];
        for (std::size_t q = pos; q < m; ++q) comb[q] = comb[q - 1] + 1;
      }
    }

    bool skel_embed =
        brute_skeleton_embedding(skeleton_with_dims(host), skeleton_with_dims(pattern))
            .has_value();
    CHECK(sub_iso == skel_embed);
    (sub_iso ? yes_seen : no_seen)++;
  }
  CHECK(yes_seen > 3);
  CHECK(no_seen > 3);
}
