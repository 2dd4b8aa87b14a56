#include <doctest.h>

#include "support.hpp"
#include "twosphere/random_gen.hpp"

using namespace twosphere;
using namespace tsupport;

TEST_CASE("build_complex canonicalizes and deduplicates") {
  Complex2 k = Complex2::from_triples({{1, 2, 3}});
  CHECK(k.triangle_count() == 1);
  CHECK(k.edge_count() == 3);
  CHECK(k.vertex_count() == 3);

  Complex2 dup = Complex2::from_triples({{1, 2, 3}, {3, 2, 1}});
  CHECK(dup.triangle_count() == 1);

  CHECK_THROWS_AS(Complex2::from_triples({{1, 1, 2}}), DegenerateTriangle);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(tetra()) == 2);
  CHECK(euler_characteristic(Complex2::from_triples({{1, 2, 3}})) == 1);
  CHECK(euler_characteristic(octahedron()) == 2);
}

TEST_CASE("edge connected components") {
  // two tetrahedra sharing one vertex: vertex contact does not connect
  std::map<VertexId, VertexId> glue{{4, 0}, {5, 4}, {6, 5}, {7, 6}};
  Complex2 shared = merge(tetra(), relabel(tetra_at(4), glue));
  CHECK(edge_connected_components(shared).components.size() == 2);

  CHECK(edge_connected_components(tetra()).components.size() == 1);
  CHECK(edge_connected_components(Complex2()).components.size() == 0);
}

TEST_CASE("boundary edges") {
  CHECK(boundary_edges(Complex2::from_triples({{1, 2, 3}})).size() == 3);
  CHECK(boundary_edges(tetra()).empty());
  auto t = tetra().triangles();
  t.pop_back();
  CHECK(boundary_edges(Complex2::from_triangles(t)).size() == 3);
}

TEST_CASE("conflict triangles") {
  CHECK(conflict_triangles(tetra()).empty());
  // tetrahedron plus one extra triangle glued on one edge
  auto t = tetra().triangles();
  t.emplace_back(0, 1, 9);
  Complex2 k = Complex2::from_triangles(t);
  auto c = conflict_triangles(k);
  CHECK(c.size() == 3);
  for (const Triangle& x : c) CHECK(x.has_edge(Edge(0, 1)));

  CHECK(conflict_triangles(book(4)).size() == 4);
}

TEST_CASE("classify_surface basics") {
  auto s = classify_surface(tetra());
  CHECK(s.kind == SurfaceKind::Sphere);
  CHECK(s.euler_characteristic == 2);
  CHECK(s.closed);
  CHECK(s.orientable);

  auto d = classify_surface(Complex2::from_triples({{1, 2, 3}}));
  CHECK(d.kind == SurfaceKind::PuncturedSphere);
  CHECK(d.boundary_cycles == 1);
  CHECK(d.euler_characteristic == 1);
}

TEST_CASE("classify_surface: 7-vertex torus is a closed non-sphere") {
  Complex2 torus = seven_vertex_torus();
  CHECK(torus.triangle_count() == 14);
  CHECK(torus.edge_count() == 21);
  // independent check of the link condition: every edge in exactly 2 triangles
  for (const auto& [e, inc] : torus.edge_index()) CHECK(inc.size() == 2);
  CHECK(euler_characteristic(torus) == 0);
  auto s = classify_surface(torus);
  CHECK(s.kind == SurfaceKind::ClosedOther);
  CHECK(s.euler_characteristic == 0);
  CHECK(s.orientable);
}

TEST_CASE("classify_surface: bowtie pinch is not a surface") {
  // two triangles sharing one vertex only: connected as a space, but the link
  // of the apex is two disjoint paths
  Complex2 bowtie = Complex2::from_triples({{0, 1, 2}, {0, 3, 4}});
  CHECK(edge_connected_components(bowtie).components.size() == 2);
  CHECK(classify_surface(bowtie).kind == SurfaceKind::NotSurface);

  // a single edge-connected pinch: two disks joined at vertex 0 and bridged
  // away from it
  Complex2 pinch = Complex2::from_triples(
      {{0, 1, 2}, {0, 2, 3}, {0, 4, 5}, {0, 5, 6}, {2, 3, 4}, {3, 4, 5}});
  CHECK(edge_connected_components(pinch).components.size() == 1);
  CHECK(classify_surface(pinch).kind == SurfaceKind::NotSurface);
}

TEST_CASE("classify_surface: moebius strip and punctured torus") {
  auto m = classify_surface(mobius_strip());
  CHECK(m.kind == SurfaceKind::WithBoundaryOther);
  CHECK(m.euler_characteristic == 0);
  CHECK_FALSE(m.orientable);

  auto p = classify_surface(punctured_torus());
  CHECK(p.kind == SurfaceKind::WithBoundaryOther);
  CHECK(p.euler_characteristic == -1);
}

TEST_CASE("classify_surface requires a connected nonempty complex") {
  Complex2 two = merge(tetra(), tetra_at(10));
  CHECK_THROWS_AS(classify_surface(two), NotEdgeConnected);
  CHECK_THROWS_AS(classify_surface(Complex2()), NotEdgeConnected);
}

TEST_CASE("quotient by vertex identifications") {
  Complex2 k = Complex2::from_triples({{0, 1, 2}, {3, 4, 5}});
  // identity partition
  Complex2 same = quotient_by_vertex_identifications(k, {{0}, {1}, {2}});
  CHECK(same == k);
  // merging all three pairs collapses the two triangles onto each other
  CHECK_THROWS_AS(quotient_by_vertex_identifications(k, {{0, 3}, {1, 4}, {2, 5}}),
                  IdentificationCollapse);
  // merging one pair only
  Complex2 glued = quotient_by_vertex_identifications(k, {{0, 3}});
  CHECK(glued.triangle_count() == 2);
  CHECK(glued.vertex_count() == 5);
  // degenerating a triangle
  CHECK_THROWS_AS(quotient_by_vertex_identifications(k, {{0, 1}}), IdentificationCollapse);
}

TEST_CASE("invariants on random complexes") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomComplexParams p;
    p.target_triangles = 4 + seed % 11;
    Complex2 k = random_complex(seed, p);

    // index round-trip: rebuilding from the triangle list reproduces indices
    Complex2 rebuilt = Complex2::from_triangles(k.triangles());
    CHECK(rebuilt == k);
    CHECK(rebuilt.edge_index() == k.edge_index());
    CHECK(rebuilt.vertex_index() == k.vertex_index());

    // sum of edge multiplicities = 3 |triangles|
    std::size_t mult_sum = 0;
    for (const auto& [e, inc] : k.edge_index()) mult_sum += inc.size();
    CHECK(mult_sum == 3 * k.triangle_count());

    // no conflict triangles implies every multiplicity <= 2
    if (conflict_triangles(k).empty())
      for (const auto& [e, inc] : k.edge_index()) CHECK(inc.size() <= 2);
  }
}

TEST_CASE("sphere classification invariants") {
  for (const Complex2& k : {tetra(), octahedron()}) {
    auto s = classify_surface(k);
    REQUIRE(s.kind == SurfaceKind::Sphere);
    CHECK(boundary_edges(k).empty());
    CHECK(euler_characteristic(k) == 2);
    CHECK(k.triangle_count() >= 4);
    CHECK(k.triangle_count() % 2 == 0);
  }
}

TEST_CASE("classification is invariant under vertex relabeling") {
  Rng rng(424242);
  for (const Complex2& k :
       {tetra(), octahedron(), seven_vertex_torus(), mobius_strip(), hexagon_disk(12)}) {
    auto before = classify_surface(k).kind;
    auto verts = k.vertices();
    std::vector<VertexId> images;
    for (std::size_t i = 0; i < verts.size(); ++i)
      images.push_back(static_cast<VertexId>(3 * i + 100));
    for (std::size_t i = images.size(); i > 1; --i)
      std::swap(images[i - 1], images[rng.below(i)]);
    std::map<VertexId, VertexId> f;
    for (std::size_t i = 0; i < verts.size(); ++i) f[verts[i]] = images[i];
    CHECK(classify_surface(relabel(k, f)).kind == before);
  }
}
