#include <doctest.h>

#include "support.hpp"
#include "twosphere/gridtiling.hpp"
#include "twosphere/random_gen.hpp"

using namespace twosphere;
using namespace tsupport;

namespace {

GridTilingInstance uniform_instance(int n, int k) {
  GridTilingInstance g;
  g.n = n;
  g.k = k;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) g.sets[{i, j}] = {{1, 1}};
  return g;
}

}  // namespace

TEST_CASE("square gadget counts and adjacency properties") {
  SquareGadget sq = build_square_gadget();
  CHECK(sq.complex.vertex_count() == 13);
  CHECK(sq.complex.edge_count() == 28);
  CHECK(sq.complex.triangle_count() == 16);
  CHECK(euler_characteristic(sq.complex) == 1);
  CHECK(classify_surface(sq.complex).kind == SurfaceKind::PuncturedSphere);

  // center sits in 8 triangles, none of which touches the outer boundary
  std::set<Edge> bnd;
  for (const Edge& e : boundary_edges(sq.complex)) bnd.insert(e);
  int center_tris = 0;
  for (const Triangle& t : sq.complex.triangles()) {
    if (!t.has_vertex(sq.center)) continue;
    ++center_tris;
    for (const Edge& e : t.edges()) CHECK_FALSE(bnd.count(e));
  }
  CHECK(center_tris == 8);
}

TEST_CASE("reduction counts at k=1") {
  GridTilingInstance g = uniform_instance(1, 1);
  auto r = generate_reduction(g);
  CHECK(r.k_prime == 24);
  CHECK(r.complex.triangle_count() == 24);
  CHECK(r.complex.vertex_count() == 14);
  CHECK(r.complex.edge_count() == 36);
  CHECK(r.back_sheet.size() == 8);
  CHECK(classify_surface(r.complex).kind == SurfaceKind::Sphere);

  Selection sel{{{1, 1}, {1, 1}}};
  auto sol = assemble_solution(r, sel);
  CHECK(sol.size() == 24);
  CHECK(whole_complex_is_sphere(Complex2::from_triangles(sol)));
}

TEST_CASE("reduction triangle count formula") {
  for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
    GridTilingInstance g = random_grid_tiling(seed, 3, 2);
    std::size_t total = 0;
    for (const auto& [ij, s] : g.sets) total += s.size();
    auto r = generate_reduction(g);
    CHECK(r.complex.triangle_count() == 16 * total + 8 * static_cast<std::size_t>(g.k));
    CHECK(r.k_prime == 16 * g.k * g.k + 8 * g.k);
    CHECK(r.tile_squares.size() == total);
  }
}

TEST_CASE("assembled solutions are spheres with the paper counts") {
  GridTilingInstance g = uniform_instance(1, 2);
  auto r = generate_reduction(g);
  Selection sel;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) sel[{i, j}] = {1, 1};
  auto sol = assemble_solution(r, sel);
  Complex2 s = Complex2::from_triangles(sol);
  CHECK(s.triangle_count() == 80);
  CHECK(s.vertex_count() == 42);
  CHECK(s.edge_count() == 120);
  CHECK(euler_characteristic(s) == 2);
  CHECK(classify_surface(s).kind == SurfaceKind::Sphere);
}

TEST_CASE("mismatched selections are not spheres") {
  // n=2, k=2; tiles all contain both diagonal pairs so mismatches exist
  GridTilingInstance g;
  g.n = 2;
  g.k = 2;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) g.sets[{i, j}] = {{1, 1}, {2, 2}};
  auto r = generate_reduction(g);

  // deliberate row mismatch: a_{1,1} = 1 but a_{1,2} = 2
  Selection bad{{{1, 1}, {1, 1}}, {{1, 2}, {2, 2}}, {{2, 1}, {1, 1}}, {{2, 2}, {1, 1}}};
  auto sol = assemble_solution(r, bad);
  Complex2 s = Complex2::from_triangles(sol);
  bool sphere = whole_complex_is_sphere(s);
  CHECK_FALSE(sphere);

  // matched selection is a sphere
  Selection good{{{1, 1}, {1, 1}}, {{1, 2}, {1, 1}}, {{2, 1}, {1, 1}}, {{2, 2}, {1, 1}}};
  CHECK(whole_complex_is_sphere(Complex2::from_triangles(assemble_solution(r, good))));

  // selection outside the sets
  Selection outside{{{1, 1}, {2, 1}}, {{1, 2}, {1, 1}}, {{2, 1}, {1, 1}}, {{2, 2}, {1, 1}}};
  CHECK_THROWS_AS(assemble_solution(r, outside), SelectionOutOfSet);
}

TEST_CASE("solve_grid_tiling examples") {
  // paper-style yes instance at n=3, k=2 with S11 = {(1,3),(2,2)}
  GridTilingInstance g;
  g.n = 3;
  g.k = 2;
  g.sets[{1, 1}] = {{1, 3}, {2, 2}};
  g.sets[{1, 2}] = {{1, 1}};
  g.sets[{2, 1}] = {{2, 3}};
  g.sets[{2, 2}] = {{2, 1}};
  auto sel = solve_grid_tiling(g);
  REQUIRE(sel.has_value());
  CHECK(sel->at({1, 1}) == std::pair<int, int>{1, 3});

  // k=1: first element, no constraints
  GridTilingInstance g1;
  g1.n = 2;
  g1.k = 1;
  g1.sets[{1, 1}] = {{2, 1}, {2, 2}};
  auto s1 = solve_grid_tiling(g1);
  REQUIRE(s1.has_value());
  CHECK(s1->at({1, 1}) == std::pair<int, int>{2, 1});

  // direct contradiction in a row
  GridTilingInstance g2;
  g2.n = 2;
  g2.k = 2;
  g2.sets[{1, 1}] = {{1, 1}};
  g2.sets[{1, 2}] = {{2, 2}};
  g2.sets[{2, 1}] = {{1, 1}};
  g2.sets[{2, 2}] = {{1, 1}};
  CHECK_FALSE(solve_grid_tiling(g2).has_value());

  GridTilingInstance big = uniform_instance(2, 4);
  CHECK_THROWS_AS(solve_grid_tiling(big), GuardExceeded);
}

TEST_CASE("reduction determinism") {
  GridTilingInstance g = random_grid_tiling(99, 3, 2);
  auto r1 = generate_reduction(g);
  auto r2 = generate_reduction(g);
  CHECK(r1.complex == r2.complex);
  CHECK(r1.back_sheet == r2.back_sheet);
  CHECK(r1.tile_squares == r2.tile_squares);
}

TEST_CASE("per-copy interior edges stay interior after identification") {
  GridTilingInstance g = random_grid_tiling(123, 2, 2);
  auto r = generate_reduction(g);
  // every square's 16 triangles still form a disk inside the output
  for (const auto& [key, ts] : r.tile_squares) {
    Complex2 sq = Complex2::from_triangles(ts);
    CHECK(sq.triangle_count() == 16);
    CHECK(classify_surface(sq).kind == SurfaceKind::PuncturedSphere);
    CHECK(euler_characteristic(sq) == 1);
  }
}
