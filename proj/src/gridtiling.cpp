#include "twosphere/gridtiling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace twosphere {

void GridTilingInstance::validate() const {
  if (n <= 0 || k <= 0) throw Error("grid tiling: n and k must be positive");
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      auto it = sets.find({i, j});
      if (it == sets.end() || it->second.empty())
        throw Error("grid tiling: empty set S_" + std::to_string(i) + "," + std::to_string(j));
      for (auto [a, b] : it->second)
        if (a < 1 || a > n || b < 1 || b > n)
          throw Error("grid tiling: pair out of range in S_" + std::to_string(i) + "," +
                      std::to_string(j));
    }
  for (const auto& [ij, s] : sets)
    if (ij.first < 1 || ij.first > k || ij.second < 1 || ij.second > k)
      throw Error("grid tiling: tile index out of range");
}

SquareGadget build_square_gadget() {
  // 3x3 grid g[r][c] = 3r + c (r = row from top), cell centers 9..12.
  auto g = [](int r, int c) { return static_cast<VertexId>(3 * r + c); };
  SquareGadget sq;
  std::vector<Triangle> tris;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      VertexId m = static_cast<VertexId>(9 + 2 * r + c);
      tris.emplace_back(g(r, c), g(r, c + 1), m);
      tris.emplace_back(g(r, c + 1), g(r + 1, c + 1), m);
      tris.emplace_back(g(r + 1, c + 1), g(r + 1, c), m);
      tris.emplace_back(g(r + 1, c), g(r, c), m);
    }
  sq.complex = Complex2::from_triangles(std::move(tris));
  sq.center = g(1, 1);
  sq.top = {g(0, 0), g(0, 1), g(0, 2)};
  sq.bottom = {g(2, 0), g(2, 1), g(2, 2)};
  sq.left = {g(0, 0), g(1, 0), g(2, 0)};
  sq.right = {g(0, 2), g(1, 2), g(2, 2)};

  // gadget invariants
  if (sq.complex.triangle_count() != 16 || sq.complex.vertex_count() != 13 ||
      sq.complex.edge_count() != 28)
    throw Error("square gadget: wrong counts");
  std::set<Edge> bnd;
  for (const Edge& e : boundary_edges(sq.complex)) bnd.insert(e);
  if (bnd.size() != 8) throw Error("square gadget: wrong boundary");
  for (const Triangle& t : sq.complex.triangles()) {
    int nb = 0;
    for (const Edge& e : t.edges())
      if (bnd.count(e)) ++nb;
    if (nb >= 2) throw Error("square gadget: triangle with two boundary edges");
    if (nb == 1 && t.has_vertex(sq.center))
      throw Error("square gadget: center shares a triangle with a boundary edge");
  }
  return sq;
}

namespace {

struct Placement {
  int a, b, i, j;
  VertexId base;  // vertex id offset of this copy
};

struct IdUnionFind {
  std::vector<VertexId> parent;
  explicit IdUnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  VertexId find(VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ReductionOutput generate_reduction(const GridTilingInstance& g) {
  g.validate();
  const SquareGadget gadget = build_square_gadget();
  const int k = g.k;

  std::vector<Placement> placements;
  std::map<std::array<int, 4>, std::size_t> place_of;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (auto [a, b] : g.sets.at({i, j})) {
        Placement p{a, b, i, j, static_cast<VertexId>(13 * placements.size())};
        place_of[{a, b, i, j}] = placements.size();
        placements.push_back(p);
      }

  const std::size_t total_ids = 13 * placements.size();
  IdUnionFind uf(total_ids);

  auto path_of = [&](const Placement& p, const std::array<VertexId, 3>& tmpl) {
    return std::array<VertexId, 3>{p.base + tmpl[0], p.base + tmpl[1], p.base + tmpl[2]};
  };
  auto unite_paths = [&](const std::array<VertexId, 3>& x, const std::array<VertexId, 3>& y) {
    for (int q = 0; q < 3; ++q) uf.unite(x[q], y[q]);
  };

  // Row-internal seams: right paths of column j meet left paths of column j+1
  // for matching first coordinate a.
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k - 1; ++j)
      for (int a = 1; a <= g.n; ++a) {
        std::vector<std::array<VertexId, 3>> group;
        for (const Placement& p : placements)
          if (p.i == i && p.j == j && p.a == a) group.push_back(path_of(p, gadget.right));
        for (const Placement& p : placements)
          if (p.i == i && p.j == j + 1 && p.a == a) group.push_back(path_of(p, gadget.left));
        for (std::size_t q = 1; q < group.size(); ++q) unite_paths(group[0], group[q]);
      }

  // Column-internal seams: bottom paths of row i meet top paths of row i+1 for
  // matching second coordinate b.
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 1; j <= k; ++j)
      for (int b = 1; b <= g.n; ++b) {
        std::vector<std::array<VertexId, 3>> group;
        for (const Placement& p : placements)
          if (p.i == i && p.j == j && p.b == b) group.push_back(path_of(p, gadget.bottom));
        for (const Placement& p : placements)
          if (p.i == i + 1 && p.j == j && p.b == b) group.push_back(path_of(p, gadget.top));
        for (std::size_t q = 1; q < group.size(); ++q) unite_paths(group[0], group[q]);
      }

  // Centers within each tile.
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      std::vector<VertexId> centers;
      for (const Placement& p : placements)
        if (p.i == i && p.j == j) centers.push_back(p.base + gadget.center);
      for (std::size_t q = 1; q < centers.size(); ++q) uf.unite(centers[0], centers[q]);
    }

  // Outer paths: all copies in an edge tile share their outward path; the
  // back sheet below is coned over the identified outer boundary, so these
  // identifications realize the ell_i / r_i / t_j / b_j labels.
  std::vector<std::array<VertexId, 3>> outer_paths;
  auto outer_group = [&](auto&& pred, const std::array<VertexId, 3>& tmpl) {
    std::vector<std::array<VertexId, 3>> group;
    for (const Placement& p : placements)
      if (pred(p)) group.push_back(path_of(p, tmpl));
    for (std::size_t q = 1; q < group.size(); ++q) unite_paths(group[0], group[q]);
    outer_paths.push_back(group[0]);
  };
  for (int i = 1; i <= k; ++i)
    outer_group([&](const Placement& p) { return p.i == i && p.j == 1; }, gadget.left);
  for (int i = 1; i <= k; ++i)
    outer_group([&](const Placement& p) { return p.i == i && p.j == k; }, gadget.right);
  for (int j = 1; j <= k; ++j)
    outer_group([&](const Placement& p) { return p.i == 1 && p.j == j; }, gadget.top);
  for (int j = 1; j <= k; ++j)
    outer_group([&](const Placement& p) { return p.i == k && p.j == j; }, gadget.bottom);

  // Quotient of the disjoint copies.
  std::vector<Triangle> all;
  all.reserve(16 * placements.size());
  for (const Placement& p : placements)
    for (const Triangle& t : gadget.complex.triangles())
      all.emplace_back(p.base + t.v[0], p.base + t.v[1], p.base + t.v[2]);
  Complex2 disjoint = Complex2::from_triangles(std::move(all));

  std::map<VertexId, std::vector<VertexId>> classes_by_rep;
  for (VertexId x = 0; x < total_ids; ++x) classes_by_rep[uf.find(x)].push_back(x);
  std::vector<std::vector<VertexId>> classes;
  for (auto& [rep, cls] : classes_by_rep)
    if (cls.size() > 1) classes.push_back(std::move(cls));
  Complex2 front = quotient_by_vertex_identifications(disjoint, classes);

  if (front.triangle_count() != 16 * placements.size())
    throw Error("generate_reduction: identifications merged triangles");

  // Back sheet: one fresh apex coned over the 8k outer boundary edges.
  VertexId apex = front.fresh_vertex_start();
  std::vector<Triangle> back;
  std::set<Edge> outer_edges;
  for (const auto& path : outer_paths) {
    VertexId u0 = uf.find(path[0]), u1 = uf.find(path[1]), u2 = uf.find(path[2]);
    outer_edges.insert(Edge(u0, u1));
    outer_edges.insert(Edge(u1, u2));
  }
  if (outer_edges.size() != static_cast<std::size_t>(8 * k))
    throw Error("generate_reduction: outer boundary is not 8k edges");
  for (const Edge& e : outer_edges) back.emplace_back(apex, e.v[0], e.v[1]);

  std::vector<Triangle> with_back = front.triangles();
  with_back.insert(with_back.end(), back.begin(), back.end());

  ReductionOutput out;
  out.complex = Complex2::from_triangles(std::move(with_back));
  out.k_prime = 16LL * k * k + 8LL * k;
  std::sort(back.begin(), back.end());
  out.back_sheet = std::move(back);

  if (out.complex.triangle_count() != 16 * placements.size() + 8 * static_cast<std::size_t>(k))
    throw Error("generate_reduction: wrong total triangle count");

  for (const auto& [key, idx] : place_of) {
    const Placement& p = placements[idx];
    std::vector<Triangle> ts;
    for (const Triangle& t : gadget.complex.triangles()) {
      Triangle img(uf.find(p.base + t.v[0]), uf.find(p.base + t.v[1]), uf.find(p.base + t.v[2]));
      if (!out.complex.contains(img)) throw Error("generate_reduction: lost a square triangle");
      ts.push_back(img);
    }
    std::sort(ts.begin(), ts.end());
    out.tile_squares.emplace(key, std::move(ts));
  }
  return out;
}

std::vector<Triangle> assemble_solution(const ReductionOutput& r, const Selection& selection) {
  std::vector<Triangle> out = r.back_sheet;
  for (const auto& [ij, ab] : selection) {
    auto it = r.tile_squares.find({ab.first, ab.second, ij.first, ij.second});
    if (it == r.tile_squares.end())
      throw SelectionOutOfSet("assemble_solution: selected pair (" + std::to_string(ab.first) +
                              "," + std::to_string(ab.second) + ") not in S_" +
                              std::to_string(ij.first) + "," + std::to_string(ij.second));
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Selection> solve_grid_tiling(const GridTilingInstance& g, int guard_n,
                                           int guard_k) {
  g.validate();
  if (g.n > guard_n || g.k > guard_k)
    throw GuardExceeded("solve_grid_tiling: instance above guard (n <= " +
                        std::to_string(guard_n) + ", k <= " + std::to_string(guard_k) + ")");

  std::vector<std::pair<int, int>> tiles;
  for (int i = 1; i <= g.k; ++i)
    for (int j = 1; j <= g.k; ++j) tiles.emplace_back(i, j);

  Selection sel;
  // row-major backtracking with immediate row/column equality checks
  std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
    if (idx == tiles.size()) return true;
    auto [i, j] = tiles[idx];
    for (auto [a, b] : g.sets.at({i, j})) {
      if (j > 1) {
        auto left = sel.at({i, j - 1});
        if (left.first != a) continue;  // a_{i,j-1} = a_{i,j}
      }
      if (i > 1) {
        auto up = sel.at({i - 1, j});
        if (up.second != b) continue;  // b_{i-1,j} = b_{i,j}
      }
      sel[{i, j}] = {a, b};
      if (rec(idx + 1)) return true;
      sel.erase({i, j});
    }
    return false;
  };
  if (rec(0)) return sel;
  return std::nullopt;
}

}  // namespace twosphere
