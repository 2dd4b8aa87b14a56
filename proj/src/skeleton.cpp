#include "twosphere/skeleton.hpp"

#include <algorithm>
#include <map>

namespace twosphere {

namespace {

// All nonempty simplices of k in the canonical (dim, simplex) order, plus the
// index lookup table.
struct SimplexTable {
  std::vector<std::vector<VertexId>> simplices;
  std::map<std::vector<VertexId>, std::uint32_t> index;

  explicit SimplexTable(const Complex2& k) {
    for (const auto& [v, _] : k.vertex_index()) simplices.push_back({v});
    for (const auto& [e, _] : k.edge_index()) simplices.push_back({e.v[0], e.v[1]});
    for (const Triangle& t : k.triangles()) simplices.push_back({t.v[0], t.v[1], t.v[2]});
    for (std::uint32_t i = 0; i < simplices.size(); ++i) index.emplace(simplices[i], i);
  }
};

}  // namespace

bool ColoredSkeleton::has_edge(std::uint32_t a, std::uint32_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::array<std::size_t, 3> ColoredSkeleton::color_counts() const {
  std::array<std::size_t, 3> c{0, 0, 0};
  for (const auto& v : vertices) c[static_cast<std::size_t>(v.dim)]++;
  return c;
}

ColoredSkeleton skeleton_with_dims(const Complex2& k) {
  SimplexTable tab(k);
  ColoredSkeleton g;
  g.vertices.reserve(tab.simplices.size());
  for (const auto& s : tab.simplices)
    g.vertices.push_back({s, static_cast<int>(s.size()) - 1});

  auto add = [&](const std::vector<VertexId>& small, const std::vector<VertexId>& big) {
    std::uint32_t a = tab.index.at(small);
    std::uint32_t b = tab.index.at(big);
    if (a > b) std::swap(a, b);
    g.edges.emplace_back(a, b);
  };

  for (const auto& [e, _] : k.edge_index()) {
    add({e.v[0]}, {e.v[0], e.v[1]});
    add({e.v[1]}, {e.v[0], e.v[1]});
  }
  for (const Triangle& t : k.triangles()) {
    std::vector<VertexId> tv{t.v[0], t.v[1], t.v[2]};
    for (VertexId x : t.v) add({x}, tv);
    for (const Edge& e : t.edges()) add({e.v[0], e.v[1]}, tv);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

  g.adj.assign(g.vertices.size(), {});
  for (const auto& [a, b] : g.edges) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  return g;
}

Complex2 barycentric_subdivision(const Complex2& k) {
  SimplexTable tab(k);
  std::vector<Triangle> tris;
  tris.reserve(6 * k.triangle_count());
  for (const Triangle& t : k.triangles()) {
    std::vector<VertexId> tv{t.v[0], t.v[1], t.v[2]};
    std::uint32_t vt = tab.index.at(tv);
    for (const Edge& e : t.edges()) {
      std::uint32_t ve = tab.index.at({e.v[0], e.v[1]});
      for (VertexId x : e.v) {
        std::uint32_t vx = tab.index.at({x});
        tris.emplace_back(vx, ve, vt);
      }
    }
  }
  return Complex2::from_triangles(std::move(tris));
}

}  // namespace twosphere
