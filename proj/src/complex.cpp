#include "twosphere/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace twosphere {

Edge::Edge(VertexId a, VertexId b) : v{a, b} {
  if (a == b) throw DegenerateTriangle("degenerate edge: repeated vertex " + std::to_string(a));
  if (v[0] > v[1]) std::swap(v[0], v[1]);
}

Triangle::Triangle(VertexId a, VertexId b, VertexId c) : v{a, b, c} {
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2])
    throw DegenerateTriangle("degenerate triangle: repeated vertex in (" + std::to_string(a) +
                             "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

std::array<Edge, 3> Triangle::edges() const {
  return {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])};
}

bool Triangle::has_edge(const Edge& e) const {
  return has_vertex(e.v[0]) && has_vertex(e.v[1]);
}

VertexId Triangle::opposite(const Edge& e) const {
  for (VertexId x : v)
    if (!e.has_vertex(x)) return x;
  throw Error("opposite: edge not in triangle");
}

std::string to_string(const Triangle& t) {
  std::ostringstream os;
  os << "(" << t.v[0] << "," << t.v[1] << "," << t.v[2] << ")";
  return os.str();
}

Complex2 Complex2::from_triples(const std::vector<std::array<VertexId, 3>>& triples) {
  std::vector<Triangle> tris;
  tris.reserve(triples.size());
  for (const auto& t : triples) tris.emplace_back(t[0], t[1], t[2]);
  return from_triangles(std::move(tris));
}

Complex2 Complex2::from_triangles(std::vector<Triangle> tris) {
  std::sort(tris.begin(), tris.end());
  tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
  Complex2 k;
  k.tris_ = std::move(tris);
  for (std::uint32_t i = 0; i < k.tris_.size(); ++i) {
    const Triangle& t = k.tris_[i];
    for (const Edge& e : t.edges()) k.edge_index_[e].push_back(i);
    for (VertexId x : t.v) k.vertex_index_[x].push_back(i);
  }
  return k;
}

std::size_t Complex2::edge_multiplicity(const Edge& e) const {
  auto it = edge_index_.find(e);
  return it == edge_index_.end() ? 0 : it->second.size();
}

bool Complex2::contains(const Triangle& t) const { return index_of(t).has_value(); }

std::optional<std::uint32_t> Complex2::index_of(const Triangle& t) const {
  auto it = std::lower_bound(tris_.begin(), tris_.end(), t);
  if (it != tris_.end() && *it == t)
    return static_cast<std::uint32_t>(std::distance(tris_.begin(), it));
  return std::nullopt;
}

std::vector<VertexId> Complex2::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_index_.size());
  for (const auto& [v, _] : vertex_index_) out.push_back(v);
  return out;
}

VertexId Complex2::fresh_vertex_start() const {
  if (vertex_index_.empty()) return 0;
  return vertex_index_.rbegin()->first + 1;
}

const char* to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::Sphere: return "Sphere";
    case SurfaceKind::PuncturedSphere: return "PuncturedSphere";
    case SurfaceKind::ClosedOther: return "ClosedOther";
    case SurfaceKind::WithBoundaryOther: return "WithBoundaryOther";
    case SurfaceKind::NotSurface: return "NotSurface";
  }
  return "?";
}

long long euler_characteristic(const Complex2& k) {
  return static_cast<long long>(k.vertex_count()) - static_cast<long long>(k.edge_count()) +
         static_cast<long long>(k.triangle_count());
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ComponentDecomposition edge_connected_components(const Complex2& k) {
  const auto& tris = k.triangles();
  UnionFind uf(tris.size());
  for (const auto& [e, incident] : k.edge_index())
    for (std::size_t i = 1; i < incident.size(); ++i) uf.unite(incident[0], incident[i]);

  std::map<std::uint32_t, std::vector<Triangle>> groups;
  for (std::uint32_t i = 0; i < tris.size(); ++i) groups[uf.find(i)].push_back(tris[i]);

  ComponentDecomposition out;
  for (auto& [root, ts] : groups) out.components.push_back(std::move(ts));
  return out;
}

std::vector<Edge> boundary_edges(const Complex2& k) {
  std::vector<Edge> out;
  for (const auto& [e, incident] : k.edge_index())
    if (incident.size() == 1) out.push_back(e);
  return out;
}

std::vector<Triangle> conflict_triangles(const Complex2& k) {
  std::set<std::uint32_t> marked;
  for (const auto& [e, incident] : k.edge_index())
    if (incident.size() >= 3) marked.insert(incident.begin(), incident.end());
  std::vector<Triangle> out;
  out.reserve(marked.size());
  for (std::uint32_t i : marked) out.push_back(k.triangles()[i]);
  return out;
}

namespace {

// Walk the boundary edges (each boundary vertex has exactly two of them once
// the link checks pass) and count the cycles they form.
int count_boundary_cycles(const std::vector<Edge>& bnd) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const Edge& e : bnd) {
    adj[e.v[0]].push_back(e.v[1]);
    adj[e.v[1]].push_back(e.v[0]);
  }
  std::set<Edge> unseen(bnd.begin(), bnd.end());
  int cycles = 0;
  while (!unseen.empty()) {
    ++cycles;
    Edge start = *unseen.begin();
    unseen.erase(unseen.begin());
    VertexId prev = start.v[0];
    VertexId cur = start.v[1];
    while (cur != start.v[0]) {
      const auto& nb = adj[cur];
      VertexId next = (nb[0] == prev) ? nb[1] : nb[0];
      unseen.erase(Edge(cur, next));
      prev = cur;
      cur = next;
    }
  }
  return cycles;
}

// Orientation propagation over shared edges. Returns false if some component
// is non-orientable. Assumes every edge has multiplicity <= 2.
bool orientable_by_propagation(const Complex2& k) {
  const auto& tris = k.triangles();
  // or[i] = the chosen cyclic orientation of triangle i, as an ordered triple.
  std::vector<std::array<VertexId, 3>> ori(tris.size());
  std::vector<char> done(tris.size(), 0);

  auto directed_has = [](const std::array<VertexId, 3>& o, VertexId a, VertexId b) {
    // true if the cyclic sequence o contains consecutive (a, b)
    for (int i = 0; i < 3; ++i)
      if (o[i] == a && o[(i + 1) % 3] == b) return true;
    return false;
  };

  for (std::uint32_t seed = 0; seed < tris.size(); ++seed) {
    if (done[seed]) continue;
    ori[seed] = tris[seed].v;
    done[seed] = 1;
    std::queue<std::uint32_t> q;
    q.push(seed);
    while (!q.empty()) {
      std::uint32_t i = q.front();
      q.pop();
      for (const Edge& e : tris[i].edges()) {
        const auto& incident = k.edge_index().at(e);
        for (std::uint32_t j : incident) {
          if (j == i) continue;
          // Induced direction of e in triangle i; the neighbor must traverse
          // e in the opposite direction.
          VertexId a = e.v[0], b = e.v[1];
          bool i_ab = directed_has(ori[i], a, b);
          VertexId c = tris[j].opposite(e);
          std::array<VertexId, 3> want =
              i_ab ? std::array<VertexId, 3>{b, a, c} : std::array<VertexId, 3>{a, b, c};
          if (!done[j]) {
            ori[j] = want;
            done[j] = 1;
            q.push(j);
          } else {
            bool j_ok = i_ab ? directed_has(ori[j], b, a) : directed_has(ori[j], a, b);
            if (!j_ok) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

SurfaceClass classify_surface(const Complex2& k) {
  // Connectivity as a space: triangles joined by shared vertices. A complex
  // that is vertex-connected but not edge-connected has a pinched vertex and
  // falls through to the link checks below, which report NotSurface.
  if (k.empty()) throw NotEdgeConnected("classify_surface: empty complex");
  {
    UnionFind uf(k.triangle_count());
    for (const auto& [v, incident] : k.vertex_index())
      for (std::size_t i = 1; i < incident.size(); ++i) uf.unite(incident[0], incident[i]);
    std::set<std::uint32_t> roots;
    for (std::uint32_t i = 0; i < k.triangle_count(); ++i) roots.insert(uf.find(i));
    if (roots.size() != 1)
      throw NotEdgeConnected("classify_surface: complex is not connected (" +
                             std::to_string(roots.size()) + " pieces)");
  }

  SurfaceClass out;
  out.euler_characteristic = euler_characteristic(k);

  // Manifold conditions: every edge in at most two triangles.
  for (const auto& [e, incident] : k.edge_index()) {
    if (incident.size() > 2) {
      out.kind = SurfaceKind::NotSurface;
      return out;
    }
  }

  // Vertex links: each must be a single path or a single cycle. The link of v
  // has one edge (b, c) per triangle (v, b, c); the degree of w in the link of
  // v equals the multiplicity of edge (v, w).
  for (const auto& [v, incident] : k.vertex_index()) {
    std::map<VertexId, std::vector<VertexId>> link;
    for (std::uint32_t ti : incident) {
      Edge opp(0, 1);
      const Triangle& t = k.triangles()[ti];
      std::array<VertexId, 2> rest{};
      int r = 0;
      for (VertexId x : t.v)
        if (x != v) rest[r++] = x;
      opp = Edge(rest[0], rest[1]);
      link[opp.v[0]].push_back(opp.v[1]);
      link[opp.v[1]].push_back(opp.v[0]);
    }
    int deg1 = 0;
    for (const auto& [w, nb] : link) {
      if (nb.size() > 2) {
        out.kind = SurfaceKind::NotSurface;
        return out;
      }
      if (nb.size() == 1) ++deg1;
    }
    if (deg1 != 0 && deg1 != 2) {
      out.kind = SurfaceKind::NotSurface;
      return out;
    }
    // Link connectivity: a disconnected link is a pinch point.
    std::set<VertexId> seen;
    std::queue<VertexId> q;
    q.push(link.begin()->first);
    seen.insert(link.begin()->first);
    while (!q.empty()) {
      VertexId c = q.front();
      q.pop();
      for (VertexId w : link[c])
        if (seen.insert(w).second) q.push(w);
    }
    if (seen.size() != link.size()) {
      out.kind = SurfaceKind::NotSurface;
      return out;
    }
  }

  auto bnd = boundary_edges(k);
  out.closed = bnd.empty();
  out.orientable = orientable_by_propagation(k);

  if (out.closed) {
    if (out.orientable && out.euler_characteristic == 2)
      out.kind = SurfaceKind::Sphere;
    else
      out.kind = SurfaceKind::ClosedOther;
    return out;
  }

  int b = count_boundary_cycles(bnd);
  if (out.orientable && out.euler_characteristic == 2 - b) {
    out.kind = SurfaceKind::PuncturedSphere;
    out.boundary_cycles = b;
  } else {
    out.kind = SurfaceKind::WithBoundaryOther;
  }
  return out;
}

Complex2 quotient_by_vertex_identifications(const Complex2& k,
                                            const std::vector<std::vector<VertexId>>& classes) {
  std::map<VertexId, VertexId> rep;
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    VertexId r = *std::min_element(cls.begin(), cls.end());
    for (VertexId x : cls) {
      auto [it, fresh] = rep.emplace(x, r);
      if (!fresh) throw Error("quotient: vertex " + std::to_string(x) + " in two classes");
    }
  }
  auto image = [&](VertexId x) {
    auto it = rep.find(x);
    return it == rep.end() ? x : it->second;
  };

  std::vector<Triangle> mapped;
  mapped.reserve(k.triangle_count());
  for (const Triangle& t : k.triangles()) {
    VertexId a = image(t.v[0]), b = image(t.v[1]), c = image(t.v[2]);
    if (a == b || b == c || a == c)
      throw IdentificationCollapse("quotient collapses triangle " + to_string(t));
    mapped.emplace_back(a, b, c);
  }
  std::sort(mapped.begin(), mapped.end());
  if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end())
    throw IdentificationCollapse("quotient merges two distinct triangles");
  return Complex2::from_triangles(std::move(mapped));
}

Complex2 subcomplex_of(const std::vector<Triangle>& tris) {
  return Complex2::from_triangles(tris);
}

Complex2 remove_triangles(const Complex2& k, const std::vector<Triangle>& tris) {
  std::set<Triangle> gone(tris.begin(), tris.end());
  std::vector<Triangle> keep;
  keep.reserve(k.triangle_count());
  for (const Triangle& t : k.triangles())
    if (!gone.count(t)) keep.push_back(t);
  return Complex2::from_triangles(std::move(keep));
}

bool whole_complex_is_sphere(const Complex2& k) {
  if (k.empty()) return false;
  if (edge_connected_components(k).components.size() != 1) return false;
  return classify_surface(k).kind == SurfaceKind::Sphere;
}

}  // namespace twosphere
