#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// Everything here is deliberately naive; these are the reference
// implementations the library is checked against.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "twosphere/complex.hpp"
#include "twosphere/random_gen.hpp"
#include "twosphere/skeleton.hpp"

namespace tsupport {

using namespace twosphere;

inline Complex2 tetra() {
  return Complex2::from_triples({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline Complex2 tetra_at(VertexId base) {
  return Complex2::from_triples({{base, base + 1, base + 2},
                                 {base, base + 1, base + 3},
                                 {base, base + 2, base + 3},
                                 {base + 1, base + 2, base + 3}});
}

inline Complex2 octahedron(VertexId base = 0) {
  std::vector<std::array<VertexId, 3>> t;
  for (VertexId x = 0; x < 2; ++x)
    for (VertexId y = 0; y < 2; ++y)
      for (VertexId z = 0; z < 2; ++z) t.push_back({base + x, base + 2 + y, base + 4 + z});
  return Complex2::from_triples(t);
}

// minimal 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
inline Complex2 seven_vertex_torus() {
  std::vector<std::array<VertexId, 3>> t;
  for (VertexId i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return Complex2::from_triples(t);
}

// five-triangle Moebius strip
inline Complex2 mobius_strip() {
  return Complex2::from_triples({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}});
}

inline Complex2 merge(const Complex2& a, const Complex2& b) {
  std::vector<Triangle> t = a.triangles();
  for (const Triangle& x : b.triangles()) t.push_back(x);
  return Complex2::from_triangles(t);
}

// hexagon disk: 6-cycle boundary coned from a center, then interior
// subdivisions until the requested triangle count
inline Complex2 hexagon_disk(std::size_t triangles = 6) {
  std::vector<Triangle> t;
  for (VertexId i = 0; i < 6; ++i) t.emplace_back(6, i, (i + 1) % 6);
  VertexId fresh = 7;
  while (t.size() < triangles) {
    // subdivide an interior triangle (one without a boundary edge when
    // possible; after the first step such triangles exist)
    Complex2 cur = Complex2::from_triangles(t);
    std::set<Edge> bnd;
    for (const Edge& e : boundary_edges(cur)) bnd.insert(e);
    Triangle pick = t[0];
    int best = 4;
    for (const Triangle& x : cur.triangles()) {
      int nb = 0;
      for (const Edge& e : x.edges())
        if (bnd.count(e)) ++nb;
      if (nb < best) {
        best = nb;
        pick = x;
      }
    }
    t = cur.triangles();
    t.erase(std::find(t.begin(), t.end(), pick));
    t.emplace_back(pick.v[0], pick.v[1], fresh);
    t.emplace_back(pick.v[1], pick.v[2], fresh);
    t.emplace_back(pick.v[0], pick.v[2], fresh);
    ++fresh;
  }
  return Complex2::from_triangles(t);
}

// annulus between two 3-cycles (0,1,2) and (3,4,5); 6 triangles, l = 6, b = 2
inline Complex2 annulus() {
  return Complex2::from_triples(
      {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
}

// torus minus one triangle
inline Complex2 punctured_torus() {
  auto t = seven_vertex_torus().triangles();
  t.pop_back();
  return Complex2::from_triangles(t);
}

// book of m triangles sharing the edge (0,1)
inline Complex2 book(int m) {
  std::vector<Triangle> t;
  for (int i = 0; i < m; ++i) t.emplace_back(0, 1, static_cast<VertexId>(2 + i));
  return Complex2::from_triangles(t);
}

inline Complex2 relabel(const Complex2& k, const std::map<VertexId, VertexId>& f) {
  std::vector<Triangle> t;
  for (const Triangle& x : k.triangles())
    t.emplace_back(f.at(x.v[0]), f.at(x.v[1]), f.at(x.v[2]));
  return Complex2::from_triangles(t);
}

// grow a complex by repeated 1-to-3 subdivision of an arbitrary triangle
inline Complex2 subdivide_to(const Complex2& k, std::size_t target) {
  Complex2 cur = k;
  VertexId fresh = cur.fresh_vertex_start();
  std::uint64_t step = 0;
  while (cur.triangle_count() < target) {
    std::vector<Triangle> t = cur.triangles();
    Triangle pick = t[step++ % t.size()];
    t.erase(std::find(t.begin(), t.end(), pick));
    t.emplace_back(pick.v[0], pick.v[1], fresh);
    t.emplace_back(pick.v[1], pick.v[2], fresh);
    t.emplace_back(pick.v[0], pick.v[2], fresh);
    ++fresh;
    cur = Complex2::from_triangles(t);
  }
  return cur;
}

// Spheres glued along edges (plus optional flaps): these survive the free-edge
// cascade and leave genuine conflict structure for the kernel stage.
inline Complex2 random_sphere_cluster(std::uint64_t seed) {
  Rng rng(seed ^ 0xABCDEFull);
  std::vector<Complex2> spheres;
  int count = 2 + static_cast<int>(rng.below(2));
  VertexId base = 0;
  for (int i = 0; i < count; ++i) {
    Complex2 s = rng.chance(0.6) ? tetra_at(base) : octahedron(base);
    base += 10;
    spheres.push_back(s);
  }
  std::vector<Triangle> all;
  for (const Complex2& s : spheres)
    for (const Triangle& t : s.triangles()) all.push_back(t);
  Complex2 cur = Complex2::from_triangles(all);

  // glue each later sphere to an earlier one along an edge
  for (int i = 1; i < count; ++i) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<Edge> mine, theirs;
      for (const auto& [e, inc] : spheres[static_cast<std::size_t>(i)].edge_index())
        mine.push_back(e);
      for (const auto& [e, inc] :
           spheres[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i)))]
               .edge_index())
        theirs.push_back(e);
      Edge a = mine[rng.below(mine.size())];
      Edge b = theirs[rng.below(theirs.size())];
      try {
        cur = quotient_by_vertex_identifications(cur, {{a.v[0], b.v[0]}, {a.v[1], b.v[1]}});
        break;
      } catch (const IdentificationCollapse&) {
        continue;  // try another pair of edges
      } catch (const Error&) {
        continue;  // vertices may already share a class
      }
    }
  }

  // occasional flap to exercise rule 1 on top
  if (rng.chance(0.4)) {
    auto verts = cur.vertices();
    VertexId u = verts[rng.below(verts.size())];
    VertexId w = verts[rng.below(verts.size())];
    if (u != w) {
      std::vector<Triangle> t = cur.triangles();
      t.emplace_back(u, w, cur.fresh_vertex_start());
      cur = Complex2::from_triangles(t);
    }
  }
  return cur;
}

// --------------------------------------------------------------------------
// brute-force complex isomorphism (vertex bijection search)
// --------------------------------------------------------------------------

inline bool complexes_isomorphic(const Complex2& k1, const Complex2& k2) {
  if (k1.triangle_count() != k2.triangle_count()) return false;
  if (k1.vertex_count() != k2.vertex_count()) return false;
  if (k1.edge_count() != k2.edge_count()) return false;
  auto v1 = k1.vertices();
  auto v2 = k2.vertices();
  std::set<Triangle> t2(k2.triangles().begin(), k2.triangles().end());

  std::map<VertexId, VertexId> f;
  std::set<VertexId> used;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == v1.size()) {
      for (const Triangle& t : k1.triangles())
        if (!t2.count(Triangle(f.at(t.v[0]), f.at(t.v[1]), f.at(t.v[2])))) return false;
      return true;
    }
    VertexId a = v1[i];
    std::size_t da = k1.vertex_index().at(a).size();
    for (VertexId b : v2) {
      if (used.count(b)) continue;
      if (k2.vertex_index().at(b).size() != da) continue;
      f[a] = b;
      used.insert(b);
      // prune: fully mapped triangles must land in k2
      bool ok = true;
      for (std::uint32_t ti : k1.vertex_index().at(a)) {
        const Triangle& t = k1.triangles()[ti];
        VertexId img[3];
        bool complete = true;
        for (int q = 0; q < 3; ++q) {
          auto it = f.find(t.v[q]);
          if (it == f.end()) {
            complete = false;
            break;
          }
          img[q] = it->second;
        }
        if (complete && !t2.count(Triangle(img[0], img[1], img[2]))) {
          ok = false;
          break;
        }
      }
      if (ok && rec(i + 1)) return true;
      used.erase(b);
      f.erase(a);
    }
    return false;
  };
  return rec(0);
}

// --------------------------------------------------------------------------
// brute-force color-preserving graph isomorphism (skeletons)
// --------------------------------------------------------------------------

inline bool skeletons_color_isomorphic(const ColoredSkeleton& g, const ColoredSkeleton& h) {
  if (g.size() != h.size() || g.edges.size() != h.edges.size()) return false;
  if (g.color_counts() != h.color_counts()) return false;
  const std::size_t n = g.size();
  std::vector<std::int32_t> f(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) {
      for (auto [a, b] : g.edges)
        if (!h.has_edge(static_cast<std::uint32_t>(f[a]), static_cast<std::uint32_t>(f[b])))
          return false;
      return true;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (h.vertices[j].dim != g.vertices[i].dim) continue;
      if (h.adj[j].size() != g.adj[i].size()) continue;
      bool ok = true;
      for (std::uint32_t q : g.adj[i])
        if (q < i && !h.has_edge(static_cast<std::uint32_t>(f[q]), static_cast<std::uint32_t>(j))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      f[i] = static_cast<std::int32_t>(j);
      used[j] = 1;
      if (rec(i + 1)) return true;
      used[j] = 0;
      f[i] = -1;
    }
    return false;
  };
  return rec(0);
}

// --------------------------------------------------------------------------
// brute-force dim-preserving subgraph embedding, optionally label-rainbow
// --------------------------------------------------------------------------

inline std::optional<std::vector<std::uint32_t>> brute_skeleton_embedding(
    const ColoredSkeleton& host, const ColoredSkeleton& pattern,
    const std::vector<std::uint32_t>* labels = nullptr) {
  const std::size_t n = host.size(), m = pattern.size();
  if (m > n) return std::nullopt;
  std::vector<std::int32_t> f(m, -1);
  std::vector<char> used(n, 0);
  std::vector<char> label_used(m, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == m) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (host.vertices[j].dim != pattern.vertices[i].dim) continue;
      if (labels && label_used[(*labels)[j]]) continue;
      bool ok = true;
      for (std::uint32_t q : pattern.adj[i])
        if (q < i && !host.has_edge(static_cast<std::uint32_t>(f[q]), static_cast<std::uint32_t>(j))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      f[i] = static_cast<std::int32_t>(j);
      used[j] = 1;
      if (labels) label_used[(*labels)[j]] = 1;
      if (rec(i + 1)) return true;
      if (labels) label_used[(*labels)[j]] = 0;
      used[j] = 0;
      f[i] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::vector<std::uint32_t> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(f[i]);
  return out;
}

// --------------------------------------------------------------------------
// brute-force isomorph-free enumeration of sphere triangulations on exactly
// nverts vertices (2*nverts - 4 triangles)
// --------------------------------------------------------------------------

inline std::vector<Complex2> brute_sphere_triangulations(int nverts) {
  std::vector<Triangle> triples;
  for (VertexId a = 0; a < static_cast<VertexId>(nverts); ++a)
    for (VertexId b = a + 1; b < static_cast<VertexId>(nverts); ++b)
      for (VertexId c = b + 1; c < static_cast<VertexId>(nverts); ++c)
        triples.emplace_back(a, b, c);
  int want = 2 * nverts - 4;
  std::vector<Complex2> found;
  std::vector<std::uint32_t> comb(static_cast<std::size_t>(want));
  std::iota(comb.begin(), comb.end(), 0u);
  const std::uint32_t total = static_cast<std::uint32_t>(triples.size());
  if (static_cast<std::uint32_t>(want) > total) return found;
  for (;;) {
    // cheap multiplicity prefilter before classify
    std::map<Edge, int> mult;
    bool ok = true;
    for (std::uint32_t i : comb) {
      for (const Edge& e : triples[i].edges())
        if (++mult[e] > 2) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) {
      std::vector<Triangle> sel;
      for (std::uint32_t i : comb) sel.push_back(triples[i]);
      Complex2 k = Complex2::from_triangles(sel);
      if (k.vertex_count() == static_cast<std::size_t>(nverts) &&
          edge_connected_components(k).components.size() == 1 &&
          classify_surface(k).kind == SurfaceKind::Sphere) {
        bool fresh = true;
        for (const Complex2& seen : found)
          if (complexes_isomorphic(seen, k)) {
            fresh = false;
            break;
          }
        if (fresh) found.push_back(std::move(k));
      }
    }
    int pos = want - 1;
    while (pos >= 0 && comb[static_cast<std::size_t>(pos)] ==
                           total - static_cast<std::uint32_t>(want - pos))
      --pos;
    if (pos < 0) break;
    ++comb[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < want; ++q)
      comb[static_cast<std::size_t>(q)] = comb[static_cast<std::size_t>(q - 1)] + 1;
  }
  return found;
}

}  // namespace tsupport
