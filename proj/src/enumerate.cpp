#include "twosphere/enumerate.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace twosphere {

namespace {

// Rotation system of a closed orientable triangulation: for each vertex v the
// cyclic successor map over its neighbors, derived from one consistent global
// orientation. rot[v][u] = w means that around v, edge (v,w) follows (v,u).
using Rotation = std::map<VertexId, std::map<VertexId, VertexId>>;

Rotation rotation_system(const Complex2& k) {
  const auto& tris = k.triangles();
  std::vector<std::array<VertexId, 3>> ori(tris.size());
  std::vector<char> done(tris.size(), 0);

  auto directed_has = [](const std::array<VertexId, 3>& o, VertexId a, VertexId b) {
    for (int i = 0; i < 3; ++i)
      if (o[i] == a && o[(i + 1) % 3] == b) return true;
    return false;
  };

  ori[0] = tris[0].v;
  done[0] = 1;
  std::queue<std::uint32_t> q;
  q.push(0);
  while (!q.empty()) {
    std::uint32_t i = q.front();
    q.pop();
    for (const Edge& e : tris[i].edges()) {
      for (std::uint32_t j : k.edge_index().at(e)) {
        if (j == i || done[j]) continue;
        VertexId a = e.v[0], b = e.v[1];
        VertexId c = tris[j].opposite(e);
        ori[j] = directed_has(ori[i], a, b) ? std::array<VertexId, 3>{b, a, c}
                                            : std::array<VertexId, 3>{a, b, c};
        done[j] = 1;
        q.push(j);
      }
    }
  }

  Rotation rot;
  for (const auto& o : ori) {
    // ccw face (x,y,z): around x, edge to z follows edge to y
    for (int i = 0; i < 3; ++i) rot[o[i]][o[(i + 1) % 3]] = o[(i + 2) % 3];
  }
  return rot;
}

std::map<VertexId, std::map<VertexId, VertexId>> invert(const Rotation& rot) {
  Rotation inv;
  for (const auto& [v, succ] : rot)
    for (const auto& [u, w] : succ) inv[v][w] = u;
  return inv;
}

std::vector<std::int32_t> bfs_code(const Rotation& rot, VertexId r, VertexId s,
                                   std::size_t nverts) {
  std::map<VertexId, std::int32_t> label;
  std::vector<VertexId> order;
  std::map<VertexId, VertexId> entry;
  label[r] = 0;
  label[s] = 1;
  order = {r, s};
  entry[r] = s;
  entry[s] = r;

  std::vector<std::int32_t> code;
  for (std::size_t idx = 0; idx < nverts; ++idx) {
    VertexId v = order[idx];
    const auto& succ = rot.at(v);
    VertexId ref = entry.at(v);
    VertexId w = ref;
    do {
      auto it = label.find(w);
      if (it == label.end()) {
        it = label.emplace(w, static_cast<std::int32_t>(order.size())).first;
        order.push_back(w);
        entry[w] = v;
      }
      code.push_back(it->second);
      w = succ.at(w);
    } while (w != ref);
    code.push_back(-1);
  }
  return code;
}

std::vector<VertexId> link_cycle(const Rotation& rot, VertexId v) {
  const auto& succ = rot.at(v);
  std::vector<VertexId> cyc;
  VertexId start = succ.begin()->first;
  VertexId w = start;
  do {
    cyc.push_back(w);
    w = succ.at(w);
  } while (w != start);
  return cyc;
}

}  // namespace

std::vector<std::int32_t> sphere_canonical_code(const Complex2& k) {
  Rotation rot = rotation_system(k);
  Rotation mirror = invert(rot);
  std::vector<std::int32_t> best;
  for (const Rotation* r : {&rot, &mirror}) {
    for (const auto& [v, succ] : *r) {
      for (const auto& [u, _] : succ) {
        auto code = bfs_code(*r, v, u, k.vertex_count());
        if (best.empty() || code < best) best = std::move(code);
      }
    }
  }
  return best;
}

std::vector<Complex2> enumerate_sphere_triangulations(int max_triangles) {
  std::vector<Complex2> out;
  if (max_triangles < 4) return out;

  Complex2 tetra = Complex2::from_triples({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  std::map<std::vector<std::int32_t>, Complex2> level;
  level.emplace(sphere_canonical_code(tetra), tetra);

  for (int t = 4; t <= max_triangles; t += 2) {
    for (const auto& [code, k] : level) out.push_back(k);
    if (t + 2 > max_triangles) break;

    std::map<std::vector<std::int32_t>, Complex2> next;
    for (const auto& [code, k] : level) {
      Rotation rot = rotation_system(k);
      VertexId fresh = k.fresh_vertex_start();
      for (const auto& [v, succ] : rot) {
        std::vector<VertexId> cyc = link_cycle(rot, v);
        std::size_t d = cyc.size();
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = i + 1; j < d; ++j) {
            // Split v into (v, fresh): v keeps the arc cyc[i..j], the new
            // vertex takes the complementary arc; both see cyc[i] and cyc[j].
            std::vector<Triangle> tris;
            for (const Triangle& t0 : k.triangles())
              if (!t0.has_vertex(v)) tris.push_back(t0);
            for (std::size_t p = i; p < j; ++p) tris.emplace_back(v, cyc[p], cyc[p + 1]);
            for (std::size_t p = j; p < i + d; ++p)
              tris.emplace_back(fresh, cyc[p % d], cyc[(p + 1) % d]);
            tris.emplace_back(v, fresh, cyc[i]);
            tris.emplace_back(v, fresh, cyc[j]);
            Complex2 split = Complex2::from_triangles(std::move(tris));
            auto c = sphere_canonical_code(split);
            next.emplace(std::move(c), std::move(split));
          }
        }
      }
    }
    level = std::move(next);
  }

  // Outputs are triangulations of the sphere by construction; verify anyway so
  // downstream search can rely on it unconditionally.
  for (const Complex2& k : out)
    if (classify_surface(k).kind != SurfaceKind::Sphere)
      throw Error("enumerate_sphere_triangulations: non-sphere output");
  return out;
}

}  // namespace twosphere
