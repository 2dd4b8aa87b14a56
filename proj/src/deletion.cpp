#include "twosphere/deletion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace twosphere {

namespace {

std::vector<Triangle> sorted_union(std::vector<Triangle> a, const std::vector<Triangle>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

long long llen(const std::vector<Triangle>& v) { return static_cast<long long>(v.size()); }

}  // namespace

Rule1Result apply_rule_1(const DeletionInstance& instance) {
  Rule1Result res;
  Complex2 cur = instance.complex;
  long long budget = instance.budget;
  for (;;) {
    std::set<std::uint32_t> doomed;
    for (const auto& [e, incident] : cur.edge_index())
      if (incident.size() == 1) doomed.insert(incident[0]);
    if (doomed.empty()) break;
    std::vector<Triangle> gone;
    for (std::uint32_t i : doomed) gone.push_back(cur.triangles()[i]);
    budget -= llen(gone);
    res.removed = sorted_union(std::move(res.removed), gone);
    cur = remove_triangles(cur, gone);
  }
  res.instance = {std::move(cur), budget};
  return res;
}

KernelOutcome apply_rule_2(const DeletionInstance& instance) {
  KernelOutcome out;
  auto conflicts = conflict_triangles(instance.complex);
  if (llen(conflicts) > 7 * instance.budget) {
    out.kind = KernelOutcome::Kind::Decided;
    out.answer = false;
    return out;
  }
  out.kind = KernelOutcome::Kind::Reduced;
  out.reduced = instance;
  return out;
}

KernelOutcome apply_rule_3(const DeletionInstance& instance) {
  KernelOutcome out;
  Complex2 cur = instance.complex;
  long long budget = instance.budget;
  std::vector<Triangle> acc;

  auto conflicts = conflict_triangles(cur);
  Complex2 rest = remove_triangles(cur, conflicts);
  for (auto& comp : edge_connected_components(rest).components) {
    Complex2 cc = Complex2::from_triangles(comp);
    if (!boundary_edges(cc).empty()) continue;
    auto cls = classify_surface(cc);
    Complex2 without = remove_triangles(cur, comp);
    if (cls.kind == SurfaceKind::Sphere &&
        static_cast<long long>(without.triangle_count()) <= budget) {
      out.kind = KernelOutcome::Kind::Decided;
      out.answer = true;
      out.certificate = sorted_union(std::move(acc), without.triangles());
      return out;
    }
    budget -= llen(comp);
    acc = sorted_union(std::move(acc), comp);
    cur = std::move(without);
    if (budget < 0) {
      out.kind = KernelOutcome::Kind::Decided;
      out.answer = false;
      return out;
    }
  }
  out.kind = KernelOutcome::Kind::Reduced;
  out.reduced = {std::move(cur), budget};
  out.certificate = std::move(acc);  // deletions made so far, for the driver
  return out;
}

Rule1Result apply_rule_4(const DeletionInstance& instance) {
  Rule1Result res;
  Complex2 cur = instance.complex;
  long long budget = instance.budget;

  auto conflicts = conflict_triangles(cur);
  Complex2 rest = remove_triangles(cur, conflicts);
  for (auto& comp : edge_connected_components(rest).components) {
    Complex2 cc = Complex2::from_triangles(comp);
    if (boundary_edges(cc).empty()) continue;
    if (classify_surface(cc).kind == SurfaceKind::PuncturedSphere) continue;
    budget -= llen(comp);
    res.removed = sorted_union(std::move(res.removed), comp);
    cur = remove_triangles(cur, comp);
  }
  res.instance = {std::move(cur), budget};
  return res;
}

// ---------------------------------------------------------------------------
// Component replacement (punctured spheres)
// ---------------------------------------------------------------------------

std::vector<std::pair<Edge, Edge>> cofacial_boundary_pairs(const Complex2& c) {
  std::set<Edge> bnd;
  for (const Edge& e : boundary_edges(c)) bnd.insert(e);
  std::vector<std::pair<Edge, Edge>> pairs;
  for (const Triangle& t : c.triangles()) {
    std::vector<Edge> be;
    for (const Edge& e : t.edges())
      if (bnd.count(e)) be.push_back(e);
    for (std::size_t i = 0; i < be.size(); ++i)
      for (std::size_t j = i + 1; j < be.size(); ++j) pairs.emplace_back(be[i], be[j]);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

// Boundary cycles as cyclic vertex sequences; deterministic start and
// direction. Requires each boundary vertex to have exactly two boundary edges.
std::vector<std::vector<VertexId>> boundary_cycles_of(const Complex2& c) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const Edge& e : boundary_edges(c)) {
    adj[e.v[0]].push_back(e.v[1]);
    adj[e.v[1]].push_back(e.v[0]);
  }
  for (auto& [v, nb] : adj) {
    if (nb.size() != 2) throw NotPuncturedSphere("boundary is not a disjoint union of cycles");
    std::sort(nb.begin(), nb.end());
  }
  std::set<VertexId> seen;
  std::vector<std::vector<VertexId>> cycles;
  for (const auto& [v, nb] : adj) {
    if (seen.count(v)) continue;
    std::vector<VertexId> cyc{v};
    seen.insert(v);
    VertexId prev = v, cur = nb[0];
    while (cur != v) {
      cyc.push_back(cur);
      seen.insert(cur);
      const auto& cnb = adj[cur];
      VertexId nxt = (cnb[0] == prev) ? cnb[1] : cnb[0];
      prev = cur;
      cur = nxt;
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

Complex2 replace_component(const Complex2& c, const std::vector<std::pair<Edge, Edge>>& pairs,
                           VertexId fresh_start) {
  auto cls = classify_surface(c);
  if (cls.kind != SurfaceKind::PuncturedSphere)
    throw NotPuncturedSphere("replace_component: component is not a punctured sphere");
  const int b = cls.boundary_cycles;
  const auto bnd = boundary_edges(c);
  const long long ell = static_cast<long long>(bnd.size());

  // A one- or two-triangle punctured sphere is already minimal and realizes
  // all its cofacial pairs; keep it.
  if (c.triangle_count() <= 2) return c;

  std::set<Edge> bnd_set(bnd.begin(), bnd.end());

  // Ears: the original triangles realizing the cofacial pairs. The triangle of
  // a pair is forced (it is the union of the two edges), so reusing it keeps
  // every edge of the replacement either an original edge of c or an edge
  // through a fresh vertex; no accidental identification with the rest of the
  // host complex can occur.
  std::set<Triangle> ears;
  std::set<Edge> eared;
  std::set<std::pair<Edge, Edge>> pair_set;
  for (auto [e1, e2] : pairs) {
    if (e2 < e1) std::swap(e1, e2);
    std::set<VertexId> verts{e1.v[0], e1.v[1], e2.v[0], e2.v[1]};
    if (verts.size() != 3) throw Error("replace_component: cofacial pair does not share a vertex");
    auto it = verts.begin();
    VertexId a = *it++, bb = *it++, cc = *it;
    Triangle t(a, bb, cc);
    if (!c.contains(t)) throw Error("replace_component: pair not realized by a triangle of c");
    if (eared.count(e1) || eared.count(e2))
      throw Error("replace_component: boundary edge in two cofacial pairs");
    eared.insert(e1);
    eared.insert(e2);
    ears.insert(t);
    pair_set.emplace(e1, e2);
  }

  auto cycles = boundary_cycles_of(c);

  // Reduced cycles: drop the middle vertex of each eared pair.
  std::vector<std::vector<VertexId>> reduced;
  for (const auto& cyc : cycles) {
    const std::size_t L = cyc.size();
    std::vector<VertexId> red;
    for (std::size_t p = 0; p < L; ++p) {
      Edge prev(cyc[(p + L - 1) % L], cyc[p]);
      Edge next(cyc[p], cyc[(p + 1) % L]);
      Edge lo = std::min(prev, next), hi = std::max(prev, next);
      if (pair_set.count({lo, hi})) continue;  // ear middle vertex
      red.push_back(cyc[p]);
    }
    if (red.size() < 3)
      throw Error("replace_component: reduced boundary cycle shorter than 3");
    reduced.push_back(std::move(red));
  }

  VertexId fresh = std::max(fresh_start, c.fresh_vertex_start());
  std::vector<Triangle> out(ears.begin(), ears.end());

  // Cone the first cycle from a fresh apex.
  VertexId apex = fresh++;
  std::vector<Triangle> cuttable;
  {
    const auto& r0 = reduced[0];
    for (std::size_t i = 0; i < r0.size(); ++i) {
      Triangle t(apex, r0[i], r0[(i + 1) % r0.size()]);
      out.push_back(t);
      cuttable.push_back(t);
    }
  }

  // Each further cycle attaches through a triangular hole with fresh corners,
  // cut into the disk built so far, joined by a triangulated annulus.
  for (int j = 1; j < b; ++j) {
    if (cuttable.empty()) throw Error("replace_component: no triangle left to cut");
    Triangle tcut = cuttable.front();
    cuttable.erase(cuttable.begin());
    out.erase(std::find(out.begin(), out.end(), tcut));

    VertexId A = tcut.v[0], B = tcut.v[1], C = tcut.v[2];
    VertexId c1 = fresh++, e1 = fresh++, f1 = fresh++;
    std::vector<Triangle> kept = {Triangle(B, C, c1),  Triangle(C, A, c1),
                                  Triangle(A, B, e1),  Triangle(c1, A, e1),
                                  Triangle(B, c1, f1), Triangle(e1, B, f1)};
    for (const Triangle& t : kept) {
      out.push_back(t);
      cuttable.push_back(t);
    }
    // hole cycle (c1, e1, f1), all fresh
    std::array<VertexId, 3> hole{c1, e1, f1};

    const auto& rj = reduced[static_cast<std::size_t>(j)];
    const std::size_t p = rj.size();
    std::array<std::size_t, 3> arc{(p + 2) / 3, (p + 1) / 3, p / 3};
    std::size_t pos = 0;
    for (int t3 = 0; t3 < 3; ++t3) {
      for (std::size_t s = 0; s < arc[static_cast<std::size_t>(t3)]; ++s) {
        out.emplace_back(rj[pos % p], rj[(pos + 1) % p], hole[static_cast<std::size_t>(t3)]);
        ++pos;
      }
      // seam at the arc boundary
      out.emplace_back(rj[pos % p], hole[static_cast<std::size_t>(t3)],
                       hole[static_cast<std::size_t>((t3 + 1) % 3)]);
    }
  }

  Complex2 result = Complex2::from_triangles(std::move(out));

  // Output contract checks.
  auto rcls = classify_surface(result);
  if (rcls.kind != SurfaceKind::PuncturedSphere || rcls.boundary_cycles != b)
    throw Error("replace_component: replacement has wrong topology");
  auto rbnd = boundary_edges(result);
  if (std::set<Edge>(rbnd.begin(), rbnd.end()) != bnd_set)
    throw Error("replace_component: boundary changed");
  for (const auto& [e1, e2] : pair_set) {
    bool ok = false;
    for (const Triangle& t : result.triangles())
      if (t.has_edge(e1) && t.has_edge(e2)) {
        ok = true;
        break;
      }
    if (!ok) throw Error("replace_component: cofacial pair lost");
  }
  if (static_cast<long long>(result.triangle_count()) > 4 * ell + 6 * b)
    throw Error("replace_component: size bound exceeded");
  return result;
}

Complex2 pad_component(const Complex2& c, long long target, VertexId fresh_start) {
  Complex2 cur = c;
  VertexId fresh = std::max(fresh_start, c.fresh_vertex_start());
  while (static_cast<long long>(cur.triangle_count()) <= target) {
    // subdivide the triangle with the fewest boundary edges
    std::set<Edge> bnd;
    for (const Edge& e : boundary_edges(cur)) bnd.insert(e);
    const Triangle* pick = nullptr;
    int pick_b = 4;
    for (const Triangle& t : cur.triangles()) {
      int nb = 0;
      for (const Edge& e : t.edges())
        if (bnd.count(e)) ++nb;
      if (nb < pick_b) {
        pick_b = nb;
        pick = &t;
      }
    }
    std::vector<Triangle> tris = cur.triangles();
    tris.erase(std::find(tris.begin(), tris.end(), *pick));
    VertexId m = fresh++;
    tris.emplace_back(pick->v[0], pick->v[1], m);
    tris.emplace_back(pick->v[1], pick->v[2], m);
    tris.emplace_back(pick->v[0], pick->v[2], m);
    cur = Complex2::from_triangles(std::move(tris));
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Kernelization driver
// ---------------------------------------------------------------------------

namespace {

// Applies Rules 1-4 in order until none changes the instance, accumulating the
// forced deletions. Returns Decided when a rule decides.
std::optional<KernelOutcome> run_rules(DeletionInstance& instance, std::vector<Triangle>& acc) {
  for (;;) {
    if (instance.budget < 0) {
      KernelOutcome out;
      out.kind = KernelOutcome::Kind::Decided;
      out.answer = false;
      return out;
    }
    auto r1 = apply_rule_1(instance);
    if (!r1.removed.empty()) {
      acc = sorted_union(std::move(acc), r1.removed);
      instance = std::move(r1.instance);
      continue;
    }
    auto r2 = apply_rule_2(instance);
    if (r2.kind == KernelOutcome::Kind::Decided) return r2;

    auto r3 = apply_rule_3(instance);
    if (r3.kind == KernelOutcome::Kind::Decided) {
      if (r3.answer && r3.certificate)
        r3.certificate = sorted_union(std::move(acc), *r3.certificate);
      return r3;
    }
    bool r3_changed = r3.certificate && !r3.certificate->empty();
    if (r3_changed) {
      acc = sorted_union(std::move(acc), *r3.certificate);
      instance = std::move(*r3.reduced);
      continue;
    }

    auto r4 = apply_rule_4(instance);
    if (!r4.removed.empty()) {
      acc = sorted_union(std::move(acc), r4.removed);
      instance = std::move(r4.instance);
      continue;
    }
    break;
  }
  if (instance.budget < 0) {
    KernelOutcome out;
    out.kind = KernelOutcome::Kind::Decided;
    out.answer = false;
    return out;
  }
  return std::nullopt;
}

}  // namespace

KernelOutcome kernelize(const DeletionInstance& input) {
  DeletionInstance instance = input;
  std::vector<Triangle> acc;
  if (auto decided = run_rules(instance, acc)) return *decided;

  KernelOutcome out;
  if (instance.complex.empty()) {
    out.kind = KernelOutcome::Kind::Decided;
    out.answer = false;  // nothing left to form a sphere
    return out;
  }

  const long long k = instance.budget;
  auto conflicts = conflict_triangles(instance.complex);
  Complex2 rest = remove_triangles(instance.complex, conflicts);
  VertexId fresh = instance.complex.fresh_vertex_start();

  std::vector<Triangle> out_tris(conflicts.begin(), conflicts.end());
  for (auto& comp : edge_connected_components(rest).components) {
    if (llen(comp) > k) {
      Complex2 cc = Complex2::from_triangles(comp);
      Complex2 rep = replace_component(cc, cofacial_boundary_pairs(cc), fresh);
      fresh = std::max(fresh, rep.fresh_vertex_start());
      rep = pad_component(rep, k, fresh);
      fresh = std::max(fresh, rep.fresh_vertex_start());
      for (const Triangle& t : rep.triangles()) out_tris.push_back(t);
    } else {
      for (const Triangle& t : comp) out_tris.push_back(t);
    }
  }
  out.kind = KernelOutcome::Kind::Reduced;
  out.reduced = {Complex2::from_triangles(std::move(out_tris)), k};
  return out;
}

KernelOutcome compress(const DeletionInstance& input) {
  DeletionInstance instance = input;
  std::vector<Triangle> acc;
  if (auto decided = run_rules(instance, acc)) return *decided;

  KernelOutcome out;
  if (instance.complex.empty()) {
    out.kind = KernelOutcome::Kind::Decided;
    out.answer = false;
    return out;
  }

  const long long k = instance.budget;
  auto conflicts = conflict_triangles(instance.complex);
  Complex2 rest = remove_triangles(instance.complex, conflicts);
  VertexId fresh = instance.complex.fresh_vertex_start();

  std::map<Triangle, long long> weight;
  std::vector<Triangle> out_tris;
  for (const Triangle& t : conflicts) {
    out_tris.push_back(t);
    weight[t] = 1;
  }
  for (auto& comp : edge_connected_components(rest).components) {
    const long long orig = llen(comp);
    Complex2 cc = Complex2::from_triangles(comp);
    Complex2 rep = replace_component(cc, cofacial_boundary_pairs(cc), fresh);
    fresh = std::max(fresh, rep.fresh_vertex_start());
    // keep the original when the replacement is not smaller, so the component
    // weight can equal the true deletion cost
    const Complex2& use = (static_cast<long long>(rep.triangle_count()) < orig) ? rep : cc;
    const long long s = static_cast<long long>(use.triangle_count());
    const long long cap = std::min(orig, k + 1);
    bool first = true;
    for (const Triangle& t : use.triangles()) {
      long long w = 1;
      if (first && s <= cap) w = cap - s + 1;
      first = false;
      out_tris.push_back(t);
      weight[t] = w;
    }
  }

  Complex2 cx = Complex2::from_triangles(out_tris);
  std::vector<long long> weights;
  weights.reserve(cx.triangle_count());
  for (const Triangle& t : cx.triangles()) weights.push_back(weight.at(t));
  out.kind = KernelOutcome::Kind::ReducedWeighted;
  out.reduced_weighted = {std::move(cx), std::move(weights), k};
  return out;
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

namespace {

using WeightFn = std::map<Triangle, long long>;

long long weight_of(const WeightFn* w, const Triangle& t) {
  if (!w) return 1;
  auto it = w->find(t);
  return it == w->end() ? 1 : it->second;
}

// All edge multiplicities <= 2: boundary components can only be deleted
// entirely (the rule-1 cascade consumes them), closed components are kept or
// deleted as wholes; keep the best sphere component.
DeletionOutcome base_case(const Complex2& complex, long long budget, const WeightFn* w) {
  DeletionOutcome out;
  if (budget < 0) return out;
  long long total = 0;
  for (const Triangle& t : complex.triangles()) total += weight_of(w, t);

  std::vector<Triangle> best;
  long long best_weight = -1;
  for (auto& comp : edge_connected_components(complex).components) {
    Complex2 cc = Complex2::from_triangles(comp);
    if (!boundary_edges(cc).empty()) continue;
    if (classify_surface(cc).kind != SurfaceKind::Sphere) continue;
    long long cw = 0;
    for (const Triangle& t : comp) cw += weight_of(w, t);
    if (cw > best_weight) {
      best_weight = cw;
      best = comp;
    }
  }
  if (best_weight < 0) return out;
  if (total - best_weight > budget) return out;

  std::set<Triangle> keep(best.begin(), best.end());
  std::vector<Triangle> deleted;
  for (const Triangle& t : complex.triangles())
    if (!keep.count(t)) deleted.push_back(t);
  out.feasible = true;
  out.deleted = std::move(deleted);
  return out;
}

DeletionOutcome branch(const Complex2& complex, long long budget, const WeightFn* w) {
  if (budget < 0) return {};
  const std::vector<std::uint32_t>* over = nullptr;
  for (const auto& [e, incident] : complex.edge_index())
    if (incident.size() >= 3) {
      over = &incident;
      break;
    }
  if (!over) return base_case(complex, budget, w);
  if (budget == 0) return {};

  for (int i = 0; i < 3; ++i) {
    Triangle t = complex.triangles()[(*over)[static_cast<std::size_t>(i)]];
    auto sub = branch(remove_triangles(complex, {t}), budget - weight_of(w, t), w);
    if (sub.feasible) {
      sub.deleted = sorted_union(std::move(*sub.deleted), {t});
      return sub;
    }
  }
  return {};
}

}  // namespace

DeletionOutcome solve_base_case(const DeletionInstance& instance) {
  for (const auto& [e, incident] : instance.complex.edge_index())
    if (incident.size() >= 3)
      throw Error("solve_base_case: an edge has three or more incident triangles");
  return base_case(instance.complex, instance.budget, nullptr);
}

DeletionOutcome solve_branching(const DeletionInstance& instance) {
  return branch(instance.complex, instance.budget, nullptr);
}

DeletionOutcome solve_branching_weighted(const WeightedInstance& instance) {
  if (instance.weights.size() != instance.complex.triangle_count())
    throw Error("solve_branching_weighted: weight vector size mismatch");
  WeightFn w;
  for (std::size_t i = 0; i < instance.weights.size(); ++i) {
    if (instance.weights[i] <= 0) throw Error("solve_branching_weighted: nonpositive weight");
    w[instance.complex.triangles()[i]] = instance.weights[i];
  }
  return branch(instance.complex, instance.budget, &w);
}

DeletionOutcome solve_conflict_param(const DeletionInstance& instance, int guard_t) {
  DeletionOutcome out;
  if (instance.budget < 0) return out;
  auto conflicts = conflict_triangles(instance.complex);
  const long long t = llen(conflicts);
  if (t > guard_t)
    throw GuardExceeded("solve_conflict_param: " + std::to_string(t) +
                        " conflict triangles exceed the guard of " + std::to_string(guard_t));

  const long long smax = std::min<long long>(t, instance.budget);
  for (long long s = 0; s <= smax; ++s) {
    std::vector<std::uint32_t> comb(static_cast<std::size_t>(s));
    for (long long i = 0; i < s; ++i) comb[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
    for (;;) {
      std::vector<Triangle> guess;
      guess.reserve(comb.size());
      for (std::uint32_t i : comb) guess.push_back(conflicts[i]);
      Complex2 rest = remove_triangles(instance.complex, guess);
      bool clean = true;
      for (const auto& [e, incident] : rest.edge_index())
        if (incident.size() >= 3) {
          clean = false;
          break;
        }
      if (clean) {
        auto sub = base_case(rest, instance.budget - s, nullptr);
        if (sub.feasible) {
          out.feasible = true;
          out.deleted = sorted_union(std::move(*sub.deleted), guess);
          return out;
        }
      }
      long long pos = s - 1;
      while (pos >= 0 &&
             comb[static_cast<std::size_t>(pos)] == static_cast<std::uint32_t>(t - s + pos))
        --pos;
      if (pos < 0) break;
      ++comb[static_cast<std::size_t>(pos)];
      for (long long q = pos + 1; q < s; ++q)
        comb[static_cast<std::size_t>(q)] = comb[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

DeletionOutcome brute_force_deletion(const DeletionInstance& instance, std::size_t guard) {
  DeletionOutcome out;
  const auto& tris = instance.complex.triangles();
  const long long n = llen(tris);
  if (n > static_cast<long long>(guard) || instance.budget > static_cast<long long>(guard))
    throw OracleTooLarge("brute_force_deletion: instance above guard of " + std::to_string(guard));
  if (instance.budget < 0) return out;

  const long long smax = std::min<long long>(instance.budget, n);
  for (long long s = 0; s <= smax; ++s) {
    std::vector<std::uint32_t> comb(static_cast<std::size_t>(s));
    for (long long i = 0; i < s; ++i) comb[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
    for (;;) {
      std::vector<Triangle> subset;
      subset.reserve(comb.size());
      for (std::uint32_t i : comb) subset.push_back(tris[i]);
      Complex2 rest = remove_triangles(instance.complex, subset);
      if (whole_complex_is_sphere(rest)) {
        out.feasible = true;
        out.deleted = std::move(subset);
        return out;
      }
      long long pos = s - 1;
      while (pos >= 0 &&
             comb[static_cast<std::size_t>(pos)] == static_cast<std::uint32_t>(n - s + pos))
        --pos;
      if (pos < 0) break;
      ++comb[static_cast<std::size_t>(pos)];
      for (long long q = pos + 1; q < s; ++q)
        comb[static_cast<std::size_t>(q)] = comb[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

}  // namespace twosphere
