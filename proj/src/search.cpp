#include "twosphere/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "twosphere/enumerate.hpp"

namespace twosphere {

std::uint64_t color_coding_trial_count(std::size_t m, double delta) {
  if (delta <= 0 || delta >= 1) throw InvalidBudget("delta must be in (0,1)");
  long double t = std::exp(static_cast<long double>(m)) * std::log(1.0L / delta);
  const long double cap = 9.0e18L;
  if (t > cap) return static_cast<std::uint64_t>(cap);
  return static_cast<std::uint64_t>(std::ceil(t));
}

namespace {

inline std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<std::uint32_t> trial_coloring_for(std::uint64_t seed, std::uint64_t trial_index,
                                              std::size_t host_n, std::size_t m) {
  std::uint64_t state = seed ^ (trial_index + 1) * 0xD1B54A32D192ED03ull;
  splitmix64(state);
  std::vector<std::uint32_t> out(host_n);
  for (std::size_t i = 0; i < host_n; ++i)
    out[i] = static_cast<std::uint32_t>(splitmix64(state) % m);
  return out;
}

// ---------------------------------------------------------------------------
// Colorful DP over a nice tree decomposition of the pattern skeleton.
// ---------------------------------------------------------------------------

namespace {

struct NiceNode {
  enum Kind { Leaf, Introduce, Forget, Join } kind = Leaf;
  std::int32_t pattern_vertex = -1;
  std::int32_t child1 = -1, child2 = -1;
  std::vector<std::uint16_t> bag;  // sorted pattern vertices
};

class NiceTree {
 public:
  std::vector<NiceNode> nodes;
  int root = -1;

  NiceTree(const TreeDecomposition& td) {
    const std::size_t m = td.bags.size();
    std::vector<std::vector<std::uint32_t>> adj(m);
    for (auto [a, b] : td.tree_edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    int top = build(0, std::numeric_limits<std::uint32_t>::max(), td, adj);
    // forget the remaining bag down to empty
    std::vector<std::uint16_t> bag = nodes[top].bag;
    while (!bag.empty()) {
      std::uint16_t v = bag.back();
      bag.pop_back();
      top = add({NiceNode::Forget, v, top, -1, bag});
    }
    root = top;
  }

 private:
  int add(NiceNode n) {
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  static std::vector<std::uint16_t> to16(const std::vector<std::uint32_t>& b) {
    std::vector<std::uint16_t> out(b.begin(), b.end());
    return out;
  }

  // returns index of a nice node whose bag equals td.bags[u]
  int build(std::uint32_t u, std::uint32_t parent, const TreeDecomposition& td,
            const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<std::uint16_t> target = to16(td.bags[u]);
    std::vector<int> parts;
    for (std::uint32_t c : adj[u]) {
      if (c == parent) continue;
      int sub = build(c, u, td, adj);
      // morph child bag into target: forget extras, then introduce missing
      const std::vector<std::uint16_t> cbag = nodes[sub].bag;
      std::vector<std::uint16_t> bag = cbag;
      for (std::uint16_t v : cbag) {
        if (!std::binary_search(target.begin(), target.end(), v)) {
          bag.erase(std::find(bag.begin(), bag.end(), v));
          sub = add({NiceNode::Forget, v, sub, -1, bag});
        }
      }
      for (std::uint16_t v : target) {
        if (!std::binary_search(bag.begin(), bag.end(), v)) {
          bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
          sub = add({NiceNode::Introduce, v, sub, -1, bag});
        }
      }
      parts.push_back(sub);
    }
    if (parts.empty()) {
      int cur = add({NiceNode::Leaf, -1, -1, -1, {}});
      std::vector<std::uint16_t> bag;
      for (std::uint16_t v : target) {
        bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
        cur = add({NiceNode::Introduce, v, cur, -1, bag});
      }
      return cur;
    }
    int cur = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
      cur = add({NiceNode::Join, -1, cur, parts[i], target});
    return cur;
  }
};

struct DpState {
  std::vector<std::uint16_t> assign;  // host vertex per bag slot (bag sorted order)
  std::uint64_t mask = 0;             // labels used by assigned + forgotten vertices
  std::int32_t from1 = -1, from2 = -1;
  std::uint16_t intro_host = 0;
};

struct StateKeyHash {
  std::size_t operator()(const std::pair<std::vector<std::uint16_t>, std::uint64_t>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t x : k.first) {
      h ^= x;
      h *= 1099511628211ull;
    }
    h ^= std::hash<std::uint64_t>()(k.second);
    return h;
  }
};

using StateTable = std::vector<DpState>;

}  // namespace

std::optional<std::vector<std::uint32_t>> colorful_match_once(
    const ColoredSkeleton& host, const ColoredSkeleton& pattern,
    const std::vector<std::uint32_t>& trial_coloring, const TreeDecomposition& td) {
  const std::size_t n = host.size();
  const std::size_t m = pattern.size();
  if (trial_coloring.size() != n) throw Error("colorful_match_once: coloring size mismatch");
  if (m > 64) throw GuardExceeded("colorful_match_once: pattern skeleton larger than 64 vertices");
  if (m == 0) return std::vector<std::uint32_t>{};
  const std::uint64_t full_mask = (m == 64) ? ~0ull : ((1ull << m) - 1);

  // host adjacency as bitsets over 64-bit words
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> hadj(n * words, 0);
  for (auto [a, b] : host.edges) {
    hadj[a * words + b / 64] |= 1ull << (b % 64);
    hadj[b * words + a / 64] |= 1ull << (a % 64);
  }
  auto host_edge = [&](std::uint32_t a, std::uint32_t b) {
    return (hadj[a * words + b / 64] >> (b % 64)) & 1ull;
  };

  // candidates per pattern vertex: same dim, host degree no smaller
  std::vector<std::vector<std::uint16_t>> cand(m);
  for (std::uint32_t p = 0; p < m; ++p)
    for (std::uint32_t h = 0; h < n; ++h)
      if (host.vertices[h].dim == pattern.vertices[p].dim &&
          host.adj[h].size() >= pattern.adj[p].size())
        cand[p].push_back(static_cast<std::uint16_t>(h));

  NiceTree nice(td);
  std::vector<StateTable> tables(nice.nodes.size());

  auto bag_pos = [](const std::vector<std::uint16_t>& bag, std::uint16_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  };

  for (std::size_t x = 0; x < nice.nodes.size(); ++x) {
    const NiceNode& node = nice.nodes[x];
    StateTable& out = tables[x];
    std::unordered_map<std::pair<std::vector<std::uint16_t>, std::uint64_t>, std::size_t,
                       StateKeyHash>
        dedup;

    auto push = [&](DpState s) {
      auto key = std::make_pair(s.assign, s.mask);
      if (dedup.emplace(std::move(key), out.size()).second) out.push_back(std::move(s));
    };

    switch (node.kind) {
      case NiceNode::Leaf:
        push({});
        break;
      case NiceNode::Introduce: {
        const StateTable& in = tables[node.child1];
        const auto p = static_cast<std::uint16_t>(node.pattern_vertex);
        const auto& cbag = nice.nodes[node.child1].bag;
        const std::size_t pos = bag_pos(node.bag, p);
        // pattern neighbors of p that are in the child bag, with their slots
        std::vector<std::size_t> nb_slots;
        for (std::uint32_t q : pattern.adj[node.pattern_vertex]) {
          auto it = std::lower_bound(cbag.begin(), cbag.end(), q);
          if (it != cbag.end() && *it == q)
            nb_slots.push_back(static_cast<std::size_t>(it - cbag.begin()));
        }
        for (std::size_t si = 0; si < in.size(); ++si) {
          const DpState& s = in[si];
          for (std::uint16_t hv : cand[p]) {
            std::uint64_t bit = 1ull << trial_coloring[hv];
            if (s.mask & bit) continue;
            bool ok = true;
            for (std::size_t slot : nb_slots)
              if (!host_edge(s.assign[slot], hv)) {
                ok = false;
                break;
              }
            if (!ok) continue;
            DpState ns;
            ns.assign = s.assign;
            ns.assign.insert(ns.assign.begin() + static_cast<std::ptrdiff_t>(pos), hv);
            ns.mask = s.mask | bit;
            ns.from1 = static_cast<std::int32_t>(si);
            ns.intro_host = hv;
            push(std::move(ns));
          }
        }
        break;
      }
      case NiceNode::Forget: {
        const StateTable& in = tables[node.child1];
        const auto p = static_cast<std::uint16_t>(node.pattern_vertex);
        const std::size_t pos = bag_pos(nice.nodes[node.child1].bag, p);
        for (std::size_t si = 0; si < in.size(); ++si) {
          DpState ns;
          ns.assign = in[si].assign;
          ns.assign.erase(ns.assign.begin() + static_cast<std::ptrdiff_t>(pos));
          ns.mask = in[si].mask;
          ns.from1 = static_cast<std::int32_t>(si);
          push(std::move(ns));
        }
        break;
      }
      case NiceNode::Join: {
        const StateTable& in1 = tables[node.child1];
        const StateTable& in2 = tables[node.child2];
        std::unordered_map<std::pair<std::vector<std::uint16_t>, std::uint64_t>,
                           std::vector<std::size_t>, StateKeyHash>
            by_assign;
        for (std::size_t sj = 0; sj < in2.size(); ++sj)
          by_assign[{in2[sj].assign, 0}].push_back(sj);
        for (std::size_t si = 0; si < in1.size(); ++si) {
          std::uint64_t bagmask = 0;
          for (std::uint16_t hv : in1[si].assign) bagmask |= 1ull << trial_coloring[hv];
          auto it = by_assign.find({in1[si].assign, 0});
          if (it == by_assign.end()) continue;
          for (std::size_t sj : it->second) {
            if ((in1[si].mask & in2[sj].mask) != bagmask) continue;
            DpState ns;
            ns.assign = in1[si].assign;
            ns.mask = in1[si].mask | in2[sj].mask;
            ns.from1 = static_cast<std::int32_t>(si);
            ns.from2 = static_cast<std::int32_t>(sj);
            push(std::move(ns));
          }
        }
        break;
      }
    }
    if (out.empty()) return std::nullopt;
  }

  const StateTable& final_table = tables[static_cast<std::size_t>(nice.root)];
  std::int32_t accept = -1;
  for (std::size_t i = 0; i < final_table.size(); ++i)
    if (final_table[i].mask == full_mask) {
      accept = static_cast<std::int32_t>(i);
      break;
    }
  if (accept < 0) return std::nullopt;

  // reconstruct the embedding by walking backpointers
  std::vector<std::uint32_t> phi(m, std::numeric_limits<std::uint32_t>::max());
  struct Item {
    std::size_t node;
    std::int32_t state;
  };
  std::vector<Item> stack{{static_cast<std::size_t>(nice.root), accept}};
  while (!stack.empty()) {
    auto [nx, sx] = stack.back();
    stack.pop_back();
    const NiceNode& node = nice.nodes[nx];
    const DpState& s = tables[nx][static_cast<std::size_t>(sx)];
    switch (node.kind) {
      case NiceNode::Leaf:
        break;
      case NiceNode::Introduce:
        phi[static_cast<std::size_t>(node.pattern_vertex)] = s.intro_host;
        stack.push_back({static_cast<std::size_t>(node.child1), s.from1});
        break;
      case NiceNode::Forget:
        stack.push_back({static_cast<std::size_t>(node.child1), s.from1});
        break;
      case NiceNode::Join:
        stack.push_back({static_cast<std::size_t>(node.child1), s.from1});
        stack.push_back({static_cast<std::size_t>(node.child2), s.from2});
        break;
    }
  }

  // verify: total, injective, rainbow, dim-preserving, edge-preserving
  std::vector<char> host_used(n, 0), label_used(m, 0);
  for (std::uint32_t p = 0; p < m; ++p) {
    std::uint32_t hv = phi[p];
    if (hv >= n) return std::nullopt;
    if (host_used[hv] || label_used[trial_coloring[hv]]) return std::nullopt;
    host_used[hv] = 1;
    label_used[trial_coloring[hv]] = 1;
    if (host.vertices[hv].dim != pattern.vertices[p].dim) return std::nullopt;
  }
  for (auto [a, b] : pattern.edges)
    if (!host_edge(phi[a], phi[b])) return std::nullopt;
  return phi;
}

// ---------------------------------------------------------------------------
// Engines
// ---------------------------------------------------------------------------

namespace {

std::vector<long long> admissible_pattern_sizes(long long k, SearchMode mode) {
  std::vector<long long> sizes;
  if (mode == SearchMode::Exactly) {
    if (k >= 4 && k % 2 == 0) sizes.push_back(k);
  } else {
    for (long long t = 4; t <= k; t += 2) sizes.push_back(t);
  }
  return sizes;
}

// Exact engine: map pattern complex vertices injectively into host vertices so
// that every pattern triangle lands on a host triangle. By the subdivision
// correspondence this is exactly a color-preserving skeleton embedding; the
// image triangles are the witness.
class VertexBacktracker {
 public:
  VertexBacktracker(const Complex2& host, const Complex2& pattern)
      : host_(host), pattern_(pattern) {
    for (const auto& [v, ts] : pattern_.vertex_index()) pverts_.push_back(v);
    // order pattern vertices so that each (after the first) touches a
    // previously ordered one through a triangle
    std::vector<VertexId> order;
    std::vector<char> used(pverts_.size(), 0);
    order.push_back(pverts_[0]);
    used[0] = 1;
    while (order.size() < pverts_.size()) {
      bool advanced = false;
      for (std::size_t i = 0; i < pverts_.size() && !advanced; ++i) {
        if (used[i]) continue;
        for (const Triangle& t : pattern_.triangles()) {
          if (!t.has_vertex(pverts_[i])) continue;
          for (VertexId w : t.v)
            if (w != pverts_[i] &&
                std::find(order.begin(), order.end(), w) != order.end()) {
              order.push_back(pverts_[i]);
              used[i] = 1;
              advanced = true;
              break;
            }
          if (advanced) break;
        }
      }
      if (!advanced) {  // disconnected pattern; append rest
        for (std::size_t i = 0; i < pverts_.size(); ++i)
          if (!used[i]) {
            order.push_back(pverts_[i]);
            used[i] = 1;
          }
      }
    }
    pverts_ = order;
    for (const auto& [v, ts] : host_.vertex_index()) hverts_.push_back(v);
  }

  std::optional<std::vector<Triangle>> run() {
    assignment_.clear();
    if (recurse(0)) {
      std::vector<Triangle> witness;
      for (const Triangle& t : pattern_.triangles())
        witness.emplace_back(assignment_.at(t.v[0]), assignment_.at(t.v[1]),
                             assignment_.at(t.v[2]));
      std::sort(witness.begin(), witness.end());
      return witness;
    }
    return std::nullopt;
  }

 private:
  bool recurse(std::size_t idx) {
    if (idx == pverts_.size()) return true;
    VertexId p = pverts_[idx];
    std::size_t pdeg = pattern_.vertex_index().at(p).size();
    for (VertexId h : hverts_) {
      if (used_.count(h)) continue;
      if (host_.vertex_index().at(h).size() < pdeg) continue;
      assignment_[p] = h;
      if (check(p)) {
        used_.insert(h);
        if (recurse(idx + 1)) return true;
        used_.erase(h);
      }
      assignment_.erase(p);
    }
    return false;
  }

  // all pattern triangles whose corners are now fully assigned and contain p
  // must map onto host triangles
  bool check(VertexId p) {
    for (std::uint32_t ti : pattern_.vertex_index().at(p)) {
      const Triangle& t = pattern_.triangles()[ti];
      VertexId img[3];
      bool complete = true;
      for (int i = 0; i < 3; ++i) {
        auto it = assignment_.find(t.v[i]);
        if (it == assignment_.end()) {
          complete = false;
          break;
        }
        img[i] = it->second;
      }
      if (!complete) continue;
      if (!host_.contains(Triangle(img[0], img[1], img[2]))) return false;
    }
    return true;
  }

  const Complex2& host_;
  const Complex2& pattern_;
  std::vector<VertexId> pverts_, hverts_;
  std::map<VertexId, VertexId> assignment_;
  std::set<VertexId> used_;
};

std::optional<std::vector<Triangle>> witness_from_embedding(
    const Complex2& host, const ColoredSkeleton& host_skel, const ColoredSkeleton& pattern_skel,
    const std::vector<std::uint32_t>& phi) {
  std::vector<Triangle> witness;
  for (std::uint32_t p = 0; p < pattern_skel.size(); ++p) {
    if (pattern_skel.vertices[p].dim != 2) continue;
    const auto& simplex = host_skel.vertices[phi[p]].simplex;
    witness.emplace_back(simplex[0], simplex[1], simplex[2]);
  }
  std::sort(witness.begin(), witness.end());
  witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
  for (const Triangle& t : witness)
    if (!host.contains(t)) return std::nullopt;
  return witness;
}

SearchOutcome color_coding_engine(const Complex2& host, long long k, SearchMode mode,
                                  const ColorCodingOptions& cc) {
  SearchOutcome out;
  ColoredSkeleton host_skel = skeleton_with_dims(host);
  const std::size_t n = host_skel.size();

  long long cap = std::min<long long>(k, static_cast<long long>(host.triangle_count()));
  auto patterns = enumerate_sphere_triangulations(static_cast<int>(std::min<long long>(cap, 1000)));

  for (const Complex2& pattern : patterns) {
    long long t = static_cast<long long>(pattern.triangle_count());
    if (mode == SearchMode::Exactly && t != k) continue;
    if (t > cap) continue;

    ColoredSkeleton pat_skel = skeleton_with_dims(pattern);
    const std::size_t m = pat_skel.size();
    if (m > n) continue;
    if (m > 64)
      throw GuardExceeded("color-coding engine: pattern skeleton exceeds 64 vertices");
    TreeDecomposition td = tree_decomposition(pat_skel);

    std::uint64_t trials =
        cc.max_trials > 0 ? cc.max_trials : color_coding_trial_count(m, cc.delta);

    const std::uint64_t full_mask = (m == 64) ? ~0ull : ((1ull << m) - 1);
    auto run_trial = [&](std::uint64_t idx) -> std::optional<std::vector<Triangle>> {
      auto coloring = trial_coloring_for(cc.seed, idx, n, m);
      std::uint64_t present = 0;
      for (std::uint32_t c : coloring) present |= 1ull << c;
      if ((present & full_mask) != full_mask) return std::nullopt;
      auto phi = colorful_match_once(host_skel, pat_skel, coloring, td);
      if (!phi) return std::nullopt;
      auto w = witness_from_embedding(host, host_skel, pat_skel, *phi);
      if (!w) return std::nullopt;
      Complex2 sub = Complex2::from_triangles(*w);
      if (!whole_complex_is_sphere(sub)) return std::nullopt;
      return w;
    };

    unsigned workers = std::max(1u, cc.threads);
    if (workers == 1) {
      for (std::uint64_t i = 0; i < trials; ++i) {
        auto w = run_trial(i);
        if (w) {
          out.found = true;
          out.witness = std::move(*w);
          return out;
        }
      }
    } else {
      // chunked trial indices; the lowest successful index wins so results do
      // not depend on thread scheduling
      const std::uint64_t chunk = 512;
      std::atomic<std::uint64_t> next{0};
      std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
      std::mutex mu;
      std::map<std::uint64_t, std::vector<Triangle>> hits;
      auto work = [&]() {
        for (;;) {
          std::uint64_t c = next.fetch_add(1);
          std::uint64_t base = c * chunk;
          if (base >= trials || base > best.load()) return;
          std::uint64_t end = std::min(trials, base + chunk);
          for (std::uint64_t i = base; i < end && i < best.load(); ++i) {
            auto w = run_trial(i);
            if (w) {
              std::uint64_t cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
              std::lock_guard<std::mutex> lk(mu);
              hits.emplace(i, std::move(*w));
              break;
            }
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
      std::uint64_t b = best.load();
      if (b != std::numeric_limits<std::uint64_t>::max()) {
        out.found = true;
        out.witness = hits.at(b);
        return out;
      }
    }
  }
  return out;
}

}  // namespace

SearchOutcome find_sphere_subcomplex(const Complex2& host, long long k, SearchMode mode,
                                     SearchEngine engine, const ColorCodingOptions& cc) {
  if (k < 0) throw InvalidBudget("find_sphere_subcomplex: negative budget");
  SearchOutcome out;
  if (host.empty() || k < 4) return out;

  if (engine == SearchEngine::ColorCoding) return color_coding_engine(host, k, mode, cc);

  long long cap = std::min<long long>(k, static_cast<long long>(host.triangle_count()));
  auto sizes = admissible_pattern_sizes(cap, mode);
  if (mode == SearchMode::Exactly &&
      (k > cap || sizes.empty()))
    return out;
  if (sizes.empty()) return out;
  auto patterns = enumerate_sphere_triangulations(static_cast<int>(sizes.back()));

  for (const Complex2& pattern : patterns) {
    long long t = static_cast<long long>(pattern.triangle_count());
    if (std::find(sizes.begin(), sizes.end(), t) == sizes.end()) continue;
    VertexBacktracker bt(host, pattern);
    auto witness = bt.run();
    if (witness) {
      Complex2 sub = Complex2::from_triangles(*witness);
      if (!whole_complex_is_sphere(sub))
        throw Error("find_sphere_subcomplex: witness failed verification");
      out.found = true;
      out.witness = std::move(*witness);
      return out;
    }
  }
  return out;
}

SearchOutcome brute_force_sphere_subcomplex(const Complex2& host, long long k, SearchMode mode,
                                            std::size_t guard) {
  if (k < 0) throw InvalidBudget("brute_force_sphere_subcomplex: negative budget");
  if (host.triangle_count() > guard)
    throw OracleTooLarge("brute_force_sphere_subcomplex: instance above guard of " +
                         std::to_string(guard));
  SearchOutcome out;
  const auto& tris = host.triangles();
  long long n = static_cast<long long>(tris.size());
  long long lo = (mode == SearchMode::Exactly) ? k : 4;
  long long hi = std::min<long long>(k, n);
  for (long long s = lo; s <= hi; ++s) {
    if (s < 4 || s % 2 != 0) continue;  // closed surfaces have even size >= 4
    std::vector<std::uint32_t> comb(static_cast<std::size_t>(s));
    for (long long i = 0; i < s; ++i) comb[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
    for (;;) {
      std::vector<Triangle> subset;
      subset.reserve(comb.size());
      for (std::uint32_t i : comb) subset.push_back(tris[i]);
      Complex2 sub = Complex2::from_triangles(subset);
      if (whole_complex_is_sphere(sub)) {
        out.found = true;
        out.witness = std::move(subset);
        return out;
      }
      // next combination
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
