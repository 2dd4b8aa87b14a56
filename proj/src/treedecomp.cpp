#include "twosphere/treedecomp.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace twosphere {

int TreeDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

TreeDecomposition tree_decomposition_of_graph(
    std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }

  std::vector<std::set<std::uint32_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }

  std::vector<char> gone(n, 0);
  std::vector<std::uint32_t> elim_pos(n, 0);
  std::vector<std::vector<std::uint32_t>> bag_of(n);

  for (std::uint32_t step = 0; step < n; ++step) {
    // pick the vertex whose elimination adds the fewest fill edges
    std::uint32_t best = 0;
    long long best_fill = -1;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long long fill = 0;
      std::vector<std::uint32_t> nb(adj[v].begin(), adj[v].end());
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (!adj[nb[i]].count(nb[j])) ++fill;
      if (best_fill < 0 || fill < best_fill) {
        best_fill = fill;
        best = v;
      }
    }

    std::vector<std::uint32_t> nb(adj[best].begin(), adj[best].end());
    bag_of[best] = nb;
    bag_of[best].push_back(best);
    std::sort(bag_of[best].begin(), bag_of[best].end());
    elim_pos[best] = step;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    for (std::uint32_t u : nb) adj[u].erase(best);
    adj[best].clear();
    gone[best] = 1;
  }

  // order vertices by elimination position; bag i belongs to the i-th
  // eliminated vertex and attaches to the bag of its earliest-eliminated
  // strictly later neighbor (or the next bag, to keep a single tree).
  std::vector<std::uint32_t> by_pos(n);
  for (std::uint32_t v = 0; v < n; ++v) by_pos[elim_pos[v]] = v;

  td.bags.resize(n);
  for (std::uint32_t p = 0; p < n; ++p) td.bags[p] = bag_of[by_pos[p]];

  for (std::uint32_t p = 0; p + 1 < n; ++p) {
    std::uint32_t v = by_pos[p];
    std::uint32_t attach = p + 1;
    std::uint32_t best_pos = n;
    for (std::uint32_t u : bag_of[v]) {
      if (u == v) continue;
      best_pos = std::min(best_pos, elim_pos[u]);
    }
    if (best_pos < n) attach = best_pos;
    td.tree_edges.emplace_back(p, attach);
  }
  return td;
}

TreeDecomposition tree_decomposition(const ColoredSkeleton& g) {
  return tree_decomposition_of_graph(g.size(), g.edges);
}

bool validate_tree_decomposition(std::size_t n,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                                 const TreeDecomposition& td) {
  const std::size_t m = td.bags.size();
  if (m == 0) return false;
  if (td.tree_edges.size() != m - 1) return false;

  // bag graph must be connected (with m-1 edges that makes it a tree)
  std::vector<std::vector<std::uint32_t>> badj(m);
  for (const auto& [a, b] : td.tree_edges) {
    if (a >= m || b >= m) return false;
    badj[a].push_back(b);
    badj[b].push_back(a);
  }
  std::vector<char> seen(m, 0);
  std::queue<std::uint32_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t cnt = 1;
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    for (auto y : badj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++cnt;
        q.push(y);
      }
  }
  if (cnt != m) return false;

  // every vertex and every edge covered
  std::vector<std::vector<std::uint32_t>> bags_with(n);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t v : td.bags[i]) {
      if (v >= n) return false;
      bags_with[v].push_back(i);
    }
  for (std::uint32_t v = 0; v < n; ++v)
    if (bags_with[v].empty()) return false;
  for (const auto& [a, b] : edges) {
    bool covered = false;
    for (std::uint32_t i : bags_with[a])
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), b)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }

  // connectivity of the bags containing each vertex
  for (std::uint32_t v = 0; v < n; ++v) {
    std::set<std::uint32_t> want(bags_with[v].begin(), bags_with[v].end());
    std::set<std::uint32_t> got;
    std::queue<std::uint32_t> bq;
    bq.push(*want.begin());
    got.insert(*want.begin());
    while (!bq.empty()) {
      auto x = bq.front();
      bq.pop();
      for (auto y : badj[x])
        if (want.count(y) && got.insert(y).second) bq.push(y);
    }
    if (got.size() != want.size()) return false;
  }
  return true;
}

}  // namespace twosphere
