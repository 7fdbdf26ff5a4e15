#pragma once

#include <cstdint>
#include <vector>

namespace tokenswap {

// Rooted view of a tree: depths, Euler intervals and binary-lifting
// ancestors. Answers dist/lca/next-hop queries in O(log n) without the
// quadratic all-pairs table, which is what the big sparse instances need.
class TreeIndex {
 public:
  TreeIndex() = default;

  // adj must be the adjacency lists of a connected tree; neighbor order
  // fixes the DFS order (ascending ids keeps everything canonical).
  explicit TreeIndex(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    parent_.assign(n, -1);
    depth_.assign(n, 0);
    tin_.assign(n, 0);
    tout_.assign(n, 0);
    children_.assign(n, {});

    log_ = 1;
    while ((1 << log_) < n) ++log_;
    up_.assign(log_, std::vector<int>(n, 0));

    // Iterative DFS from root 0, scanning neighbors in the given order.
    std::vector<std::pair<int, std::size_t>> stack;
    stack.reserve(n);
    stack.emplace_back(0, 0);
    int timer = 0;
    tin_[0] = timer++;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx == adj[v].size()) {
        tout_[v] = timer;
        stack.pop_back();
        continue;
      }
      int to = adj[v][idx++];
      if (to == parent_[v]) continue;
      parent_[to] = v;
      depth_[to] = depth_[v] + 1;
      children_[v].push_back(to);
      tin_[to] = timer++;
      stack.emplace_back(to, 0);
    }

    up_[0][0] = 0;
    for (int v = 0; v < n; ++v) up_[0][v] = parent_[v] < 0 ? 0 : parent_[v];
    for (int k = 1; k < log_; ++k)
      for (int v = 0; v < n; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
  }

  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }

  bool is_ancestor(int a, int b) const { return tin_[a] <= tin_[b] && tout_[b] <= tout_[a]; }

  int lca(int u, int v) const {
    if (is_ancestor(u, v)) return u;
    if (is_ancestor(v, u)) return v;
    for (int k = log_ - 1; k >= 0; --k)
      if (!is_ancestor(up_[k][u], v)) u = up_[k][u];
    return up_[0][u];
  }

  int dist(int u, int v) const { return depth_[u] + depth_[v] - 2 * depth_[lca(u, v)]; }

  // The unique neighbor of u that lies on the path from u to target,
  // or -1 when u == target.
  int next_hop(int u, int target) const {
    if (u == target) return -1;
    if (!is_ancestor(u, target)) return parent_[u];
    // target is in u's subtree: binary search over children (tin-sorted).
    const auto& ch = children_[u];
    std::size_t lo = 0, hi = ch.size();
    while (lo + 1 < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (tin_[ch[mid]] <= tin_[target])
        lo = mid;
      else
        hi = mid;
    }
    return ch[lo];
  }

  bool on_path(int x, int a, int b) const { return dist(a, x) + dist(x, b) == dist(a, b); }

  // Exact distance from x to the path between a and b (tree median identity).
  int dist_to_path(int x, int a, int b) const {
    return (dist(x, a) + dist(x, b) - dist(a, b)) / 2;
  }

  std::vector<int> path(int u, int v) const {
    int m = lca(u, v);
    std::vector<int> left;
    for (int x = u; x != m; x = parent_[x]) left.push_back(x);
    left.push_back(m);
    std::vector<int> right;
    for (int x = v; x != m; x = parent_[x]) right.push_back(x);
    for (auto it = right.rbegin(); it != right.rend(); ++it) left.push_back(*it);
    return left;
  }

 private:
  int log_ = 0;
  std::vector<int> parent_, depth_, tin_, tout_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> up_;
};

}  // namespace tokenswap
