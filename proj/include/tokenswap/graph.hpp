#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tokenswap/errors.hpp"
#include "tokenswap/tree_index.hpp"

namespace tokenswap {

using Edge = std::pair<int, int>;  // stored normalized u < v

struct GraphOptions {
  // Above this vertex count the n x n distance table is not materialized;
  // trees fall back to the rooted index, other graphs to memoized BFS rows.
  int dense_limit = 20000;
};

class Graph {
 public:
  Graph() = default;

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool is_tree() const { return is_tree_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_dense_table() const { return !dense_.empty(); }
  const TreeIndex& tree_index() const { return *tree_; }

  void check_vertex(int v) const {
    require(v >= 0 && v < n_, errc::vertex_out_of_range,
            "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
  }

  bool is_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  // Index into edges() of the normalized pair, i.e. the canonical edge order.
  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    require(it != edges_.end() && *it == Edge{u, v}, errc::not_an_edge,
            "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    return static_cast<int>(it - edges_.begin());
  }

  int dist(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (!dense_.empty()) return dense_[static_cast<std::size_t>(u) * n_ + v];
    if (tree_) return tree_->dist(u, v);
    return lazy_dist(u, v);
  }

  // Deterministic shortest path: BFS from u scanning neighbors in ascending
  // id order, parent = first discoverer. Identical inputs give identical paths.
  std::vector<int> shortest_path(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return {u};
    if (tree_) return tree_->path(u, v);
    std::vector<int> par(n_, -1);
    std::queue<int> q;
    par[u] = u;
    q.push(u);
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      for (int nb : adj_[cur]) {
        if (par[nb] >= 0) continue;
        par[nb] = cur;
        if (nb == v) {
          std::vector<int> path;
          for (int x = v; x != u; x = par[x]) path.push_back(x);
          path.push_back(u);
          std::reverse(path.begin(), path.end());
          return path;
        }
        q.push(nb);
      }
    }
    fail(errc::disconnected, "no path between vertices");  // unreachable on valid graphs
  }

  std::vector<int> tree_path(int u, int v) const {
    require(is_tree_, errc::not_a_tree, "tree_path requires a tree");
    check_vertex(u);
    check_vertex(v);
    return tree_->path(u, v);
  }

  friend Graph build_graph(int n, std::vector<Edge> edges, const GraphOptions& opts);

 private:
  std::vector<int> bfs_row(int src) const {
    std::vector<int> d(n_, -1);
    std::queue<int> q;
    d[src] = 0;
    q.push(src);
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      for (int nb : adj_[cur])
        if (d[nb] < 0) {
          d[nb] = d[cur] + 1;
          q.push(nb);
        }
    }
    return d;
  }

  int lazy_dist(int u, int v) const {
    int src = std::min(u, v), dst = std::max(u, v);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->rows.find(src);
    if (it != cache_->rows.end()) return it->second[dst];
    auto row = bfs_row(src);
    int d = row[dst];
    if (cache_->rows.size() < kRowCacheCap) cache_->rows.emplace(src, std::move(row));
    return d;
  }

  static constexpr std::size_t kRowCacheCap = 512;

  struct RowCache {
    std::mutex mutex;
    std::unordered_map<int, std::vector<int>> rows;
  };

  int n_ = 0;
  bool is_tree_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint16_t> dense_;
  std::optional<TreeIndex> tree_;
  std::shared_ptr<RowCache> cache_ = std::make_shared<RowCache>();
};

inline Graph build_graph(int n, std::vector<Edge> edges, const GraphOptions& opts = {}) {
  require(n >= 1, errc::invalid_params, "vertex count must be >= 1");
  require(opts.dense_limit <= 65535, errc::invalid_params, "dense_limit above uint16 range");

  Graph g;
  g.n_ = n;
  for (auto& [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    require(u != v, errc::self_loop, "self loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    require(edges[i] != edges[i - 1], errc::duplicate_edge,
            "duplicate edge (" + std::to_string(edges[i].first) + "," +
                std::to_string(edges[i].second) + ")");
  g.edges_ = std::move(edges);

  g.adj_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

  auto reach = g.bfs_row(0);
  for (int v = 0; v < n; ++v)
    require(reach[v] >= 0, errc::disconnected, "vertex " + std::to_string(v) + " unreachable");

  g.is_tree_ = (g.m() == n - 1);
  if (g.is_tree_) g.tree_.emplace(g.adj_);

  if (n <= opts.dense_limit) {
    g.dense_.resize(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s) {
      auto row = g.bfs_row(s);
      for (int v = 0; v < n; ++v) g.dense_[static_cast<std::size_t>(s) * n + v] = static_cast<std::uint16_t>(row[v]);
    }
  }
  return g;
}

}  // namespace tokenswap
