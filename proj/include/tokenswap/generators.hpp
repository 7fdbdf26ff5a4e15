#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "tokenswap/errors.hpp"
#include "tokenswap/instance.hpp"
#include "tokenswap/rng.hpp"

namespace tokenswap {

// ---------------------------------------------------------------------------
// Barrier family: a path of path_len vertices with a star of `leaves` leaf
// vertices attached to each end. Path tokens weigh big_weight and start
// happy; leaf tokens weigh small_weight and want to trade sides.
// Vertex layout: path 0..path_len-1, left leaves path_len..path_len+leaves-1,
// right leaves path_len+leaves..path_len+2*leaves-1. Token id = start vertex.
// ---------------------------------------------------------------------------

struct BarrierParams {
  std::int64_t path_len = 1;   // number of interior path vertices
  std::int64_t leaves = 1;     // leaf count per star
  Cost small_weight = 1;       // w, on leaf tokens
  Cost big_weight = 1;         // W, on path tokens

  std::int64_t n() const { return path_len + 2 * leaves; }
};

inline void validate(const BarrierParams& p) {
  require(p.path_len >= 1, errc::invalid_params, "path length must be >= 1");
  require(p.leaves >= p.path_len, errc::invalid_params,
          "star size must be at least the path length");
  require(p.small_weight >= 1 && p.big_weight >= p.small_weight, errc::invalid_params,
          "need 1 <= w <= W");
}

inline Instance gen_tree_barrier(const BarrierParams& p, const GraphOptions& opts = {}) {
  validate(p);
  int l = static_cast<int>(p.path_len), N = static_cast<int>(p.leaves);
  int n = l + 2 * N;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1});
  for (int i = 0; i < N; ++i) edges.push_back({0, l + i});
  for (int i = 0; i < N; ++i) edges.push_back({l - 1, l + N + i});

  std::vector<Token> tokens(n);
  for (int v = 0; v < l; ++v) tokens[v] = {v, p.big_weight, v, v};
  for (int i = 0; i < N; ++i) {
    int left = l + i, right = l + N + i;
    tokens[left] = {left, p.small_weight, left, right};
    tokens[right] = {right, p.small_weight, right, left};
  }
  return make_instance(build_graph(n, std::move(edges), opts), std::move(tokens));
}

// Recover the parameters of an instance produced by gen_tree_barrier;
// throws NotABarrierInstance when the shape, weights or pairing differ.
inline BarrierParams barrier_params_of(const Instance& inst) {
  const Graph& g = inst.graph();
  auto bad = [&](const std::string& why) -> BarrierParams {
    fail(errc::not_a_barrier_instance, why);
  };
  if (!g.is_tree()) bad("graph is not a tree");
  int n = g.n();
  // deg(0) = leaves + 1 when path_len >= 2, or 2*leaves when path_len == 1.
  for (int cand = 0; cand < 2; ++cand) {
    int deg0 = g.degree(0);
    std::int64_t N = cand == 0 ? deg0 - 1 : deg0 / 2;
    std::int64_t l = n - 2 * N;
    if (N < 1 || l < 1 || (cand == 0 && l < 2) || (cand == 1 && l != 1)) continue;
    BarrierParams p;
    p.path_len = l;
    p.leaves = N;
    p.small_weight = inst.min_weight();
    p.big_weight = inst.max_weight();
    Instance expect;
    try {
      expect = gen_tree_barrier(p, GraphOptions{.dense_limit = 1});
    } catch (const error&) {
      continue;
    }
    if (expect.graph().edges() != g.edges()) continue;
    bool same = true;
    for (int t = 0; t < n && same; ++t) {
      const Token &a = inst.token(t), &b = expect.token(t);
      same = a.weight == b.weight && a.start == b.start && a.dest == b.dest;
    }
    if (same) return p;
  }
  return bad("instance does not match the generated barrier layout");
}

namespace detail {

// Swap-sequence builder over a live configuration with token tracking.
class StagedBuilder {
 public:
  explicit StagedBuilder(const Instance& inst)
      : inst_(inst), conf_(Configuration::start_of(inst)) {}

  int pos(int token) const { return conf_.vertex_of(token); }
  int occupant(int vertex) const { return conf_.token_at(vertex); }

  void swap(int u, int v) {
    seq_.swaps.push_back({u, v});
    conf_.apply_swap(u, v);
  }

  // Move a token one step at a time along the given vertex list.
  void walk(int token, const std::vector<int>& vertices) {
    for (int v : vertices) {
      int at = pos(token);
      require(inst_.graph().is_edge(at, v), errc::internal_invariant_violation,
              "staged walk leaves the graph");
      swap(at, v);
    }
  }

  const Configuration& conf() const { return conf_; }
  SwapSequence take() { return std::move(seq_); }
  std::size_t swaps_so_far() const { return seq_.swaps.size(); }

 private:
  const Instance& inst_;
  Configuration conf_;
  SwapSequence seq_;
};

}  // namespace detail

// Counts that pin the staged witness cost exactly:
// cost = big_moves * W + (2*N*(l+1) + 2*detours) * w, where big_moves counts
// swaps that move a path token and detours counts off-geodesic leaf visits
// by leaf tokens. The three-stage closed form corresponds to
// big_moves = l(l+1) with detours = 0, which no valid swap schedule realizes
// beyond l = N = 1: each star door admits one token per eviction, so a
// schedule must either move path tokens again or detour leaf tokens. This
// witness keeps the path-token walks at l(l-1)+2 moves (all but one park in
// the left star, the last one steps right) and pays the detours its
// door-cycle breaking needs.
struct StagedCostBreakdown {
  std::int64_t big_moves = 0;
  std::int64_t detours = 0;
  Cost total = 0;
};

StagedCostBreakdown staged_cost_breakdown(const BarrierParams& p);

// Replayable witness for the barrier family; replay always ends all-happy
// and costs exactly staged_cost_breakdown(params).total.
SwapSequence staged_barrier_solution(const Instance& inst);

// ---------------------------------------------------------------------------
// Cycle-shift family: n-cycle, token at vertex i wants vertex (i+1) mod n.
// ---------------------------------------------------------------------------
inline Instance gen_cycle_shift(int n, const std::vector<Cost>& weights,
                                const GraphOptions& opts = {}) {
  require(n >= 3, errc::invalid_params, "cycle needs at least 3 vertices");
  require(static_cast<int>(weights.size()) == n, errc::invalid_params,
          "need one weight per vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  std::vector<Token> tokens(n);
  for (int i = 0; i < n; ++i) tokens[i] = {i, weights[i], i, (i + 1) % n};
  return make_instance(build_graph(n, std::move(edges), opts), std::move(tokens));
}

// ---------------------------------------------------------------------------
// Random families. All randomness flows through Rng (mt19937_64 + the pinned
// bounded draw); the draw order below is part of the format.
// ---------------------------------------------------------------------------

inline std::vector<Edge> prufer_to_edges(const std::vector<int>& code, int n) {
  std::vector<int> degree(n, 1);
  for (int v : code) ++degree[v];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Smallest-leaf elimination via a min-heap-free scan: standard linear decode.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : code) {
    edges.push_back({std::min(leaf, v), std::max(leaf, v)});
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (ptr < n && degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({std::min(leaf, n - 1), std::max(leaf, n - 1)});
  return edges;
}

inline std::vector<Edge> random_tree_edges(int n, Rng& rng) {
  if (n == 1) return {};
  if (n == 2) return {{0, 1}};
  std::vector<int> code(n - 2);
  for (int& c : code) c = static_cast<int>(rng.uniform(0, n - 1));
  return prufer_to_edges(code, n);
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return perm;
}

inline std::vector<Token> assign_tokens(int n, const std::vector<int>& dest_of_vertex,
                                        Cost wmin, Cost wmax, Rng& rng) {
  std::vector<Token> tokens(n);
  for (int v = 0; v < n; ++v)
    tokens[v] = {v, static_cast<Cost>(rng.uniform_i64(wmin, wmax)), v, dest_of_vertex[v]};
  return tokens;
}

// Draw order: tree code, destination permutation, weights.
inline Instance gen_random_tree(int n, Cost wmin, Cost wmax, std::uint64_t seed,
                                const GraphOptions& opts = {}) {
  require(n >= 1, errc::invalid_params, "need n >= 1");
  require(1 <= wmin && wmin <= wmax, errc::invalid_params, "need 1 <= wmin <= wmax");
  Rng rng(seed);
  auto edges = random_tree_edges(n, rng);
  auto dest = random_permutation(n, rng);
  auto tokens = assign_tokens(n, dest, wmin, wmax, rng);
  return make_instance(build_graph(n, std::move(edges), opts), std::move(tokens));
}

// Draw order: spanning-tree code, extra-edge shuffle, permutation, weights.
inline Instance gen_random_graph(int n, std::int64_t m, Cost wmin, Cost wmax,
                                 std::uint64_t seed, const GraphOptions& opts = {}) {
  require(n >= 1, errc::invalid_params, "need n >= 1");
  require(m >= n - 1, errc::invalid_params, "need m >= n-1 for connectivity");
  require(m <= static_cast<std::int64_t>(n) * (n - 1) / 2, errc::too_many_edges,
          "more edges than a simple graph allows");
  require(1 <= wmin && wmin <= wmax, errc::invalid_params, "need 1 <= wmin <= wmax");
  Rng rng(seed);
  auto edges = random_tree_edges(n, rng);
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) used[static_cast<std::size_t>(u) * n + v] = 1;
  std::vector<Edge> rest;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used[static_cast<std::size_t>(u) * n + v]) rest.push_back({u, v});
  rng.shuffle(rest);
  for (std::int64_t i = 0; i < m - (n - 1); ++i) edges.push_back(rest[i]);
  auto dest = random_permutation(n, rng);
  auto tokens = assign_tokens(n, dest, wmin, wmax, rng);
  return make_instance(build_graph(n, std::move(edges), opts), std::move(tokens));
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration (acceptance sweeps): all labeled trees on n vertices
// via Prufer codes, and all connected labeled graphs via edge-mask filtering.
// ---------------------------------------------------------------------------

inline void enumerate_trees(int n, const std::function<void(const std::vector<Edge>&)>& fn) {
  require(n >= 1, errc::invalid_params, "need n >= 1");
  if (n == 1) {
    fn({});
    return;
  }
  if (n == 2) {
    fn({{0, 1}});
    return;
  }
  std::vector<int> code(n - 2, 0);
  for (;;) {
    fn(prufer_to_edges(code, n));
    int i = n - 3;
    while (i >= 0 && code[i] == n - 1) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
}

inline void enumerate_connected_graphs(
    int n, const std::function<void(const std::vector<Edge>&)>& fn) {
  require(n >= 1 && n <= 6, errc::invalid_params, "exhaustive graphs limited to n <= 6");
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  int m = static_cast<int>(all.size());
  std::vector<int> parent(n);
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int comps = n;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        int a = find(all[e].first), b = find(all[e].second);
        if (a != b) {
          parent[a] = b;
          --comps;
        }
      }
    if (comps != 1) continue;
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) edges.push_back(all[e]);
    fn(edges);
  }
}

}  // namespace tokenswap
