#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "tokenswap/errors.hpp"
#include "tokenswap/instance.hpp"

namespace tokenswap {

enum class Heuristic { zero, half_sum, full_sum };

struct SearchLimits {
  std::uint64_t max_states = 5'000'000;
  std::optional<Cost> max_cost;
  Heuristic heuristic = Heuristic::full_sum;
};

struct OptResult {
  Cost cost = 0;
  SwapSequence sequence;
  std::uint64_t states_expanded = 0;
};

// Lower bound on the cheapest completion from conf: every token t still
// needs at least dist(v(t), vf(t)) swaps, each costing at least w(t) of its
// own weight. Zero exactly on the all-happy configuration.
inline Cost admissible_estimate(const Instance& inst, const Configuration& conf) {
  Cost h = 0;
  for (const Token& t : inst.tokens())
    h = checked_add(h, checked_mul(t.weight, inst.graph().dist(conf.vertex_of(t.id), t.dest)));
  return h;
}

namespace detail {

// Configuration key = the vertexOf array; packed into 4-bit nibbles for
// n <= 16, a byte string otherwise. Array order compares lexicographically
// in both encodings, which fixes the tie-break order.
struct PackedCodec {
  int n;
  using Key = std::uint64_t;
  Key encode(const std::vector<int>& vertex_of) const {
    Key k = 0;
    for (int t = 0; t < n; ++t) k = (k << 4) | static_cast<Key>(vertex_of[t]);
    return k;
  }
  void decode(Key k, std::vector<int>& vertex_of) const {
    for (int t = n - 1; t >= 0; --t) {
      vertex_of[t] = static_cast<int>(k & 0xF);
      k >>= 4;
    }
  }
  Key swapped(Key k, int token_a, int token_b, int u, int v) const {
    int sa = 4 * (n - 1 - token_a), sb = 4 * (n - 1 - token_b);
    k &= ~((Key{0xF} << sa) | (Key{0xF} << sb));
    return k | (static_cast<Key>(v) << sa) | (static_cast<Key>(u) << sb);
  }
};

struct ByteCodec {
  int n;
  using Key = std::string;
  Key encode(const std::vector<int>& vertex_of) const {
    Key k(static_cast<std::size_t>(n) * 4, '\0');
    for (int t = 0; t < n; ++t)
      for (int b = 0; b < 4; ++b) k[4 * t + b] = static_cast<char>((vertex_of[t] >> (24 - 8 * b)) & 0xFF);
    return k;
  }
  void decode(const Key& k, std::vector<int>& vertex_of) const {
    for (int t = 0; t < n; ++t) {
      int x = 0;
      for (int b = 0; b < 4; ++b) x = (x << 8) | static_cast<unsigned char>(k[4 * t + b]);
      vertex_of[t] = x;
    }
  }
  Key swapped(Key k, int token_a, int token_b, int u, int v) const {
    for (int b = 0; b < 4; ++b) {
      k[4 * token_a + b] = static_cast<char>((v >> (24 - 8 * b)) & 0xFF);
      k[4 * token_b + b] = static_cast<char>((u >> (24 - 8 * b)) & 0xFF);
    }
    return k;
  }
};

template <typename Codec>
OptResult astar(const Instance& inst, const SearchLimits& limits, const Codec& codec) {
  using Key = typename Codec::Key;
  const Graph& g = inst.graph();
  const int n = g.n();

  std::vector<int> vertex_of(n), token_at(n);
  Configuration start = Configuration::start_of(inst);
  for (int t = 0; t < n; ++t) vertex_of[t] = start.vertex_of(t);
  Key start_key = codec.encode(vertex_of);

  for (int t = 0; t < n; ++t) vertex_of[t] = inst.token(t).dest;
  Key goal_key = codec.encode(vertex_of);

  auto h_of = [&](const std::vector<int>& vo) {
    Cost h = 0;
    for (const Token& t : inst.tokens()) h += t.weight * g.dist(vo[t.id], t.dest);
    return h;
  };
  auto h_scaled = [&](Cost full) {
    switch (limits.heuristic) {
      case Heuristic::zero: return Cost{0};
      case Heuristic::half_sum: return full / 2;
      case Heuristic::full_sum: return full;
    }
    return Cost{0};
  };

  std::unordered_map<Key, Cost> best_g;
  std::unordered_map<Key, std::pair<Key, Edge>> pred;
  // Entries ordered by (f, g, key): smaller f first, then smaller g, then
  // lexicographically smaller configuration; deterministic witness follows.
  using Entry = std::tuple<Cost, Cost, Key>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;

  codec.decode(start_key, vertex_of);
  Cost h_start = h_of(vertex_of);
  best_g[start_key] = 0;
  open.emplace(h_scaled(h_start), 0, start_key);

  std::uint64_t expanded = 0;
  while (!open.empty()) {
    auto [f, gcost, key] = open.top();
    open.pop();
    auto it = best_g.find(key);
    if (it == best_g.end() || gcost > it->second) continue;  // stale entry
    if (key == goal_key) {
      OptResult res;
      res.cost = gcost;
      res.states_expanded = expanded;
      Key cur = key;
      while (cur != start_key) {
        auto [prev, edge] = pred.at(cur);
        res.sequence.swaps.push_back(edge);
        cur = prev;
      }
      std::reverse(res.sequence.swaps.begin(), res.sequence.swaps.end());
      return res;
    }
    if (++expanded > limits.max_states)
      fail(errc::state_space_exceeded,
           "expanded more than " + std::to_string(limits.max_states) + " states");

    codec.decode(key, vertex_of);
    for (int t = 0; t < n; ++t) token_at[vertex_of[t]] = t;
    Cost h_full = h_of(vertex_of);

    for (const Edge& e : g.edges()) {
      auto [u, v] = e;
      int a = token_at[u], b = token_at[v];
      const Token& ta = inst.token(a);
      const Token& tb = inst.token(b);
      Cost swap_cost = ta.weight + tb.weight;
      Cost child_g = gcost + swap_cost;
      Key child = codec.swapped(key, a, b, u, v);
      auto cit = best_g.find(child);
      if (cit != best_g.end() && cit->second <= child_g) continue;
      Cost child_h = h_full + ta.weight * (g.dist(v, ta.dest) - g.dist(u, ta.dest)) +
                     tb.weight * (g.dist(u, tb.dest) - g.dist(v, tb.dest));
      Cost child_f = child_g + h_scaled(child_h);
      if (limits.max_cost && child_f > *limits.max_cost) continue;
      best_g[child] = child_g;
      pred[child] = {key, e};
      open.emplace(child_f, child_g, child);
    }
  }
  // A connected graph always admits a solution, so an empty queue means the
  // cost ceiling pruned it away.
  if (limits.max_cost) fail(errc::state_space_exceeded, "cost ceiling pruned all solutions");
  fail(errc::unsolvable, "goal unreachable");
}

}  // namespace detail

// Provably optimal cost plus a witness sequence, by A* over configurations.
// The full-sum estimate is admissible and consistent (a swap changes it by
// at most the swap's own cost), so the search is exact for all three
// heuristic settings.
inline OptResult solve_exact(const Instance& inst, const SearchLimits& limits = {}) {
  if (inst.n() <= 16) return detail::astar(inst, limits, detail::PackedCodec{inst.n()});
  return detail::astar(inst, limits, detail::ByteCodec{inst.n()});
}

}  // namespace tokenswap
