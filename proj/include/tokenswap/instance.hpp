#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tokenswap/errors.hpp"
#include "tokenswap/graph.hpp"

namespace tokenswap {

using Cost = std::int64_t;

struct Token {
  int id = 0;
  Cost weight = 1;
  int start = 0;  // v0
  int dest = 0;   // vf
};

struct SwapSequence {
  std::vector<Edge> swaps;

  std::size_t size() const { return swaps.size(); }
  bool empty() const { return swaps.empty(); }
};

// Graph plus one token per vertex; starts and dests are bijections onto the
// vertex set and weights are positive integers. Immutable once built.
class Instance {
 public:
  Instance() = default;

  const Graph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  const std::vector<Token>& tokens() const { return tokens_; }
  const Token& token(int id) const { return tokens_[id]; }

  Cost min_weight() const { return min_weight_; }
  Cost max_weight() const { return max_weight_; }

  int token_starting_at(int vertex) const { return start_at_[vertex]; }
  int token_destined_to(int vertex) const { return dest_at_[vertex]; }

  // Start-to-destination distance d(t).
  int journey(int token_id) const {
    const Token& t = tokens_[token_id];
    return graph_.dist(t.start, t.dest);
  }

  friend Instance make_instance(Graph graph, std::vector<Token> tokens);

 private:
  Graph graph_;
  std::vector<Token> tokens_;
  std::vector<int> start_at_, dest_at_;
  Cost min_weight_ = 1, max_weight_ = 1;
};

inline Instance make_instance(Graph graph, std::vector<Token> tokens) {
  int n = graph.n();
  require(static_cast<int>(tokens.size()) == n, errc::invalid_params,
          "token count must equal vertex count");

  Instance inst;
  inst.start_at_.assign(n, -1);
  inst.dest_at_.assign(n, -1);
  std::vector<bool> seen(n, false);
  Cost wmin = 0, wmax = 0;
  for (const Token& t : tokens) {
    require(t.id >= 0 && t.id < n, errc::invalid_params,
            "token id " + std::to_string(t.id) + " out of range");
    require(!seen[t.id], errc::invalid_params, "duplicate token id " + std::to_string(t.id));
    seen[t.id] = true;
    graph.check_vertex(t.start);
    graph.check_vertex(t.dest);
    require(t.weight >= 1, errc::invalid_params,
            "token " + std::to_string(t.id) + " has non-positive weight");
    require(inst.start_at_[t.start] < 0, errc::invalid_params,
            "two tokens start at vertex " + std::to_string(t.start));
    require(inst.dest_at_[t.dest] < 0, errc::invalid_params,
            "two tokens destined to vertex " + std::to_string(t.dest));
    inst.start_at_[t.start] = t.id;
    inst.dest_at_[t.dest] = t.id;
    wmin = wmin == 0 ? t.weight : std::min(wmin, t.weight);
    wmax = std::max(wmax, t.weight);
  }

  // Cost budget: every solver here emits at most ~2 n^2 swaps of cost <= 2W,
  // so reject inputs whose worst case could overflow the 63-bit accumulator.
  __int128 budget = static_cast<__int128>(4) * wmax * n * n;
  require(budget < (static_cast<__int128>(1) << 63), errc::arithmetic_overflow,
          "weights too large: worst-case total cost exceeds the 63-bit budget");

  std::sort(tokens.begin(), tokens.end(), [](const Token& a, const Token& b) { return a.id < b.id; });
  inst.graph_ = std::move(graph);
  inst.tokens_ = std::move(tokens);
  inst.min_weight_ = wmin;
  inst.max_weight_ = wmax;
  return inst;
}

// Mutable token <-> vertex bijection; scratch state owned by one worker.
class Configuration {
 public:
  Configuration() = default;

  static Configuration start_of(const Instance& inst) {
    Configuration c;
    c.token_at_.assign(inst.n(), -1);
    c.vertex_of_.assign(inst.n(), -1);
    for (const Token& t : inst.tokens()) {
      c.token_at_[t.start] = t.id;
      c.vertex_of_[t.id] = t.start;
    }
    return c;
  }

  int token_at(int vertex) const { return token_at_[vertex]; }
  int vertex_of(int token_id) const { return vertex_of_[token_id]; }
  const std::vector<int>& vertex_of_all() const { return vertex_of_; }

  void apply_swap(int u, int v) {
    int a = token_at_[u], b = token_at_[v];
    token_at_[u] = b;
    token_at_[v] = a;
    vertex_of_[a] = v;
    vertex_of_[b] = u;
  }

  bool is_happy(const Instance& inst, int token_id) const {
    return vertex_of_[token_id] == inst.token(token_id).dest;
  }

  bool all_happy(const Instance& inst) const {
    for (const Token& t : inst.tokens())
      if (vertex_of_[t.id] != t.dest) return false;
    return true;
  }

 private:
  std::vector<int> token_at_, vertex_of_;
};

inline Cost checked_add(Cost a, Cost b) {
  Cost r;
  require(!__builtin_add_overflow(a, b, &r), errc::arithmetic_overflow, "cost accumulator overflow");
  return r;
}

inline Cost checked_mul(Cost a, Cost b) {
  Cost r;
  require(!__builtin_mul_overflow(a, b, &r), errc::arithmetic_overflow, "cost accumulator overflow");
  return r;
}

// Sum over tokens of weight * d(v0, vf); a lower bound on OPT, since every
// token must be moved at least its start-to-destination distance.
inline Cost opt_lower_bound(const Instance& inst) {
  Cost total = 0;
  for (const Token& t : inst.tokens())
    total = checked_add(total, checked_mul(t.weight, inst.graph().dist(t.start, t.dest)));
  return total;
}

}  // namespace tokenswap
