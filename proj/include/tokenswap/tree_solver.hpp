#pragma once

#include <set>
#include <string>
#include <vector>

#include "tokenswap/errors.hpp"
#include "tokenswap/instance.hpp"

namespace tokenswap {

struct SwapClass {
  enum Kind { happy_swap, shove, neither } kind = neither;
  int happy_token = -1;  // set for shoves

  bool operator==(const SwapClass&) const = default;
};

// Definitional classification: a happy swap moves both endpoint tokens
// strictly closer to their destinations; a shove pairs a happy token with
// one that moves strictly closer.
inline SwapClass classify_swap(const Instance& inst, const Configuration& conf, Edge edge) {
  const Graph& g = inst.graph();
  auto [u, v] = edge;
  require(u >= 0 && u < g.n() && v >= 0 && v < g.n() && g.is_edge(u, v), errc::not_an_edge,
          "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  const Token& a = inst.token(conf.token_at(u));
  const Token& b = inst.token(conf.token_at(v));
  bool closer_a = g.dist(v, a.dest) == g.dist(u, a.dest) - 1;
  bool closer_b = g.dist(u, b.dest) == g.dist(v, b.dest) - 1;
  if (closer_a && closer_b) return {SwapClass::happy_swap, -1};
  if (u == a.dest && closer_b) return {SwapClass::shove, a.id};
  if (v == b.dest && closer_a) return {SwapClass::shove, b.id};
  return {SwapClass::neither, -1};
}

// Happy Swap Algorithm, run weight-obliviously. Selection rule: among the
// edges in canonical sorted order, perform the first happy swap; if none
// exists, the first shove. The incremental engine below maintains, per
// vertex, the unique next hop of its token toward that token's destination
// (trees have exactly one), which makes each round O(log n) instead of a
// full edge rescan; its output is the same sequence the naive rescan
// produces, which the tests check against a reference implementation.
inline SwapSequence solve_tree(const Instance& inst) {
  const Graph& g = inst.graph();
  require(g.is_tree(), errc::not_a_tree, "solve_tree requires a tree");
  const TreeIndex& index = g.tree_index();
  const int n = g.n();

  Configuration conf = Configuration::start_of(inst);

  // nh[v]: next hop of the token on v toward its destination, -1 if happy.
  std::vector<int> nh(n, -1);
  // aimers[h]: edge ids (x,h) with nh[x] == h (x is then adjacent to h).
  std::vector<std::set<int>> aimers(n);
  // Edges whose endpoints aim at each other, i.e. current happy swaps.
  std::set<int> happy_edges;
  // For each vertex h whose token is happy and that has aimers: the entry
  // (min aimer edge, h). Its begin() is the first shove in canonical order.
  std::set<std::pair<int, int>> shove_front;
  std::vector<int> front_edge(n, -1);

  long long unhappy = 0;
  long long budget = 0;  // sum of d(t): swap-count cap, each swap uses >= 1 inevitable move

  auto hop_of = [&](int vertex) {
    return index.next_hop(vertex, inst.token(conf.token_at(vertex)).dest);
  };
  auto recheck_happy_edge = [&](int u, int v) {
    int eid = g.edge_index(u, v);
    if (nh[u] == v && nh[v] == u)
      happy_edges.insert(eid);
    else
      happy_edges.erase(eid);
  };
  auto fix_front = [&](int h) {
    int want = -1;
    if (nh[h] == -1 && !aimers[h].empty()) want = *aimers[h].begin();
    if (front_edge[h] == want) return;
    if (front_edge[h] >= 0) shove_front.erase({front_edge[h], h});
    if (want >= 0) shove_front.insert({want, h});
    front_edge[h] = want;
  };

  for (int v = 0; v < n; ++v) {
    nh[v] = hop_of(v);
    if (nh[v] != -1) {
      ++unhappy;
      aimers[nh[v]].insert(g.edge_index(v, nh[v]));
    }
    budget += index.dist(inst.token(conf.token_at(v)).start, inst.token(conf.token_at(v)).dest);
  }
  for (auto [u, v] : g.edges()) recheck_happy_edge(u, v);
  for (int v = 0; v < n; ++v) fix_front(v);

  SwapSequence seq;
  long long steps = 0;
  while (unhappy > 0) {
    int eid;
    if (!happy_edges.empty())
      eid = *happy_edges.begin();
    else if (!shove_front.empty())
      eid = shove_front.begin()->first;
    else
      fail(errc::internal_stuck, "no happy swap or shove but unhappy tokens remain");
    require(++steps <= budget, errc::internal_stuck, "swap budget sum(d(t)) exceeded");

    auto [u, v] = g.edges()[eid];
    seq.swaps.push_back({u, v});
    conf.apply_swap(u, v);

    int touched[2] = {u, v};
    std::set<int> recheck;
    std::set<int> fronts;
    for (int x : touched) {
      int old_hop = nh[x];
      if (old_hop != -1) {
        aimers[old_hop].erase(g.edge_index(x, old_hop));
        recheck.insert(g.edge_index(x, old_hop));
        fronts.insert(old_hop);
        --unhappy;
      }
      nh[x] = hop_of(x);
      if (nh[x] != -1) {
        aimers[nh[x]].insert(g.edge_index(x, nh[x]));
        recheck.insert(g.edge_index(x, nh[x]));
        fronts.insert(nh[x]);
        ++unhappy;
      }
      fronts.insert(x);
    }
    for (int e : recheck) {
      auto [a, b] = g.edges()[e];
      recheck_happy_edge(a, b);
    }
    for (int h : fronts) fix_front(h);
  }
  return seq;
}

struct MoveAudit {
  int token = -1;
  int from = -1, to = -1;
  bool inevitable = false;
  bool off_path = false;       // inevitable move whose edge leaves p(t)
  bool far_redundant = false;  // redundant move landing at distance > 1 from vf(t)
};

struct SwapAudit {
  MoveAudit moves[2];
  bool zero_inevitable = false;
};

struct InevitableAuditReport {
  std::vector<SwapAudit> swaps;
  int flags = 0;

  bool clean() const { return flags == 0; }
};

// Replay a solving sequence labelling each move inevitable (one of the
// token's first d(t) moves) or redundant, and flag the situations the tree
// analysis rules out: a swap with no inevitable move, an inevitable move
// off p(t), a redundant move ending farther than one step from vf(t).
inline InevitableAuditReport audit_inevitable(const Instance& inst, const SwapSequence& seq) {
  const Graph& g = inst.graph();
  require(g.is_tree(), errc::not_a_tree, "inevitable-move audit requires a tree");

  Configuration conf = Configuration::start_of(inst);
  std::vector<long long> moves_made(inst.n(), 0);
  InevitableAuditReport report;
  report.swaps.reserve(seq.swaps.size());

  auto on_path = [&](int x, const Token& t) {
    return g.dist(t.start, x) + g.dist(x, t.dest) == g.dist(t.start, t.dest);
  };

  for (std::size_t i = 0; i < seq.swaps.size(); ++i) {
    auto [u, v] = seq.swaps[i];
    require(u >= 0 && u < g.n() && v >= 0 && v < g.n() && g.is_edge(u, v), errc::invalid_sequence,
            "swap " + std::to_string(i) + " is not along an edge");
    SwapAudit audit;
    int from[2] = {u, v}, to[2] = {v, u};
    for (int s = 0; s < 2; ++s) {
      MoveAudit& m = audit.moves[s];
      m.token = conf.token_at(from[s]);
      m.from = from[s];
      m.to = to[s];
      const Token& t = inst.token(m.token);
      m.inevitable = ++moves_made[m.token] <= inst.journey(m.token);
      if (m.inevitable)
        m.off_path = !(on_path(m.from, t) && on_path(m.to, t));
      else
        m.far_redundant = g.dist(m.to, t.dest) > 1;
      report.flags += (m.off_path ? 1 : 0) + (m.far_redundant ? 1 : 0);
    }
    audit.zero_inevitable = !audit.moves[0].inevitable && !audit.moves[1].inevitable;
    report.flags += audit.zero_inevitable ? 1 : 0;
    conf.apply_swap(u, v);
    report.swaps.push_back(audit);
  }
  require(conf.all_happy(inst), errc::invalid_sequence,
          "sequence does not end in the all-happy configuration");
  return report;
}

}  // namespace tokenswap
