#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tokenswap/errors.hpp"
#include "tokenswap/exact_solver.hpp"
#include "tokenswap/instance.hpp"

namespace tokenswap {

struct SwapRecord {
  Edge edge;
  int token_u = 0, token_v = 0;  // tokens on edge.first / edge.second before the swap
  Cost weight_u = 0, weight_v = 0;
  Cost cost = 0;
  // Distances to destination / start for each token, before and after.
  int dist_dest_u_before = 0, dist_dest_u_after = 0;
  int dist_dest_v_before = 0, dist_dest_v_after = 0;
  int dist_start_u_before = 0, dist_start_u_after = 0;
  int dist_start_v_before = 0, dist_start_v_after = 0;
};

struct Trace {
  std::vector<SwapRecord> records;
  Cost total_cost = 0;
  bool final_ok = false;
};

// Simulate a sequence from the start configuration, validating every swap
// is along a graph edge and accounting per-swap costs.
inline Trace replay(const Instance& inst, const SwapSequence& seq) {
  const Graph& g = inst.graph();
  Configuration conf = Configuration::start_of(inst);
  Trace trace;
  trace.records.reserve(seq.swaps.size());
  for (std::size_t i = 0; i < seq.swaps.size(); ++i) {
    auto [u, v] = seq.swaps[i];
    require(u >= 0 && u < g.n() && v >= 0 && v < g.n() && g.is_edge(u, v), errc::invalid_swap_edge,
            "swap " + std::to_string(i) + ": (" + std::to_string(u) + "," + std::to_string(v) +
                ") is not an edge");
    SwapRecord rec;
    rec.edge = {u, v};
    rec.token_u = conf.token_at(u);
    rec.token_v = conf.token_at(v);
    const Token& a = inst.token(rec.token_u);
    const Token& b = inst.token(rec.token_v);
    rec.weight_u = a.weight;
    rec.weight_v = b.weight;
    rec.cost = a.weight + b.weight;
    rec.dist_dest_u_before = g.dist(u, a.dest);
    rec.dist_dest_u_after = g.dist(v, a.dest);
    rec.dist_dest_v_before = g.dist(v, b.dest);
    rec.dist_dest_v_after = g.dist(u, b.dest);
    rec.dist_start_u_before = g.dist(u, a.start);
    rec.dist_start_u_after = g.dist(v, a.start);
    rec.dist_start_v_before = g.dist(v, b.start);
    rec.dist_start_v_after = g.dist(u, b.start);
    conf.apply_swap(u, v);
    trace.total_cost = checked_add(trace.total_cost, rec.cost);
    trace.records.push_back(rec);
  }
  trace.final_ok = conf.all_happy(inst);
  return trace;
}

inline Cost sequence_cost(const Instance& inst, const SwapSequence& seq) {
  return replay(inst, seq).total_cost;
}

// Max over time and tokens of the distance from the token to its unique
// start-to-destination path. Trees only; distance-to-path uses the exact
// median identity (d(x,a) + d(x,b) - d(a,b)) / 2.
inline int straying_value(const Instance& inst, const SwapSequence& seq) {
  const Graph& g = inst.graph();
  require(g.is_tree(), errc::not_a_tree, "straying is defined on trees only");
  auto dist_to_path = [&](int x, const Token& t) {
    return (g.dist(x, t.start) + g.dist(x, t.dest) - g.dist(t.start, t.dest)) / 2;
  };
  Configuration conf = Configuration::start_of(inst);
  int worst = 0;  // at the start every token sits on its own path
  for (std::size_t i = 0; i < seq.swaps.size(); ++i) {
    auto [u, v] = seq.swaps[i];
    require(g.is_edge(u, v), errc::invalid_swap_edge, "swap " + std::to_string(i) + " off-edge");
    conf.apply_swap(u, v);
    worst = std::max(worst, dist_to_path(v, inst.token(conf.token_at(v))));
    worst = std::max(worst, dist_to_path(u, inst.token(conf.token_at(u))));
  }
  return worst;
}

struct Violation {
  std::size_t swap_index = 0;
  std::string detail;
};

struct PropertyVerdict {
  bool holds = true;
  std::optional<Violation> first_violation;
};

// Every swap moves at least one token strictly closer to its destination
// or strictly closer to its start.
inline PropertyVerdict is_generalized_locally_optimal(const Instance& inst,
                                                      const SwapSequence& seq) {
  Trace trace = replay(inst, seq);
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const SwapRecord& r = trace.records[i];
    bool ok = r.dist_dest_u_after < r.dist_dest_u_before ||
              r.dist_dest_v_after < r.dist_dest_v_before ||
              r.dist_start_u_after < r.dist_start_u_before ||
              r.dist_start_v_after < r.dist_start_v_before;
    if (!ok)
      return {false,
              Violation{i, "swap moves token " + std::to_string(r.token_u) + " and token " +
                               std::to_string(r.token_v) +
                               " closer to neither destination nor start"}};
  }
  return {};
}

// No swap moves both tokens strictly farther from their destinations.
inline PropertyVerdict is_locally_optimal(const Instance& inst, const SwapSequence& seq) {
  Trace trace = replay(inst, seq);
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const SwapRecord& r = trace.records[i];
    if (r.dist_dest_u_after > r.dist_dest_u_before && r.dist_dest_v_after > r.dist_dest_v_before)
      return {false,
              Violation{i, "swap moves tokens " + std::to_string(r.token_u) + " and " +
                               std::to_string(r.token_v) + " both farther from their destinations"}};
  }
  return {};
}

struct Ratio {
  Cost num = 0;
  Cost den = 1;

  void reduce() {
    Cost g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

enum class BaselineKind { exact_opt, lower_bound, given_sequence };

inline const char* baseline_name(BaselineKind k) {
  switch (k) {
    case BaselineKind::exact_opt: return "exact";
    case BaselineKind::lower_bound: return "lower-bound";
    case BaselineKind::given_sequence: return "given";
  }
  return "?";
}

struct Baseline {
  BaselineKind kind = BaselineKind::lower_bound;
  SearchLimits limits{};                  // for exact_opt
  const SwapSequence* given = nullptr;    // for given_sequence
};

struct RatioReport {
  Cost alg_cost = 0;
  BaselineKind baseline = BaselineKind::lower_bound;
  Cost baseline_cost = 0;
  Ratio ratio;            // alg_cost / baseline_cost, exact
  Ratio ceiling;          // 1 + W/w on trees, 2 + 2W/w otherwise
  bool ratio_defined = false;  // false when baseline cost is 0
};

inline Ratio approximation_ceiling(const Instance& inst) {
  Ratio c;
  if (inst.graph().is_tree())
    c = {inst.min_weight() + inst.max_weight(), inst.min_weight()};
  else
    c = {2 * (inst.min_weight() + inst.max_weight()), inst.min_weight()};
  c.reduce();
  return c;
}

inline RatioReport ratio_report(const Instance& inst, const SwapSequence& alg_seq,
                                const Baseline& baseline) {
  Trace trace = replay(inst, alg_seq);
  require(trace.final_ok, errc::invalid_sequence, "algorithm sequence does not solve the instance");

  RatioReport rep;
  rep.alg_cost = trace.total_cost;
  rep.baseline = baseline.kind;
  switch (baseline.kind) {
    case BaselineKind::exact_opt: {
      try {
        rep.baseline_cost = solve_exact(inst, baseline.limits).cost;
      } catch (const error& e) {
        if (e.code() == errc::state_space_exceeded)
          fail(errc::baseline_unavailable, "exact solver exceeded its limits");
        throw;
      }
      break;
    }
    case BaselineKind::lower_bound:
      rep.baseline_cost = opt_lower_bound(inst);
      break;
    case BaselineKind::given_sequence: {
      require(baseline.given != nullptr, errc::invalid_params, "missing baseline sequence");
      Trace base = replay(inst, *baseline.given);
      require(base.final_ok, errc::invalid_sequence, "baseline sequence does not solve the instance");
      rep.baseline_cost = base.total_cost;
      break;
    }
  }
  if (rep.baseline_cost > 0) {
    rep.ratio = {rep.alg_cost, rep.baseline_cost};
    rep.ratio.reduce();
    rep.ratio_defined = true;
  }
  rep.ceiling = approximation_ceiling(inst);
  return rep;
}

}  // namespace tokenswap
