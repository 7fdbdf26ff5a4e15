#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tokenswap/analysis.hpp"
#include "tokenswap/errors.hpp"
#include "tokenswap/instance.hpp"
#include "tokenswap/permutation.hpp"

namespace tokenswap {

struct CyclePlan {
  // Cycle tokens rotated so the carrier (minimum weight, ties by lowest id)
  // is last; consecutive entries satisfy pi(t_k) = t_{k+1} mod length.
  std::vector<int> cycle;
  // legs[k-1], k = 1..len-1: the fixed shortest path from v0(t_k) to
  // v0(t_{k+1}); the latter equals vf(t_k).
  std::vector<std::vector<int>> legs;

  int length() const { return static_cast<int>(cycle.size()); }
  int carrier() const { return cycle.back(); }
};

// One plan per non-trivial permutation cycle, in canonical cycle order.
inline std::vector<CyclePlan> plan_cycles(const Instance& inst) {
  Configuration start = Configuration::start_of(inst);
  CycleDecomposition dec = cycle_decomposition(permutation(inst, start));

  std::vector<CyclePlan> plans;
  for (const auto& cyc : dec.cycles) {
    if (cyc.size() < 2) continue;
    std::size_t carrier_pos = 0;
    for (std::size_t i = 1; i < cyc.size(); ++i) {
      const Token& best = inst.token(cyc[carrier_pos]);
      const Token& cand = inst.token(cyc[i]);
      if (cand.weight < best.weight || (cand.weight == best.weight && cand.id < best.id))
        carrier_pos = i;
    }
    CyclePlan plan;
    plan.cycle.reserve(cyc.size());
    for (std::size_t i = 1; i <= cyc.size(); ++i) plan.cycle.push_back(cyc[(carrier_pos + i) % cyc.size()]);
    for (std::size_t k = 0; k + 1 < plan.cycle.size(); ++k) {
      const Token& cur = inst.token(plan.cycle[k]);
      const Token& next = inst.token(plan.cycle[k + 1]);
      require(next.start == cur.dest, errc::internal_invariant_violation,
              "cycle chain broken between tokens " + std::to_string(cur.id) + " and " +
                  std::to_string(next.id));
      plan.legs.push_back(inst.graph().shortest_path(cur.start, next.start));
    }
    plans.push_back(std::move(plan));
  }
  return plans;
}

// 2*s_j + 2*W*sum of leg distances, with s_j the weighted start-configuration
// distance sum around the whole cycle. Replay cost attributable to the cycle
// must stay under this value.
inline Cost per_cycle_cost_bound(const CyclePlan& plan, const Instance& inst) {
  const Graph& g = inst.graph();
  Cost s = 0, transit = 0;
  int len = plan.length();
  for (int k = 0; k < len; ++k) {
    const Token& cur = inst.token(plan.cycle[k]);
    const Token& next = inst.token(plan.cycle[(k + 1) % len]);
    Cost d = g.dist(cur.start, next.start);
    s = checked_add(s, checked_mul(cur.weight, d));
    if (k + 1 < len) transit = checked_add(transit, d);
  }
  return checked_add(checked_mul(2, s), checked_mul(2, checked_mul(inst.max_weight(), transit)));
}

struct CycleExecution {
  std::size_t begin = 0, end = 0;       // swap span of this cycle
  std::vector<std::size_t> leg_begin;   // swap index at each k-iteration start (k = len-1 .. 1)
};

struct GeneralSolveResult {
  SwapSequence seq;
  std::vector<CyclePlan> plans;
  std::vector<CycleExecution> execs;
};

// Extended Cycle Algorithm: per cycle, for k = len-1 down to 1, walk t_k
// along its leg to its destination (displacing the leg interior and finally
// the carrier), then walk the carrier back along the same leg to v0(t_k).
// After the k = 1 iteration the carrier sits on its own destination.
inline GeneralSolveResult solve_general_detailed(const Instance& inst) {
  GeneralSolveResult result;
  result.plans = plan_cycles(inst);
  Configuration conf = Configuration::start_of(inst);

  for (const CyclePlan& plan : result.plans) {
    CycleExecution exec;
    exec.begin = result.seq.swaps.size();
    int carrier = plan.carrier();
    for (int k = plan.length() - 1; k >= 1; --k) {
      exec.leg_begin.push_back(result.seq.swaps.size());
      int mover = plan.cycle[k - 1];
      const std::vector<int>& leg = plan.legs[k - 1];
      require(conf.vertex_of(mover) == leg.front(), errc::internal_invariant_violation,
              "token " + std::to_string(mover) + " is not at its leg start");
      require(conf.token_at(leg.back()) == carrier, errc::internal_invariant_violation,
              "carrier is not at the leg end");
      for (std::size_t i = 0; i + 1 < leg.size(); ++i) {
        result.seq.swaps.push_back({leg[i], leg[i + 1]});
        conf.apply_swap(leg[i], leg[i + 1]);
      }
      for (std::size_t i = leg.size() - 1; i >= 2; --i) {
        result.seq.swaps.push_back({leg[i - 1], leg[i - 2]});
        conf.apply_swap(leg[i - 1], leg[i - 2]);
      }
    }
    require(conf.vertex_of(carrier) == inst.token(carrier).dest,
            errc::internal_invariant_violation, "carrier did not finish on its destination");
    exec.end = result.seq.swaps.size();
    result.execs.push_back(std::move(exec));
  }
  require(conf.all_happy(inst), errc::internal_invariant_violation,
          "cycle algorithm did not reach the all-happy configuration");
  return result;
}

inline SwapSequence solve_general(const Instance& inst) { return solve_general_detailed(inst).seq; }

inline std::vector<Cost> per_cycle_measured_costs(const Instance& inst,
                                                  const GeneralSolveResult& result) {
  Trace trace = replay(inst, result.seq);
  std::vector<Cost> costs;
  costs.reserve(result.execs.size());
  for (const CycleExecution& exec : result.execs) {
    Cost c = 0;
    for (std::size_t i = exec.begin; i < exec.end; ++i) c = checked_add(c, trace.records[i].cost);
    costs.push_back(c);
  }
  return costs;
}

// The structural invariant behind generalized local optimality: at every
// cycle boundary every token sits on its own start or destination vertex;
// at every k-iteration boundary the same holds for all tokens except the
// active cycle's carrier, which sits exactly on the current leg's far end.
inline PropertyVerdict verify_start_or_dest(const Instance& inst,
                                            const GeneralSolveResult& result) {
  Configuration conf = Configuration::start_of(inst);
  auto home = [&](int token_id) {
    int v = conf.vertex_of(token_id);
    return v == inst.token(token_id).start || v == inst.token(token_id).dest;
  };
  auto all_home_except = [&](int skip) {
    for (const Token& t : inst.tokens())
      if (t.id != skip && !home(t.id)) return t.id;
    return -1;
  };

  std::size_t pos = 0;
  for (const CyclePlan& plan : result.plans) {  // plans align with execs
    const CycleExecution& exec = result.execs[&plan - result.plans.data()];
    int bad = all_home_except(-1);
    if (bad >= 0)
      return {false, Violation{pos, "token " + std::to_string(bad) +
                                        " off start/dest at a cycle boundary"}};
    for (int k = plan.length() - 1; k >= 1; --k) {
      std::size_t leg_start = exec.leg_begin[plan.length() - 1 - k];
      while (pos < leg_start) {
        auto [u, v] = result.seq.swaps[pos++];
        conf.apply_swap(u, v);
      }
      int carrier = plan.carrier();
      bad = all_home_except(carrier);
      if (bad >= 0)
        return {false, Violation{pos, "token " + std::to_string(bad) +
                                          " off start/dest at a k-iteration boundary"}};
      int expected = plan.legs[k - 1].back();
      if (conf.vertex_of(carrier) != expected)
        return {false, Violation{pos, "carrier " + std::to_string(carrier) +
                                          " not at the leg end at a k-iteration boundary"}};
    }
    while (pos < exec.end) {
      auto [u, v] = result.seq.swaps[pos++];
      conf.apply_swap(u, v);
    }
  }
  int bad = all_home_except(-1);
  if (bad >= 0)
    return {false, Violation{pos, "token " + std::to_string(bad) + " off start/dest at the end"}};
  return {};
}

}  // namespace tokenswap
