#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tokenswap/errors.hpp"
#include "tokenswap/instance.hpp"

namespace tokenswap {

// pi(t) = the token currently occupying t's destination vertex.
inline std::vector<int> permutation(const Instance& inst, const Configuration& conf) {
  std::vector<int> pi(inst.n());
  for (const Token& t : inst.tokens()) pi[t.id] = conf.token_at(t.dest);
  return pi;
}

struct CycleDecomposition {
  // Within a cycle consecutive entries satisfy pi(c[i]) = c[i+1] (mod length).
  // Canonical form: each cycle rotated so its minimum token id is first,
  // cycles sorted by that id; fixed points appear as 1-cycles.
  std::vector<std::vector<int>> cycles;

  std::vector<int> to_permutation(int n) const {
    std::vector<int> pi(n, -1);
    for (const auto& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i) pi[cyc[i]] = cyc[(i + 1) % cyc.size()];
    return pi;
  }
};

inline CycleDecomposition cycle_decomposition(const std::vector<int>& pi) {
  int n = static_cast<int>(pi.size());
  std::vector<bool> hit(n, false);
  for (int x : pi) {
    require(x >= 0 && x < n, errc::not_a_bijection, "value " + std::to_string(x) + " out of range");
    require(!hit[x], errc::not_a_bijection, "value " + std::to_string(x) + " repeated");
    hit[x] = true;
  }

  CycleDecomposition dec;
  std::vector<bool> used(n, false);
  for (int start = 0; start < n; ++start) {
    if (used[start]) continue;
    std::vector<int> cyc;
    for (int x = start; !used[x]; x = pi[x]) {
      used[x] = true;
      cyc.push_back(x);
    }
    dec.cycles.push_back(std::move(cyc));  // min element is first by scan order
  }
  return dec;
}

}  // namespace tokenswap
