#pragma once

#include <stdexcept>
#include <string>

namespace tokenswap {

enum class errc {
  self_loop,
  duplicate_edge,
  disconnected,
  vertex_out_of_range,
  not_a_tree,
  not_an_edge,
  not_a_bijection,
  arithmetic_overflow,
  internal_stuck,
  invalid_sequence,
  invalid_swap_edge,
  state_space_exceeded,
  unsolvable,
  not_a_barrier_instance,
  invalid_params,
  too_many_edges,
  baseline_unavailable,
  internal_invariant_violation,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::disconnected: return "Disconnected";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::not_a_tree: return "NotATree";
    case errc::not_an_edge: return "NotAnEdge";
    case errc::not_a_bijection: return "NotABijection";
    case errc::arithmetic_overflow: return "ArithmeticOverflow";
    case errc::internal_stuck: return "InternalStuck";
    case errc::invalid_sequence: return "InvalidSequence";
    case errc::invalid_swap_edge: return "InvalidSwapEdge";
    case errc::state_space_exceeded: return "StateSpaceExceeded";
    case errc::unsolvable: return "Unsolvable";
    case errc::not_a_barrier_instance: return "NotABarrierInstance";
    case errc::invalid_params: return "InvalidParams";
    case errc::too_many_edges: return "TooManyEdges";
    case errc::baseline_unavailable: return "BaselineUnavailable";
    case errc::internal_invariant_violation: return "InternalInvariantViolation";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace tokenswap
