#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <pgraph/graph.hpp>
#include <pgraph/op.hpp>

// Brute-force ground truth. Everything in here re-derives the rewrite
// semantics naively and directly from the defining equations, on purpose:
// resolution is the literal nested form over written strings, never a call
// into the engine's resolve/apply, so agreement between the two is evidence
// rather than tautology.
namespace pgraph::oracle {

struct SweepBounds {
  std::size_t n = 2;               // exhaustive state enumeration needs n <= 3
  std::size_t max_target_len = 3;  // written left-string length, b0 included
  std::size_t max_source_len = 3;  // written right-string length
};

struct Violation {
  std::string state_text;
  std::string op_text;
  std::string equation;
};

struct Report {
  std::uint64_t cases_checked = 0;
  std::uint64_t antecedent_cases = 0;  // fixed-construction sweeps only
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

/// All (n^n)^2 states, each exactly once, ordered lexicographically on
/// succ0 then succ1. Throws BoundsExceeded for n > 3.
std::vector<GraphState> enumerate_states(std::size_t n);

/// All ops with origin < n, written target length in [1, max_target_len]
/// and written source length in [0, max_source_len]: origin ascending, then
/// target strings by length then lexicographically, then source strings
/// likewise.
std::vector<PrimitiveOp> enumerate_ops(const SweepBounds& bounds);

/// Checks one (pre, op, post) triple against the three defining equations,
/// resolving the op's paths naively in `pre`. Returns the violated equation,
/// or nothing when all three hold.
std::optional<std::string> postcondition_violation(const GraphState& pre, const PrimitiveOp& op,
                                                   const GraphState& post);

/// The fixed-point equation f_b0(b) == a, resolved naively.
bool equation_fixed(const GraphState& s, const PrimitiveOp& op);

using ApplyFn = std::function<GraphState(const GraphState&, const PrimitiveOp&)>;
using FixedFn = std::function<bool(const GraphState&, const PrimitiveOp&)>;

/// Every enumerated (state, op) pair: `apply` must satisfy all three
/// postcondition equations. The default checks the engine's apply_op.
Report check_postconditions(const SweepBounds& bounds);
Report check_postconditions(const SweepBounds& bounds, const ApplyFn& apply);

/// Every enumerated (state, op) pair: `fixed(s, op)`, `apply(s, op) == s`,
/// and the naive fixed-point equation must agree.
Report check_fixed_point_iff(const SweepBounds& bounds);
Report check_fixed_point_iff(const SweepBounds& bounds, const FixedFn& fixed,
                             const ApplyFn& apply);

/// Samples `programs` random compositions (1..3 ops) and pairs each with a
/// random state and with the all-self-loop state. Wherever every op is
/// individually fixed, the whole composition must be fixed too. The
/// all-self-loop pairing guarantees at least one such antecedent case;
/// a sweep that somehow finds none fails.
Report check_fixed_construction(const SweepBounds& bounds, std::uint64_t programs,
                                std::uint64_t seed);

/// Summary line(s) for one report.
std::string to_text(const Report& report, std::string_view name);

/// Streams one "case<TAB>status" line per exhaustive (state, op) case of
/// both the postcondition and fixed-point sweeps.
void dump_cases(const SweepBounds& bounds, std::ostream& out);

}  // namespace pgraph::oracle
