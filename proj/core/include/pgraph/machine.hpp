#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <pgraph/graph.hpp>
#include <pgraph/op.hpp>

namespace pgraph {

struct RunLimits {
  /// Upper bound on trajectory length explored (T applications that advance
  /// the state). Must be at least 1.
  std::uint64_t max_steps = 1'000'000;

  /// How many trajectory states are remembered verbatim for cycle detection.
  /// Recurrences into the remembered prefix are found exactly; beyond the
  /// budget a two-speed (Brent) scan takes over, so detection never needs
  /// unbounded memory.
  std::size_t max_tracked_states = 65'536;
};

enum class TraceMode { none, hash, full };

struct TraceEntry {
  std::uint64_t step = 0;  // entry k is the state after k applications of T
  std::uint64_t digest = 0;
  std::optional<std::string> state_text;  // present in full mode
};

struct Trace {
  std::vector<TraceEntry> entries;
};

/// T(final) == final; `steps` counts the applications that advanced the
/// state before the fixed point was confirmed (an initially fixed state
/// reports 0).
struct Halted {
  std::uint64_t steps = 0;
  GraphState final_state;
};

/// The state at trajectory index `prefix` recurred at `prefix + period`,
/// with minimal prefix and period. The machine itself never halts on such
/// trajectories; this outcome is a diagnostic extension.
struct Cycled {
  std::uint64_t prefix = 0;
  std::uint64_t period = 0;
};

/// Neither a fixed point nor a cycle was detected within max_steps.
struct StepLimit {
  std::uint64_t steps = 0;
  GraphState last;
};

using RunOutcome = std::variant<Halted, Cycled, StepLimit>;

struct RunResult {
  RunOutcome outcome;
  Trace trace;
};

/// True iff the whole composition maps `s` to itself. Halting is decided
/// per T application, not per primitive op: a state where ops cancel
/// pairwise counts as fixed.
bool is_comp_fixed(const GraphState& s, const Composition& t);

/// Iterates T from `initial` until the first fixed point, a detected cycle,
/// or the step limit. Pure: the trace is part of the return value. The
/// trace records entry 0 (the initial state) and one entry per advancing
/// application; confirmation and replay work adds no entries.
RunResult run(const GraphState& initial, const Composition& t, const RunLimits& limits = {},
              TraceMode mode = TraceMode::none);

/// Trace rendered as "step=<k> hash=<16 hex digits>" lines; in full mode
/// each line is followed by the canonical state text indented two spaces.
std::string to_text(const Trace& trace);

}  // namespace pgraph
