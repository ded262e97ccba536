#include <pgraph/machine.hpp>

#include <unordered_map>
#include <utility>

namespace pgraph {

bool is_comp_fixed(const GraphState& s, const Composition& t) {
  return apply_composition(s, t) == s;
}

namespace {

// Standard cycle-start search: with the period known, walk two replays of
// the trajectory `period` apart; the first agreement is the minimal prefix.
std::uint64_t find_cycle_start(const GraphState& initial, const Composition& t,
                               std::uint64_t period, std::uint64_t bound) {
  GraphState ahead = initial;
  for (std::uint64_t i = 0; i < period; ++i) ahead = apply_composition(ahead, t);
  GraphState behind = initial;
  std::uint64_t prefix = 0;
  while (!(ahead == behind)) {
    if (prefix > bound) {
      throw Error("cycle replay failed to confirm the detected period");
    }
    ahead = apply_composition(ahead, t);
    behind = apply_composition(behind, t);
    ++prefix;
  }
  return prefix;
}

}  // namespace

RunResult run(const GraphState& initial, const Composition& t, const RunLimits& limits,
              TraceMode mode) {
  if (limits.max_steps == 0) {
    throw Error("max_steps must be at least 1");
  }

  Trace trace;
  const auto note = [&](std::uint64_t step, const GraphState& s) {
    if (mode == TraceMode::none) return;
    TraceEntry entry;
    entry.step = step;
    entry.digest = state_hash(s);
    if (mode == TraceMode::full) entry.state_text = encode_state(s);
    trace.entries.push_back(std::move(entry));
  };

  // Remembered prefix of the trajectory, index-aligned. Digest collisions
  // are confirmed against the stored states before a cycle is reported.
  std::vector<GraphState> seen;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_digest;
  const auto remember = [&](const GraphState& s, std::size_t index) {
    by_digest[state_hash(s)].push_back(index);
    seen.push_back(s);
  };
  const auto recall = [&](const GraphState& s) -> std::optional<std::size_t> {
    const auto it = by_digest.find(state_hash(s));
    if (it == by_digest.end()) return std::nullopt;
    for (std::size_t index : it->second) {
      if (seen[index] == s) return index;
    }
    return std::nullopt;
  };

  GraphState cur = initial;
  std::uint64_t k = 0;
  note(0, cur);
  if (limits.max_tracked_states > 0) remember(cur, 0);

  // Brent checkpoint, armed once the remembered prefix is full.
  std::optional<GraphState> tortoise;
  std::uint64_t tortoise_index = 0;
  std::uint64_t power = 1;

  while (k < limits.max_steps) {
    GraphState next = apply_composition(cur, t);
    if (next == cur) {
      return {Halted{k, std::move(cur)}, std::move(trace)};
    }
    ++k;
    note(k, next);

    if (const auto hit = recall(next)) {
      return {Cycled{static_cast<std::uint64_t>(*hit), k - *hit}, std::move(trace)};
    }
    if (seen.size() < limits.max_tracked_states) {
      remember(next, static_cast<std::size_t>(k));
    } else if (!tortoise) {
      tortoise = next;
      tortoise_index = k;
      power = 1;
    } else if (next == *tortoise) {
      const std::uint64_t period = k - tortoise_index;
      const std::uint64_t prefix = find_cycle_start(initial, t, period, tortoise_index);
      return {Cycled{prefix, period}, std::move(trace)};
    } else if (k - tortoise_index == power) {
      tortoise = next;
      tortoise_index = k;
      power *= 2;
    }
    cur = std::move(next);
  }
  return {StepLimit{k, std::move(cur)}, std::move(trace)};
}

std::string to_text(const Trace& trace) {
  std::string out;
  for (const TraceEntry& entry : trace.entries) {
    out += "step=" + std::to_string(entry.step) + " hash=" + hash_hex(entry.digest) + "\n";
    if (entry.state_text) {
      std::string_view rest = *entry.state_text;
      while (!rest.empty()) {
        const std::size_t nl = rest.find('\n');
        const std::string_view line = nl == std::string_view::npos ? rest : rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        out += "  ";
        out += line;
        out += '\n';
      }
    }
  }
  return out;
}

}  // namespace pgraph
