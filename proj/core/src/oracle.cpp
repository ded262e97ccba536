#include <pgraph/oracle.hpp>

#include <random>

namespace pgraph::oracle {

namespace {

// f_{w1}(f_{w2}(...f_{wk}(e)...)) over the written string w1..wk: the
// innermost (last-written) label is followed first. Transcribed literally
// as the nested form; this is the reference the engine is judged against.
NodeId resolve_written(const GraphState& s, NodeId origin, std::string_view written) {
  if (written.empty()) return origin;
  const NodeId inner = resolve_written(s, origin, written.substr(1));
  return s.succ(written.front() == '0' ? Label::zero : Label::one, inner);
}

std::string written_from_traversal(const Path& path) {
  std::string written;
  written.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    written += label_char(*it);
  }
  return written;
}

struct WrittenOp {
  NodeId origin;
  Label b0;
  std::string target;  // b1..bn, written order
  std::string source;  // a1..am, written order
};

WrittenOp written_form(const PrimitiveOp& op) {
  return {op.origin, op.assigned_label, written_from_traversal(op.target_path),
          written_from_traversal(op.source_path)};
}

std::vector<std::string> bit_strings(std::size_t min_len, std::size_t max_len) {
  std::vector<std::string> out;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
      std::string s(len, '0');
      for (std::size_t i = 0; i < len; ++i) {
        if (bits & (1ull << (len - 1 - i))) s[i] = '1';
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

PrimitiveOp op_from_written(NodeId origin, std::string_view left, std::string_view right) {
  PrimitiveOp op;
  op.origin = origin;
  op.assigned_label = left.front() == '0' ? Label::zero : Label::one;
  for (auto it = left.rbegin(); it != left.rend() - 1; ++it) {
    op.target_path.push_back(*it == '0' ? Label::zero : Label::one);
  }
  for (auto it = right.rbegin(); it != right.rend(); ++it) {
    op.source_path.push_back(*it == '0' ? Label::zero : Label::one);
  }
  return op;
}

GraphState self_loop_state(std::size_t n) {
  std::vector<NodeId> loop(n);
  for (std::size_t i = 0; i < n; ++i) loop[i] = static_cast<NodeId>(i);
  return GraphState(n, loop, loop);
}

template <typename CaseFn>
Report sweep(const SweepBounds& bounds, CaseFn&& check_case) {
  Report report;
  const auto states = enumerate_states(bounds.n);
  const auto ops = enumerate_ops(bounds);
  for (const GraphState& s : states) {
    for (const PrimitiveOp& op : ops) {
      ++report.cases_checked;
      if (auto violated = check_case(s, op)) {
        report.violations.push_back({encode_state(s), print_op(op), *violated});
      }
    }
  }
  return report;
}

}  // namespace

std::vector<GraphState> enumerate_states(std::size_t n) {
  if (n == 0 || n > 3) {
    throw BoundsExceeded("exhaustive state enumeration supports 1 <= n <= 3, got " +
                         std::to_string(n));
  }
  std::uint64_t maps = 1;
  for (std::size_t i = 0; i < n; ++i) maps *= n;

  const auto table_of = [n](std::uint64_t index) {
    std::vector<NodeId> table(n);
    for (std::size_t k = n; k-- > 0;) {
      table[k] = static_cast<NodeId>(index % n);
      index /= n;
    }
    return table;
  };

  std::vector<GraphState> states;
  states.reserve(maps * maps);
  for (std::uint64_t i = 0; i < maps; ++i) {
    for (std::uint64_t j = 0; j < maps; ++j) {
      states.emplace_back(n, table_of(i), table_of(j));
    }
  }
  return states;
}

std::vector<PrimitiveOp> enumerate_ops(const SweepBounds& bounds) {
  const auto targets = bit_strings(1, bounds.max_target_len);
  const auto sources = bit_strings(0, bounds.max_source_len);
  std::vector<PrimitiveOp> ops;
  ops.reserve(bounds.n * targets.size() * sources.size());
  for (NodeId origin = 0; origin < bounds.n; ++origin) {
    for (const std::string& left : targets) {
      for (const std::string& right : sources) {
        ops.push_back(op_from_written(origin, left, right));
      }
    }
  }
  return ops;
}

std::optional<std::string> postcondition_violation(const GraphState& pre, const PrimitiveOp& op,
                                                   const GraphState& post) {
  const WrittenOp w = written_form(op);
  const NodeId a = resolve_written(pre, w.origin, w.source);
  const NodeId b = resolve_written(pre, w.origin, w.target);

  if (post.succ(w.b0, b) != a) {
    return "g_b0(b) = a";
  }
  const Label other = other_label(w.b0);
  for (NodeId x = 0; x < pre.size(); ++x) {
    if (post.succ(other, x) != pre.succ(other, x)) {
      return "g_i = f_i for i != b0";
    }
  }
  for (NodeId x = 0; x < pre.size(); ++x) {
    if (x != b && post.succ(w.b0, x) != pre.succ(w.b0, x)) {
      return "g_b0(x) = f_b0(x) for x != b";
    }
  }
  return std::nullopt;
}

bool equation_fixed(const GraphState& s, const PrimitiveOp& op) {
  const WrittenOp w = written_form(op);
  const NodeId a = resolve_written(s, w.origin, w.source);
  const NodeId b = resolve_written(s, w.origin, w.target);
  return s.succ(w.b0, b) == a;
}

Report check_postconditions(const SweepBounds& bounds) {
  return check_postconditions(bounds, [](const GraphState& s, const PrimitiveOp& op) {
    return apply_op(s, op);
  });
}

Report check_postconditions(const SweepBounds& bounds, const ApplyFn& apply) {
  return sweep(bounds, [&](const GraphState& s, const PrimitiveOp& op) {
    return postcondition_violation(s, op, apply(s, op));
  });
}

Report check_fixed_point_iff(const SweepBounds& bounds) {
  return check_fixed_point_iff(
      bounds,
      [](const GraphState& s, const PrimitiveOp& op) { return is_op_fixed(s, op); },
      [](const GraphState& s, const PrimitiveOp& op) { return apply_op(s, op); });
}

Report check_fixed_point_iff(const SweepBounds& bounds, const FixedFn& fixed,
                             const ApplyFn& apply) {
  return sweep(bounds, [&](const GraphState& s, const PrimitiveOp& op) -> std::optional<std::string> {
    const bool claims_fixed = fixed(s, op);
    const bool acts_fixed = apply(s, op) == s;
    const bool equation = equation_fixed(s, op);
    if (claims_fixed != acts_fixed || acts_fixed != equation) {
      return "fixed iff f_b0(f_b1(..f_bn(e)..)) = f_a1(..f_am(e)..)";
    }
    return std::nullopt;
  });
}

Report check_fixed_construction(const SweepBounds& bounds, std::uint64_t programs,
                                std::uint64_t seed) {
  Report report;
  if (bounds.n == 0 || bounds.max_target_len == 0) {
    throw BoundsExceeded("fixed-construction sampling needs n >= 1 and max_target_len >= 1");
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = bounds.n;
  const GraphState loops = self_loop_state(n);

  const auto random_state = [&] {
    std::vector<NodeId> succ0(n), succ1(n);
    for (std::size_t i = 0; i < n; ++i) {
      succ0[i] = static_cast<NodeId>(rng() % n);
      succ1[i] = static_cast<NodeId>(rng() % n);
    }
    return GraphState(n, std::move(succ0), std::move(succ1));
  };
  const auto random_bits = [&](std::size_t len) {
    std::string bits(len, '0');
    for (auto& c : bits) c = (rng() & 1) ? '1' : '0';
    return bits;
  };
  const auto random_program = [&] {
    Composition t;
    const std::size_t len = 1 + rng() % 3;
    for (std::size_t i = 0; i < len; ++i) {
      const auto origin = static_cast<NodeId>(rng() % n);
      const std::string left = random_bits(1 + rng() % bounds.max_target_len);
      const std::string right = random_bits(rng() % (bounds.max_source_len + 1));
      t.ops.push_back(op_from_written(origin, left, right));
    }
    return t;
  };

  for (std::uint64_t p = 0; p < programs; ++p) {
    const Composition t = random_program();
    for (const GraphState& s : {random_state(), loops}) {
      ++report.cases_checked;
      bool all_fixed = true;
      for (const PrimitiveOp& op : t.ops) {
        if (!equation_fixed(s, op)) {
          all_fixed = false;
          break;
        }
      }
      if (!all_fixed) continue;
      ++report.antecedent_cases;
      if (!(apply_composition(s, t) == s)) {
        report.violations.push_back(
            {encode_state(s), print_program(t), "every op fixed but T not fixed"});
      }
    }
  }
  if (report.antecedent_cases == 0) {
    report.violations.push_back({"", "", "no antecedent case sampled"});
  }
  return report;
}

std::string to_text(const Report& report, std::string_view name) {
  std::string out(name);
  out += ": cases=" + std::to_string(report.cases_checked);
  if (report.antecedent_cases > 0) {
    out += " antecedents=" + std::to_string(report.antecedent_cases);
  }
  out += " violations=" + std::to_string(report.violations.size());
  out += report.pass() ? " pass" : " FAIL";
  out += '\n';
  for (const Violation& v : report.violations) {
    out += "violation: " + v.equation + "\n";
    if (!v.op_text.empty()) out += "  op: " + v.op_text + "\n";
    if (!v.state_text.empty()) {
      std::string_view rest = v.state_text;
      while (!rest.empty()) {
        const std::size_t nl = rest.find('\n');
        out += "  ";
        out += nl == std::string_view::npos ? rest : rest.substr(0, nl);
        out += '\n';
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
      }
    }
  }
  return out;
}

void dump_cases(const SweepBounds& bounds, std::ostream& out) {
  const auto states = enumerate_states(bounds.n);
  const auto ops = enumerate_ops(bounds);
  for (const GraphState& s : states) {
    const std::string digest = hash_hex(state_hash(s));
    for (const PrimitiveOp& op : ops) {
      const auto post_violation = postcondition_violation(s, op, apply_op(s, op));
      const bool iff_ok = (is_op_fixed(s, op) == (apply_op(s, op) == s)) &&
                          (is_op_fixed(s, op) == equation_fixed(s, op));
      out << digest << ' ' << print_op(op) << '\t';
      if (!post_violation && iff_ok) {
        out << "ok";
      } else {
        out << "FAIL(" << (post_violation ? *post_violation : "iff") << ')';
      }
      out << '\n';
    }
  }
}

}  // namespace pgraph::oracle
