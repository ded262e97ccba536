#include <pgraph/gadgets.hpp>

#include <utility>

namespace pgraph::gadgets {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += kGamma;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

constexpr NodeId kNoAvoid = ~NodeId{0};

struct Slot {
  NodeId node;
  Label label;
  NodeId avoid = kNoAvoid;
};

// Fills the listed don't-care slots: seed 0 pins self-loops, any other seed
// draws nodes from a splitmix64 stream. A slot may exclude one value: the
// two slots the conditional program writes must not already hold the values
// it writes, or the fixture would start out solved and the machine would
// halt in zero steps instead of one.
void fill_dontcare(std::vector<NodeId>& succ0, std::vector<NodeId>& succ1,
                   const std::vector<Slot>& slots, std::uint64_t seed) {
  const std::size_t n = succ0.size();
  std::uint64_t stream = seed;
  for (const Slot& slot : slots) {
    auto& table = slot.label == Label::zero ? succ0 : succ1;
    if (seed == 0) {
      table[slot.node] = slot.node;
      continue;
    }
    if (slot.avoid == kNoAvoid) {
      table[slot.node] = static_cast<NodeId>(splitmix64(stream) % n);
    } else {
      auto draw = static_cast<NodeId>(splitmix64(stream) % (n - 1));
      table[slot.node] = draw >= slot.avoid ? draw + 1 : draw;
    }
  }
}

// Conditional core over nodes {e,p,b,m,n,c,d} = {0,1,2,3,4,5,6}:
// f0: e->p, p->m, b->c;  f1: e->b, p->n, b->d;  f1(c) encodes the boolean.
constexpr NodeId kCondNodes = 7;

std::pair<std::vector<NodeId>, std::vector<NodeId>> cond_core_tables(std::size_t n) {
  std::vector<NodeId> succ0(n, 0);
  std::vector<NodeId> succ1(n, 0);
  succ0[0] = 1;
  succ1[0] = 2;
  succ0[1] = 3;
  succ1[1] = 4;
  succ0[2] = 5;
  succ1[2] = 6;
  return {std::move(succ0), std::move(succ1)};
}

// The program writes (5,0) := 3 and (6,0) := 4; those two slots avoid the
// written values so a fresh fixture is never accidentally a fixed point.
const std::vector<Slot> kCondDontcare = {
    {3, Label::zero}, {3, Label::one},    {4, Label::zero}, {4, Label::one},
    {5, Label::zero, 3}, {6, Label::zero, 4}, {6, Label::one},
};

// Gate fixtures extend the core with payload cells anchored at m and n:
// m: c'=7, d'=8; n: c'=9, d'=10. Payload children are disjoint from the
// core and from each other.
constexpr NodeId kGateNodes = 11;

const std::vector<Slot> kGateDontcare = {
    {5, Label::zero, 3}, {6, Label::zero, 4}, {6, Label::one},
    {7, Label::zero},    {8, Label::zero},    {8, Label::one},
    {9, Label::zero},    {10, Label::zero},   {10, Label::one},
};

GraphState build_gate_fixture(bool x, bool m_payload, bool n_payload, std::uint64_t seed) {
  auto [succ0, succ1] = cond_core_tables(kGateNodes);
  succ0[3] = 7;
  succ1[3] = 8;
  succ0[4] = 9;
  succ1[4] = 10;
  fill_dontcare(succ0, succ1, kGateDontcare, seed);
  succ1[5] = x ? 5 : 6;
  succ1[7] = m_payload ? 7 : 8;
  succ1[9] = n_payload ? 9 : 10;
  return GraphState(kGateNodes, std::move(succ0), std::move(succ1));
}

TruthValue expected_gate_output(GateKind kind, const std::vector<bool>& inputs) {
  switch (kind) {
    case GateKind::Not:
      return inputs[0] ? TruthValue::False : TruthValue::True;
    case GateKind::And:
      return inputs[0] && inputs[1] ? TruthValue::True : TruthValue::False;
    case GateKind::Or:
      return inputs[0] || inputs[1] ? TruthValue::True : TruthValue::False;
    case GateKind::Cond:
      break;
  }
  return TruthValue::Invalid;
}

const char* truth_name(TruthValue v) {
  switch (v) {
    case TruthValue::True:
      return "true";
    case TruthValue::False:
      return "false";
    case TruthValue::Invalid:
      break;
  }
  return "invalid";
}

const char* kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Not:
      return "not";
    case GateKind::And:
      return "and";
    case GateKind::Or:
      return "or";
    case GateKind::Cond:
      break;
  }
  return "cond";
}

// Input rows in truth-table order, truth values first.
std::vector<std::vector<bool>> input_rows(std::size_t arity) {
  std::vector<std::vector<bool>> rows;
  if (arity == 1) {
    rows = {{true}, {false}};
  } else {
    rows = {{true, true}, {true, false}, {false, true}, {false, false}};
  }
  return rows;
}

}  // namespace

std::pair<GraphState, CondLayout> build_cond_fixture(bool value, std::uint64_t dontcare_seed) {
  auto [succ0, succ1] = cond_core_tables(kCondNodes);
  fill_dontcare(succ0, succ1, kCondDontcare, dontcare_seed);
  succ1[5] = value ? 5 : 6;
  return {GraphState(kCondNodes, std::move(succ0), std::move(succ1)), kCondLayout};
}

Composition cond_program() {
  return Composition{{parse_op("0[011 := 10]"), parse_op("0[001 := 00]")}};
}

NodeId read_cond_result(const GraphState& s, const CondLayout& layout) {
  return s.resolve(layout.e, Path{Label::one, Label::zero, Label::one, Label::zero});
}

GraphState write_bool(const GraphState& s, NodeId anchor, bool value) {
  const NodeId c = s.succ(Label::zero, anchor);
  const NodeId d = s.succ(Label::one, anchor);
  if (c == d) {
    throw AmbiguousCell("cell at node " + std::to_string(anchor) +
                        " has coinciding children; true and false are indistinguishable");
  }
  return s.with_edge(Label::one, c, value ? c : d);
}

TruthValue read_bool(const GraphState& s, NodeId anchor) {
  const NodeId c = s.succ(Label::zero, anchor);
  const NodeId d = s.succ(Label::one, anchor);
  if (c == d) return TruthValue::Invalid;
  const NodeId mark = s.succ(Label::one, c);
  if (mark == c) return TruthValue::True;
  if (mark == d) return TruthValue::False;
  return TruthValue::Invalid;
}

GateGadget build_gate(GateKind kind) {
  GateGadget g;
  g.kind = kind;
  g.program = cond_program();
  g.readout_origin = kCondLayout.e;
  g.readout_path = Path{Label::one, Label::zero, Label::one, Label::zero};
  switch (kind) {
    case GateKind::Not:
      g.arity = 1;
      g.input_anchors = {kCondLayout.b};
      g.build = [](const std::vector<bool>& in, std::uint64_t seed) {
        return build_gate_fixture(in[0], false, true, seed);
      };
      break;
    case GateKind::And:
      g.arity = 2;
      g.input_anchors = {kCondLayout.b, kCondLayout.m};
      g.build = [](const std::vector<bool>& in, std::uint64_t seed) {
        return build_gate_fixture(in[0], in[1], false, seed);
      };
      break;
    case GateKind::Or:
      g.arity = 2;
      g.input_anchors = {kCondLayout.b, kCondLayout.n};
      g.build = [](const std::vector<bool>& in, std::uint64_t seed) {
        return build_gate_fixture(in[0], true, in[1], seed);
      };
      break;
    case GateKind::Cond:
      return build_cond_gadget();
  }
  return g;
}

GateGadget build_cond_gadget() {
  GateGadget g;
  g.kind = GateKind::Cond;
  g.arity = 1;
  g.input_anchors = {kCondLayout.b};
  g.program = cond_program();
  g.readout_origin = kCondLayout.e;
  g.readout_path = Path{Label::one, Label::zero, Label::one, Label::zero};
  g.build = [](const std::vector<bool>& in, std::uint64_t seed) {
    return build_cond_fixture(in[0], seed).first;
  };
  return g;
}

GateReport verify_gate(const GateGadget& gadget, std::size_t seeds) {
  GateReport report;
  report.kind = gadget.kind;
  report.arity = gadget.arity;
  report.fills = seeds;

  for (const std::vector<bool>& inputs : input_rows(gadget.arity)) {
    ++report.rows;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
      const GraphState fixture = gadget.build(inputs, seed);
      const GraphState after = apply_composition(fixture, gadget.program);
      const NodeId node = after.resolve(gadget.readout_origin, gadget.readout_path);

      std::string detail;
      if (gadget.kind == GateKind::Cond) {
        const NodeId want = inputs[0] ? kCondLayout.m : kCondLayout.n;
        if (node != want) {
          detail = "readout node " + std::to_string(node) + ", expected " + std::to_string(want);
        }
      } else {
        const TruthValue got = read_bool(after, node);
        const TruthValue want = expected_gate_output(gadget.kind, inputs);
        if (got != want) {
          detail = std::string("read ") + truth_name(got) + ", expected " + truth_name(want);
        }
      }
      if (!detail.empty()) {
        report.failures.push_back({inputs, seed, encode_state(fixture), std::move(detail)});
      }
    }
  }
  return report;
}

std::string to_text(const GateReport& report) {
  std::string out;
  const char* names[2] = {"x", "y"};
  for (const std::vector<bool>& inputs : input_rows(report.arity)) {
    out += "row ";
    out += kind_name(report.kind);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      out += ' ';
      out += names[i];
      out += '=';
      out += inputs[i] ? 't' : 'f';
    }
    std::size_t failed = 0;
    for (const auto& f : report.failures) {
      if (f.inputs == inputs) ++failed;
    }
    out += " fills=" + std::to_string(report.fills);
    out += failed == 0 ? " ok" : " FAIL (" + std::to_string(failed) + " fills)";
    out += '\n';
  }
  for (const auto& f : report.failures) {
    out += "failure";
    for (std::size_t i = 0; i < f.inputs.size(); ++i) {
      out += ' ';
      out += names[i];
      out += '=';
      out += f.inputs[i] ? 't' : 'f';
    }
    out += " seed=" + std::to_string(f.seed) + ": " + f.detail + "\n";
    std::string_view rest = f.fixture;
    while (!rest.empty()) {
      const std::size_t nl = rest.find('\n');
      out += "  ";
      out += nl == std::string_view::npos ? rest : rest.substr(0, nl);
      out += '\n';
      rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    }
  }
  out += report.pass() ? "PASS\n" : "FAIL\n";
  return out;
}

}  // namespace pgraph::gadgets
