#include <pgraph/op.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>

namespace pgraph {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  void expect(char c, const char* what) {
    if (done() || peek() != c) {
      throw ParseError(std::string("expected '") + c + "' " + what);
    }
    ++pos;
  }
};

NodeId parse_node_number(Cursor& cur) {
  const std::size_t start = cur.pos;
  while (!cur.done() && cur.peek() >= '0' && cur.peek() <= '9') ++cur.pos;
  if (cur.pos == start) {
    throw ParseError("expected a node number");
  }
  const std::string_view digits = cur.text.substr(start, cur.pos - start);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || value > std::numeric_limits<NodeId>::max()) {
    throw ParseError("node number '" + std::string(digits) + "' is out of range");
  }
  return static_cast<NodeId>(value);
}

// Written bit string, possibly empty. Stops at the first non-bit character.
std::string parse_bits(Cursor& cur) {
  std::string bits;
  while (!cur.done() && (cur.peek() == '0' || cur.peek() == '1')) {
    bits += cur.peek();
    ++cur.pos;
  }
  return bits;
}

// Written order composes right to left: the last written label is followed first.
Path traversal_from_written(std::string_view written) {
  Path path;
  path.reserve(written.size());
  for (auto it = written.rbegin(); it != written.rend(); ++it) {
    path.push_back(*it == '0' ? Label::zero : Label::one);
  }
  return path;
}

std::string written_from_traversal(const Path& path) {
  std::string written;
  written.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    written += label_char(*it);
  }
  return written;
}

}  // namespace

PrimitiveOp parse_op(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();

  PrimitiveOp op;
  op.origin = parse_node_number(cur);
  cur.expect('[', "after the node number");

  const std::string left = parse_bits(cur);
  cur.skip_ws();
  if (!cur.done() && (cur.peek() >= '2' && cur.peek() <= '9')) {
    throw ParseError(std::string("'") + cur.peek() + "' is not a label (labels are 0 and 1)");
  }
  if (cur.done() || cur.peek() != ':' || cur.pos + 1 >= cur.text.size() ||
      cur.text[cur.pos + 1] != '=') {
    throw ParseError("expected ':=' after the target bits");
  }
  cur.pos += 2;
  if (left.empty()) {
    throw EmptyTarget("left bit string is empty: no label to assign");
  }
  cur.skip_ws();

  const std::string right = parse_bits(cur);
  if (!cur.done() && (cur.peek() >= '2' && cur.peek() <= '9')) {
    throw ParseError(std::string("'") + cur.peek() + "' is not a label (labels are 0 and 1)");
  }
  cur.expect(']', "after the source bits");
  cur.skip_ws();
  if (!cur.done()) {
    throw ParseError("unexpected characters after ']'");
  }

  op.assigned_label = left[0] == '0' ? Label::zero : Label::one;
  op.target_path = traversal_from_written(std::string_view(left).substr(1));
  op.source_path = traversal_from_written(right);
  return op;
}

std::string print_op(const PrimitiveOp& op) {
  std::string out = std::to_string(op.origin);
  out += '[';
  out += label_char(op.assigned_label);
  out += written_from_traversal(op.target_path);
  out += " :=";
  if (!op.source_path.empty()) {
    out += ' ';
    out += written_from_traversal(op.source_path);
  }
  out += ']';
  return out;
}

Composition parse_program(std::string_view text) {
  Composition comp;
  std::size_t line_no = 0;
  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    std::string_view line = nl == std::string_view::npos ? rest : rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::string_view t = line;
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
    if (t.empty() || t.front() == '#') continue;

    try {
      comp.ops.push_back(parse_op(line));
    } catch (const EmptyTarget& e) {
      throw EmptyTarget(e.message(), line_no);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), line_no);
    }
  }
  return comp;
}

std::string print_program(const Composition& t) {
  std::string out;
  for (const PrimitiveOp& op : t.ops) {
    out += print_op(op);
    out += '\n';
  }
  return out;
}

GraphState apply_op(const GraphState& s, const PrimitiveOp& op) {
  if (op.origin >= s.size()) {
    throw OriginOutOfRange("origin " + std::to_string(op.origin) + " is not below " +
                           std::to_string(s.size()));
  }
  // Both reads happen against the pre-state; only then is the slot written.
  const NodeId target = s.resolve(op.origin, op.target_path);
  const NodeId source = s.resolve(op.origin, op.source_path);
  return s.with_edge(op.assigned_label, target, source);
}

bool is_op_fixed(const GraphState& s, const PrimitiveOp& op) {
  if (op.origin >= s.size()) {
    throw OriginOutOfRange("origin " + std::to_string(op.origin) + " is not below " +
                           std::to_string(s.size()));
  }
  const NodeId target = s.resolve(op.origin, op.target_path);
  const NodeId source = s.resolve(op.origin, op.source_path);
  return s.succ(op.assigned_label, target) == source;
}

GraphState apply_composition(const GraphState& s, const Composition& t) {
  GraphState state = s;
  for (std::size_t i = 0; i < t.ops.size(); ++i) {
    if (t.ops[i].origin >= state.size()) {
      throw OriginOutOfRange("op " + std::to_string(i) + " (" + print_op(t.ops[i]) +
                             "): origin is not below " + std::to_string(state.size()));
    }
    state = apply_op(state, t.ops[i]);
  }
  return state;
}

}  // namespace pgraph
