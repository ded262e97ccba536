#include <pgraph/graph.hpp>

#include <cassert>
#include <charconv>
#include <cstdio>

namespace pgraph {

GraphState::GraphState(std::size_t n, std::vector<NodeId> succ0, std::vector<NodeId> succ1) {
  if (n == 0) {
    throw EmptyDomain("node count must be positive: an operation needs an origin node");
  }
  if (succ0.size() != n || succ1.size() != n) {
    throw LengthMismatch("successor tables must have length " + std::to_string(n) + ", got " +
                         std::to_string(succ0.size()) + " and " + std::to_string(succ1.size()));
  }
  for (std::size_t lab = 0; lab < 2; ++lab) {
    const auto& table = lab == 0 ? succ0 : succ1;
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i] >= n) {
        throw OutOfRange("successor " + std::to_string(table[i]) + " of node " +
                         std::to_string(i) + " (label " + std::to_string(lab) +
                         ") is not below " + std::to_string(n));
      }
    }
  }
  succ_[0] = std::move(succ0);
  succ_[1] = std::move(succ1);
}

NodeId GraphState::resolve(NodeId origin, const Path& path) const {
  assert(origin < size());
  NodeId node = origin;
  for (Label step : path) {
    node = succ(step, node);
  }
  return node;
}

GraphState GraphState::with_edge(Label l, NodeId at, NodeId to) const {
  assert(at < size() && to < size());
  GraphState copy = *this;
  copy.succ_[label_index(l)][at] = to;
  return copy;
}

std::string encode_state(const GraphState& s) {
  std::string out = "nodes " + std::to_string(s.size()) + "\n";
  for (NodeId i = 0; i < s.size(); ++i) {
    out += std::to_string(i);
    out += ' ';
    out += std::to_string(s.succ(Label::zero, i));
    out += ' ';
    out += std::to_string(s.succ(Label::one, i));
    out += '\n';
  }
  return out;
}

namespace {

// Splits off the next line (without terminator); empty view and false when done.
bool next_line(std::string_view& rest, std::string_view& line) {
  if (rest.empty()) return false;
  const std::size_t nl = rest.find('\n');
  if (nl == std::string_view::npos) {
    line = rest;
    rest = {};
  } else {
    line = rest.substr(0, nl);
    rest = rest.substr(nl + 1);
  }
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return true;
}

std::string_view trimmed(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
  return v;
}

bool is_skippable(std::string_view line) {
  const std::string_view t = trimmed(line);
  return t.empty() || t.front() == '#';
}

// Whitespace-separated tokens of a payload line.
std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected a decimal number, got '" + std::string(token) + "'", line_no);
  }
  return value;
}

}  // namespace

GraphState decode_state(std::string_view text) {
  std::string_view rest = text;
  std::string_view line;
  std::size_t line_no = 0;

  // header
  std::uint64_t n = 0;
  bool have_header = false;
  while (!have_header) {
    if (!next_line(rest, line)) {
      throw ParseError("missing 'nodes N' header", line_no + 1);
    }
    ++line_no;
    if (is_skippable(line)) continue;
    const auto toks = tokens_of(line);
    if (toks.size() != 2 || toks[0] != "nodes") {
      throw ParseError("expected 'nodes N' header", line_no);
    }
    n = parse_number(toks[1], line_no);
    have_header = true;
  }

  std::vector<NodeId> succ0;
  std::vector<NodeId> succ1;
  std::uint64_t row = 0;
  while (row < n) {
    if (!next_line(rest, line)) {
      throw ParseError("missing row for node " + std::to_string(row), line_no + 1);
    }
    ++line_no;
    if (is_skippable(line)) continue;
    const auto toks = tokens_of(line);
    if (toks.size() != 3) {
      throw ParseError("expected 'i s0 s1' row, got " + std::to_string(toks.size()) + " fields",
                       line_no);
    }
    const std::uint64_t index = parse_number(toks[0], line_no);
    if (index != row) {
      throw ParseError("expected row for node " + std::to_string(row) + ", got " +
                       std::to_string(index), line_no);
    }
    const std::uint64_t s0 = parse_number(toks[1], line_no);
    const std::uint64_t s1 = parse_number(toks[2], line_no);
    if (s0 >= n || s1 >= n) {
      // semantic check, reported like state construction
      throw OutOfRange("successor " + std::to_string(s0 >= n ? s0 : s1) + " of node " +
                       std::to_string(row) + " is not below " + std::to_string(n));
    }
    succ0.push_back(static_cast<NodeId>(s0));
    succ1.push_back(static_cast<NodeId>(s1));
    ++row;
  }

  while (next_line(rest, line)) {
    ++line_no;
    if (!is_skippable(line)) {
      throw ParseError("unexpected content after node rows", line_no);
    }
  }

  return GraphState(static_cast<std::size_t>(n), std::move(succ0), std::move(succ1));
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::uint64_t state_hash(const GraphState& s) {
  return fnv1a64(encode_state(s));
}

std::string hash_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return std::string(buf, 16);
}

}  // namespace pgraph
