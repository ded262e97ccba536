#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <pgraph/errors.hpp>

namespace pgraph {

using NodeId = std::uint32_t;

/// Edge label. Every node has exactly one out-edge per label.
enum class Label : std::uint8_t { zero = 0, one = 1 };

constexpr std::size_t label_index(Label l) noexcept {
  return static_cast<std::size_t>(l);
}

constexpr Label other_label(Label l) noexcept {
  return l == Label::zero ? Label::one : Label::zero;
}

constexpr char label_char(Label l) noexcept {
  return l == Label::zero ? '0' : '1';
}

/// A sequence of edge labels in traversal order: the first element is the
/// first edge followed. Operation strings in the surface syntax compose
/// right to left, so the parser reverses them into this order.
using Path = std::vector<Label>;

/// A finite directed graph with node set {0, ..., n-1} and exactly two
/// out-edges per node, one per label. Equivalently, a pair of total
/// successor maps. Immutable after construction; equality is extensional
/// on the successor tables (node identity matters, no isomorphism quotient).
class GraphState {
 public:
  /// Validates and builds a state. Both tables must have length `n`
  /// (LengthMismatch), every entry must be < n (OutOfRange), and n must be
  /// positive (EmptyDomain) since every operation names an origin node.
  GraphState(std::size_t n, std::vector<NodeId> succ0, std::vector<NodeId> succ1);

  std::size_t size() const noexcept { return succ_[0].size(); }

  /// The l-successor of x. Precondition: x < size().
  NodeId succ(Label l, NodeId x) const { return succ_[label_index(l)][x]; }

  /// Node reached from `origin` by following `path` edge by edge. The empty
  /// path returns `origin`. Total by closure. Precondition: origin < size().
  NodeId resolve(NodeId origin, const Path& path) const;

  /// Copy of this state with the single slot (at, l) redirected to `to`.
  /// Precondition: at < size() and to < size().
  GraphState with_edge(Label l, NodeId at, NodeId to) const;

  friend bool operator==(const GraphState&, const GraphState&) = default;

 private:
  std::array<std::vector<NodeId>, 2> succ_;
};

/// Canonical text form:
///
///   nodes N
///   i s0 s1        (one row per node, ascending i, single spaces, LF ends)
///
/// Deterministic and injective on valid states; the byte layout is fixed so
/// digests and golden files stay portable.
std::string encode_state(const GraphState& s);

/// Inverse of encode_state. Skips '#'-prefixed comment lines and blank
/// lines; any other deviation from the canonical grammar is a ParseError
/// with a 1-based line number. Successor validation errors are reported as
/// in GraphState construction.
GraphState decode_state(std::string_view text);

/// FNV-1a 64-bit digest of arbitrary bytes.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// FNV-1a 64-bit digest of the canonical encoding. Equal states hash equal.
std::uint64_t state_hash(const GraphState& s);

/// Digest rendered as 16 lowercase hex digits (the trace format).
std::string hash_hex(std::uint64_t digest);

}  // namespace pgraph
