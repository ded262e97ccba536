#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <pgraph/graph.hpp>

namespace pgraph {

/// A primitive rewrite. Written `e[b0 b1..bn := a1..am]`, it redirects one
/// edge: with B the node reached from `origin` along `target_path` and A the
/// node reached along `source_path`, the b0-labeled edge at B is pointed at
/// A. Both paths are resolved in the state before the write.
///
/// Paths are stored in traversal order; the written strings compose right to
/// left, so the surface syntax is reversed at parse time. `source_path` may
/// be empty (the source is then the origin itself).
struct PrimitiveOp {
  NodeId origin = 0;
  Label assigned_label = Label::zero;  // b0
  Path target_path;                    // b1..bn
  Path source_path;                    // a1..am

  friend bool operator==(const PrimitiveOp&, const PrimitiveOp&) = default;
};

/// An ordered sequence of primitive operations in execution order: the first
/// element is applied first. As a composition of functions this reads right
/// to left, so `ops.front()` is the rightmost factor.
struct Composition {
  std::vector<PrimitiveOp> ops;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Parses `node '[' bits ':=' bits? ']'` with optional whitespace around
/// ':='. The first left bit is the assigned label; the remaining bits are
/// the written target path, the right bits the written source path (both
/// reversed into traversal order). Throws ParseError, or EmptyTarget when
/// the left bit string is empty.
PrimitiveOp parse_op(std::string_view text);

/// Canonical form `<origin>[<leftbits> := <rightbits>]`; an empty source
/// prints as `<origin>[<leftbits> :=]`. parse_op(print_op(op)) == op.
std::string print_op(const PrimitiveOp& op);

/// One operation per line; '#'-prefixed comment lines and blank lines are
/// skipped. Line order is execution order. ParseError carries the 1-based
/// line number.
Composition parse_program(std::string_view text);

/// Canonical program text: print_op per op, one per line.
std::string print_program(const Composition& t);

/// Applies one operation. Resolves both paths in `s`, then redirects the
/// single slot; the result differs from `s` in at most that slot. Throws
/// OriginOutOfRange.
GraphState apply_op(const GraphState& s, const PrimitiveOp& op);

/// True iff applying `op` would leave `s` unchanged, decided directly from
/// the defining equation f_b0(B) == A without building the successor state.
bool is_op_fixed(const GraphState& s, const PrimitiveOp& op);

/// Left fold of apply_op over the composition. The empty composition is the
/// identity. OriginOutOfRange names the offending op index.
GraphState apply_composition(const GraphState& s, const Composition& t);

}  // namespace pgraph
