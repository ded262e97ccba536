#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <pgraph/graph.hpp>
#include <pgraph/op.hpp>

namespace pgraph::gadgets {

/// Reading of a boolean cell anchored at node b, with c = f0(b):
///   True    f1(c) == c
///   False   f1(c) == f1(b)
///   Invalid c == f1(b) (the two equations coincide) or neither holds
enum class TruthValue { True, False, Invalid };

/// Node roles of the conditional fixture:
///   p = f0(e), b = f1(e), m = f0(p), n = f1(p), c = f0(b), d = f1(b)
/// All seven pairwise distinct. The payload selected by the boolean at b
/// ends up reachable at g0(g1(g0(g1(e)))) after the conditional program.
struct CondLayout {
  NodeId e, p, b, c, d, m, n;
};

/// The fixed numbering used by every fixture builder here, so traces and
/// golden files are stable.
inline constexpr CondLayout kCondLayout{0, 1, 2, 5, 6, 3, 4};

/// Seven-node conditional fixture: the constrained edges as in kCondLayout,
/// the boolean at b set to `value`, and every unconstrained ("don't-care")
/// edge filled deterministically from `dontcare_seed`. Seed 0 fills with
/// self-loops; other seeds fill pseudo-randomly. The randomized fills exist
/// to demonstrate that the embedding never reads an unconstrained edge. The
/// two slots the conditional program writes never start at the written
/// values, so a fresh fixture always needs exactly one application to
/// settle.
std::pair<GraphState, CondLayout> build_cond_fixture(bool value, std::uint64_t dontcare_seed);

/// The two-op conditional composition in execution order (the rightmost
/// factor of the written composition comes first).
Composition cond_program();

/// resolve(e, [1,0,1,0]) — the traversal-order form of g0(g1(g0(g1(e)))).
NodeId read_cond_result(const GraphState& s, const CondLayout& layout);

/// Writes a truth value into the cell anchored at `anchor` by redirecting
/// the single edge (f0(anchor), 1). Throws AmbiguousCell when
/// f0(anchor) == f1(anchor), where the encoding cannot represent both values.
GraphState write_bool(const GraphState& s, NodeId anchor, bool value);

/// Reads the cell anchored at `anchor`.
TruthValue read_bool(const GraphState& s, NodeId anchor);

enum class GateKind { Not, And, Or, Cond };

/// A verifiable embedding: a fixture builder, the program to apply, and
/// where to read the result. Gates place input x in the b cell of the
/// conditional core and anchor payload cells at the m and n positions
/// (payload cell children are disjoint from the core and from each other):
///   NOT x    = cond(x -> False cell, True cell)
///   AND x y  = cond(x -> cell holding y, False cell)
///   OR  x y  = cond(x -> True cell, cell holding y)
/// For gates the result is a boolean read at the node the readout path
/// reaches; for the bare conditional the result is that node itself.
struct GateGadget {
  GateKind kind = GateKind::Cond;
  std::size_t arity = 1;
  std::vector<NodeId> input_anchors;
  Composition program;
  NodeId readout_origin = 0;
  Path readout_path;
  std::function<GraphState(const std::vector<bool>& inputs, std::uint64_t dontcare_seed)> build;
};

GateGadget build_gate(GateKind kind);  // Not, And, or Or
GateGadget build_cond_gadget();

struct GateReport {
  struct Failure {
    std::vector<bool> inputs;
    std::uint64_t seed = 0;
    std::string fixture;  // canonical text of the failing fixture
    std::string detail;
  };

  GateKind kind = GateKind::Cond;
  std::size_t arity = 1;
  std::size_t rows = 0;   // input combinations checked
  std::size_t fills = 0;  // don't-care fills per row
  std::vector<Failure> failures;

  bool pass() const { return failures.empty(); }
};

/// Runs every input combination under `seeds` don't-care fills (seed values
/// 0..seeds-1): builds the fixture, applies the program, reads the result.
/// A gate fails a case when the readout is not the expected truth value or
/// is not a valid cell; the bare conditional fails when the readout node is
/// not the selected payload. Failures are data, not errors.
GateReport verify_gate(const GateGadget& gadget, std::size_t seeds);

/// One line per input row plus a final PASS/FAIL line; failing rows include
/// the fixture text for reproduction.
std::string to_text(const GateReport& report);

}  // namespace pgraph::gadgets
