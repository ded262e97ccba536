#include <pgraph/graph.hpp>

#include <random>
#include <set>

#include <gtest/gtest.h>

#include <pgraph/oracle.hpp>
#include "helpers.hpp"

using namespace pgraph;

namespace {

// Reference FNV-1a 64 kept separate from the library implementation so the
// digest test does not check the code against itself.
std::uint64_t reference_fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h = (h ^ b) * 0x100000001b3ull;
  }
  return h;
}

TEST(GraphState, AcceptsValidTables) {
  const GraphState loop(1, {0}, {0});
  EXPECT_EQ(loop.size(), 1u);
  EXPECT_EQ(loop.succ(Label::zero, 0), 0u);

  const GraphState s0 = testutil::example_state_s0();
  EXPECT_EQ(s0.size(), 3u);
  EXPECT_EQ(s0.succ(Label::one, 1), 2u);
}

TEST(GraphState, RejectsOutOfRangeSuccessor) {
  EXPECT_THROW(GraphState(2, {0, 2}, {0, 0}), OutOfRange);
}

TEST(GraphState, RejectsLengthMismatch) {
  EXPECT_THROW(GraphState(3, {0, 0}, {0, 0, 0}), LengthMismatch);
  EXPECT_THROW(GraphState(2, {0, 0, 0}, {0, 0}), LengthMismatch);
}

TEST(GraphState, RejectsEmptyDomain) {
  EXPECT_THROW(GraphState(0, {}, {}), EmptyDomain);
}

TEST(GraphState, ResolveEmptyPathIsIdentity) {
  const GraphState s0 = testutil::example_state_s0();
  for (NodeId o = 0; o < 3; ++o) {
    EXPECT_EQ(s0.resolve(o, {}), o);
  }
}

TEST(GraphState, ResolveFollowsEdgesInOrder) {
  // f0(0) = 1, then f1(1) = 2
  const GraphState s0 = testutil::example_state_s0();
  EXPECT_EQ(s0.resolve(0, {Label::zero, Label::one}), 2u);
}

TEST(GraphState, ResolveOnSelfLoopsStaysPut) {
  const GraphState loops = testutil::self_loop_state(4);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const NodeId o = static_cast<NodeId>(rng() % 4);
    EXPECT_EQ(loops.resolve(o, testutil::random_path(rng, rng() % 6)), o);
  }
}

TEST(GraphState, ResolveConcatenationProperty) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 16;
    const GraphState s = testutil::random_state(rng, n);
    const NodeId o = static_cast<NodeId>(rng() % n);
    const Path p = testutil::random_path(rng, rng() % 5);
    const Path q = testutil::random_path(rng, rng() % 5);
    Path pq = p;
    pq.insert(pq.end(), q.begin(), q.end());
    EXPECT_EQ(s.resolve(o, pq), s.resolve(s.resolve(o, p), q));
  }
}

TEST(Encode, CanonicalText) {
  EXPECT_EQ(encode_state(GraphState(1, {0}, {0})), "nodes 1\n0 0 0\n");
  EXPECT_EQ(encode_state(testutil::example_state_s0()), "nodes 3\n0 1 0\n1 1 2\n2 2 1\n");
}

TEST(Encode, InjectiveOnSmallStates) {
  std::set<std::string> texts;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const GraphState& s : oracle::enumerate_states(n)) {
      texts.insert(encode_state(s));
      ++total;
    }
  }
  EXPECT_EQ(texts.size(), total);
}

TEST(Decode, RoundTripsCanonicalText) {
  const GraphState s0 = testutil::example_state_s0();
  EXPECT_EQ(decode_state(encode_state(s0)), s0);
  EXPECT_EQ(decode_state("nodes 1\n0 0 0\n"), GraphState(1, {0}, {0}));
}

TEST(Decode, RoundTripExhaustiveSmallAndRandomLarge) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const GraphState& s : oracle::enumerate_states(n)) {
      EXPECT_EQ(decode_state(encode_state(s)), s);
    }
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const GraphState s = testutil::random_state(rng, 1 + rng() % 64);
    EXPECT_EQ(decode_state(encode_state(s)), s);
  }
}

TEST(Decode, SkipsCommentsAndBlankLines) {
  EXPECT_EQ(decode_state("# c\nnodes 1\n0 0 0\n"), GraphState(1, {0}, {0}));
  EXPECT_EQ(decode_state("\n# header\nnodes 1\n# row\n0 0 0\n\n"), GraphState(1, {0}, {0}));
}

TEST(Decode, MissingRowIsParseError) {
  try {
    decode_state("nodes 2\n0 0 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Decode, RejectsMalformedText) {
  EXPECT_THROW(decode_state(""), ParseError);
  EXPECT_THROW(decode_state("nodes\n"), ParseError);
  EXPECT_THROW(decode_state("nodes x\n"), ParseError);
  EXPECT_THROW(decode_state("nodes 1\n0 0\n"), ParseError);
  EXPECT_THROW(decode_state("nodes 1\n0 0 0 0\n"), ParseError);
  EXPECT_THROW(decode_state("nodes 1\n1 0 0\n"), ParseError);
  EXPECT_THROW(decode_state("nodes 1\n0 0 0\n0 0 0\n"), ParseError);
  EXPECT_THROW(decode_state("nodes 1\n0 0 0\njunk\n"), ParseError);
}

TEST(Decode, RejectsOutOfRangeSuccessor) {
  EXPECT_THROW(decode_state("nodes 2\n0 0 2\n1 0 0\n"), OutOfRange);
}

TEST(Decode, ParseErrorReportsLineNumber) {
  try {
    decode_state("# one\n# two\nnodes 1\n0 zero 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(Fnv, MatchesPublishedVectors) {
  EXPECT_EQ(fnv1a64(""), 14695981039346656037ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ull);
}

TEST(StateHash, MatchesIndependentFnvReference) {
  // frozen from an out-of-tree FNV-1a implementation
  EXPECT_EQ(state_hash(GraphState(1, {0}, {0})), 0x59d3f7c8fefc0e2full);
  EXPECT_EQ(state_hash(testutil::example_state_s0()), 0x89f356595dfc6d27ull);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const GraphState s = testutil::random_state(rng, 1 + rng() % 32);
    EXPECT_EQ(state_hash(s), reference_fnv1a64(encode_state(s)));
  }
}

TEST(StateHash, EqualStatesHashEqual) {
  const GraphState a = testutil::example_state_s0();
  const GraphState b = testutil::example_state_s0();
  EXPECT_EQ(a, b);
  EXPECT_EQ(state_hash(a), state_hash(b));
}

TEST(HashHex, SixteenLowercaseDigits) {
  EXPECT_EQ(hash_hex(0), "0000000000000000");
  EXPECT_EQ(hash_hex(0x59d3f7c8fefc0e2full), "59d3f7c8fefc0e2f");
  EXPECT_EQ(hash_hex(0xFFFFFFFFFFFFFFFFull), "ffffffffffffffff");
}

}  // namespace
