#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <pgraph/gadgets.hpp>
#include <pgraph/graph.hpp>
#include <pgraph/machine.hpp>
#include <pgraph/op.hpp>
#include <pgraph/oracle.hpp>

namespace {

using namespace pgraph;

GraphState random_state(std::mt19937_64& rng, std::size_t n) {
  std::vector<NodeId> succ0(n), succ1(n);
  for (std::size_t i = 0; i < n; ++i) {
    succ0[i] = static_cast<NodeId>(rng() % n);
    succ1[i] = static_cast<NodeId>(rng() % n);
  }
  return GraphState(n, std::move(succ0), std::move(succ1));
}

void BM_ApplyOp(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const GraphState s = random_state(rng, n);
  const PrimitiveOp op = parse_op("0[011 := 101]");
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_op(s, op));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplyOp)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_RunCondFixture(benchmark::State& state) {
  const auto [fixture, layout] = gadgets::build_cond_fixture(true, 0);
  const Composition program = gadgets::cond_program();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(fixture, program));
  }
}
BENCHMARK(BM_RunCondFixture);

void BM_RunPeriodTwoCycle(benchmark::State& state) {
  const GraphState s0(3, {1, 1, 2}, {0, 2, 1});
  const Composition program = parse_program("0[0 := 10]\n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(s0, program));
  }
}
BENCHMARK(BM_RunPeriodTwoCycle);

void BM_StateHash(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const GraphState s = random_state(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(state_hash(s));
  }
}
BENCHMARK(BM_StateHash)->Range(8, 2048);

void BM_EncodeDecode(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const GraphState s = random_state(rng, 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode_state(encode_state(s)));
  }
}
BENCHMARK(BM_EncodeDecode);

void BM_OraclePostconditionsN2(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::check_postconditions({.n = 2, .max_target_len = 3, .max_source_len = 3}));
  }
}
BENCHMARK(BM_OraclePostconditionsN2);

void BM_VerifyAndGate(benchmark::State& state) {
  const auto gate = gadgets::build_gate(gadgets::GateKind::And);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gadgets::verify_gate(gate, 10));
  }
}
BENCHMARK(BM_VerifyAndGate);

}  // namespace

BENCHMARK_MAIN();
