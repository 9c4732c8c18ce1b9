#include <benchmark/benchmark.h>

#include "tetrabox/expr.hpp"
#include "tetrabox/onsager.hpp"
#include "tetrabox/random.hpp"

namespace {

using namespace tetrabox;

void BM_Bracket(benchmark::State& state) {
  RandomSource rng(1);
  const LoopElem u = rng.loop(static_cast<int>(state.range(0)), 3, 3);
  const LoopElem v = rng.loop(static_cast<int>(state.range(0)), 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket(u, v));
  }
}
BENCHMARK(BM_Bracket)->Arg(2)->Arg(6)->Arg(12);

void BM_RingPrime(benchmark::State& state) {
  RandomSource rng(2);
  const RingElem a = rng.ring(static_cast<int>(state.range(0)), 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ring_prime(a));
  }
}
BENCHMARK(BM_RingPrime)->Arg(2)->Arg(6)->Arg(12);

void BM_ClosedForm(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(seq_ab(SeqKind::A, state.range(0), SeqMode::Closed));
  }
}
BENCHMARK(BM_ClosedForm)->Arg(4)->Arg(20)->Arg(60);

void BM_Recursive(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(seq_ab(SeqKind::A, state.range(0), SeqMode::Recursive));
  }
}
BENCHMARK(BM_Recursive)->Arg(4)->Arg(20)->Arg(60);

void BM_Coords(benchmark::State& state) {
  const auto basis = static_cast<Basis>(state.range(0));
  const LoopElem u = seq_ab(SeqKind::A, state.range(1), SeqMode::Closed) +
                     seq_ab(SeqKind::B, state.range(1) - 1, SeqMode::Closed);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coords(u, basis));
  }
}
BENCHMARK(BM_Coords)->ArgsProduct({{0, 1, 2}, {4, 12, 24}});

void BM_Transition(benchmark::State& state) {
  RandomSource rng(3);
  const Coords c = rng.coords(Basis::AB, 0, state.range(0), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition(c, Basis::XYZ));
  }
}
BENCHMARK(BM_Transition)->Arg(4)->Arg(12)->Arg(24);

void BM_DecomposeNine(benchmark::State& state) {
  RandomSource rng(4);
  const LoopElem u = rng.loop(static_cast<int>(state.range(0)), 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_nine(u));
  }
}
BENCHMARK(BM_DecomposeNine)->Arg(2)->Arg(6)->Arg(12);

void BM_ParseEvaluate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate("[x12 * (t^3 - 2*t) / (t - 1)^2, x03'' + a4] - X3'"));
  }
}
BENCHMARK(BM_ParseEvaluate);

}  // namespace

BENCHMARK_MAIN();
