#include <benchmark/benchmark.h>

#include "mpreg/cohomology.hpp"
#include "mpreg/dsl.hpp"
#include "mpreg/harness.hpp"
#include "mpreg/regularity.hpp"
#include "mpreg/splitting.hpp"
#include "mpreg/window.hpp"

namespace {

const mpreg::Bundle& sample() {
  static const mpreg::Bundle e =
      mpreg::parse_bundle(mpreg::Space{2, 3}, "O(1,-2) + O(0)*W1(2) + W1(-1)*W2(1) + O(-3,4)");
  return e;
}

void BM_HBundle(benchmark::State& state) {
  int t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mpreg::h_bundle(sample(), mpreg::MultiTwist{t % 7 - 3, t % 5 - 2}, t % 6));
    ++t;
  }
}
BENCHMARK(BM_HBundle);

void BM_Window(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mpreg::nonvanishing_t_window(sample(), mpreg::MultiTwist{-1, -2}, 3));
}
BENCHMARK(BM_Window);

void BM_ConditionT2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mpreg::condition_t2(sample()));
}
BENCHMARK(BM_ConditionT2);

void BM_Reg(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mpreg::reg(sample()));
}
BENCHMARK(BM_Reg);

void BM_VerifyP1xP1(benchmark::State& state) {
  mpreg::EnumerationConfig c;
  c.spaces = {mpreg::Space{1, 1}};
  c.max_summands = 2;
  c.theorems = {mpreg::TheoremId::T1, mpreg::TheoremId::T2};
  c.findings = false;
  for (auto _ : state) benchmark::DoNotOptimize(mpreg::verify_paper(c));
}
BENCHMARK(BM_VerifyP1xP1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
