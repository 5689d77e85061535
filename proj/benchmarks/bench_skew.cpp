#include <benchmark/benchmark.h>

#include "skewres/random_gen.hpp"
#include "skewres/residues.hpp"
#include "skewres/selftest.hpp"

using namespace skewres;

namespace {

const FieldTower& tower25() {
  static FieldTower tw(desk_config_gf25());
  return tw;
}

const FieldTower& tower343() {
  static FieldTower tw(desk_config_gf343());
  return tw;
}

void BM_SkewMul(benchmark::State& state) {
  const FieldTower& tw = tower343();
  Rng rng(42);
  SkewPoly a = random_skew(tw, rng, state.range(0));
  SkewPoly b = random_skew(tw, rng, state.range(0));
  for (auto _ : state) {
    SkewPoly c = a * b;
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SkewMul)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_RightDivide(benchmark::State& state) {
  const FieldTower& tw = tower343();
  Rng rng(43);
  SkewPoly a = random_skew(tw, rng, 2 * state.range(0));
  SkewPoly b = random_skew(tw, rng, state.range(0));
  for (auto _ : state) {
    auto qr = right_divide(a, b);
    benchmark::DoNotOptimize(qr);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RightDivide)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Rgcd(benchmark::State& state) {
  const FieldTower& tw = tower25();
  Rng rng(44);
  SkewPoly a = random_skew(tw, rng, state.range(0));
  SkewPoly b = random_skew(tw, rng, state.range(0));
  for (auto _ : state) {
    GcdResult g = rgcd(a, b);
    benchmark::DoNotOptimize(g);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rgcd)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_CentralBound(benchmark::State& state) {
  const FieldTower& tw = tower25();
  Rng rng(45);
  SkewPoly f = random_skew(tw, rng, state.range(0));
  for (auto _ : state) {
    auto gn = central_right_multiple(f);
    benchmark::DoNotOptimize(gn);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CentralBound)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_CanonicalExpansion(benchmark::State& state) {
  const FieldTower& tw = tower25();
  Rng rng(46);
  SkewFraction f = random_split_fraction(tw, rng, 3, 3, 6);
  for (auto _ : state) {
    TaylorSeries s = expand_canonical(f, 1, state.range(0));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CanonicalExpansion)->Arg(4)->Arg(8)->Arg(16);

void BM_ResidueSum(benchmark::State& state) {
  const FieldTower& tw = tower25();
  Rng rng(47);
  SkewFraction f = random_split_fraction(tw, rng, 3, 3, 6);
  for (auto _ : state) {
    ResidueSum rs = residue_sum(f, 0);
    benchmark::DoNotOptimize(rs);
  }
}
BENCHMARK(BM_ResidueSum);

}  // namespace

BENCHMARK_MAIN();
