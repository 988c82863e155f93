#include <benchmark/benchmark.h>

#include <random>

#include "setcalc/gset.hpp"

using namespace setcalc;

namespace {

GSet random_set(const GroupPtr& g, size_t count, std::mt19937_64& rng) {
  std::uint64_t order = *g->order();
  std::vector<Element> elems;
  for (size_t i = 0; i < count; ++i) elems.push_back(g->unrank(rng() % order));
  return GSet::of(g, std::move(elems));
}

void BM_ProductDense(benchmark::State& state, const char* spec) {
  GroupPtr g = make_group(spec);
  std::mt19937_64 rng(1);
  GSet a = random_set(g, static_cast<size_t>(state.range(0)), rng);
  GSet b = random_set(g, static_cast<size_t>(state.range(0)), rng);
  for (auto _ : state) {
    GSet ab = product(a, b);
    benchmark::DoNotOptimize(ab.size());
  }
}

void BM_ProductFree(benchmark::State& state) {
  GroupPtr g = make_group("free:3:24");
  GSet b = parse_set(g, "{x1,x2,x3,x1^-1}");
  for (auto _ : state) {
    GSet p = power(b, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(p.size());
  }
}

void BM_PowerSym5(benchmark::State& state) {
  GroupPtr g = make_group("sym:5");
  std::mt19937_64 rng(2);
  GSet b = random_set(g, 5, rng);
  for (auto _ : state) {
    GSet p = power(b, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(p.size());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_ProductDense, sym5, "sym:5")->Arg(8)->Arg(32)->Arg(96);
BENCHMARK_CAPTURE(BM_ProductDense, gl2_7, "gl2:7")->Arg(8)->Arg(64)->Arg(512);
BENCHMARK_CAPTURE(BM_ProductDense, zn4096, "zn:4096")->Arg(16)->Arg(256);
BENCHMARK(BM_ProductFree)->DenseRange(2, 5);
BENCHMARK(BM_PowerSym5)->DenseRange(2, 5);
