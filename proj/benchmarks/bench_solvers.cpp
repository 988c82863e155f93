#include <benchmark/benchmark.h>

#include <random>

#include "setcalc/covering.hpp"
#include "setcalc/magnification.hpp"
#include "setcalc/verify.hpp"

using namespace setcalc;

namespace {

GSet random_set(const GroupPtr& g, size_t count, std::mt19937_64& rng) {
  std::uint64_t order = *g->order();
  std::vector<Element> elems;
  for (size_t i = 0; i < count; ++i) elems.push_back(g->unrank(rng() % order));
  return GSet::of(g, std::move(elems));
}

void BM_MagnificationBrute(benchmark::State& state) {
  GroupPtr g = make_group("zn:256");
  std::mt19937_64 rng(3);
  GSet a = random_set(g, static_cast<size_t>(state.range(0)), rng);
  GSet b = random_set(g, 6, rng);
  for (auto _ : state) {
    auto cert = magnification_brute(a, b);
    benchmark::DoNotOptimize(cert.K);
  }
}

void BM_MagnificationFlow(benchmark::State& state) {
  GroupPtr g = make_group("zn:4096");
  std::mt19937_64 rng(4);
  GSet a = random_set(g, static_cast<size_t>(state.range(0)), rng);
  GSet b = random_set(g, 8, rng);
  for (auto _ : state) {
    auto cert = magnification_flow(a, b);
    benchmark::DoNotOptimize(cert.K);
  }
}

void BM_RuzsaCover(benchmark::State& state) {
  GroupPtr g = make_group("sym:5");
  std::mt19937_64 rng(5);
  GSet a = random_set(g, static_cast<size_t>(state.range(0)), rng);
  GSet b = random_set(g, static_cast<size_t>(state.range(0)), rng);
  for (auto _ : state) {
    auto cert = ruzsa_cover(a, b);
    benchmark::DoNotOptimize(cert.T.size());
  }
}

void BM_VerifyTriple(benchmark::State& state) {
  GroupPtr g = make_group("sym:4");
  std::mt19937_64 rng(6);
  GSet b = random_set(g, static_cast<size_t>(state.range(0)), rng);
  for (auto _ : state) {
    auto report = verify_triple(b);
    benchmark::DoNotOptimize(report.pass);
  }
}

void BM_VerifySbh(benchmark::State& state) {
  GroupPtr g = make_group("dihedral:8");
  std::mt19937_64 rng(7);
  GSet a = random_set(g, 5, rng);
  GSet b = random_set(g, 5, rng);
  for (auto _ : state) {
    auto report = verify_sb_h(a, b, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(report.pass);
  }
}

}  // namespace

BENCHMARK(BM_MagnificationBrute)->Arg(8)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_MagnificationFlow)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_RuzsaCover)->Arg(6)->Arg(24);
BENCHMARK(BM_VerifyTriple)->Arg(4)->Arg(8);
BENCHMARK(BM_VerifySbh)->DenseRange(2, 4);
