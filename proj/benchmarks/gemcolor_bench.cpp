#include <benchmark/benchmark.h>

#include <string>

#include "gemcolor/colorer.hpp"
#include "gemcolor/exact.hpp"
#include "gemcolor/generators.hpp"
#include "gemcolor/patterns.hpp"

namespace {

using namespace gemcolor;

const Graph& schlafli() {
  static const Graph g = schlafli_complement();
  return g;
}

Graph expansion(int m) { return named_graph("kc5-" + std::to_string(m)); }

void BM_MaxClique_Schlafli(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(schlafli()).omega);
}
BENCHMARK(BM_MaxClique_Schlafli);

void BM_MaxClique_Expansion(benchmark::State& state) {
  const Graph g = expansion(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).omega);
  state.counters["n"] = g.order();
}
BENCHMARK(BM_MaxClique_Expansion)->DenseRange(2, 8, 2);

void BM_ChromaticNumber_Groetzsch(benchmark::State& state) {
  const Graph g = named_graph("groetzsch");
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).chi);
}
BENCHMARK(BM_ChromaticNumber_Groetzsch);

void BM_ChromaticNumber_Schlafli(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(schlafli()).chi);
}
BENCHMARK(BM_ChromaticNumber_Schlafli)->Unit(benchmark::kMillisecond);

void BM_ChromaticNumber_Expansion(benchmark::State& state) {
  const Graph g = expansion(2);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).chi);
}
BENCHMARK(BM_ChromaticNumber_Expansion);

void BM_Alpha2Shortcut_Expansion(benchmark::State& state) {
  const Graph g = expansion(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chi_alpha2_shortcut(g));
  state.counters["n"] = g.order();
}
BENCHMARK(BM_Alpha2Shortcut_Expansion)->RangeMultiplier(2)->Range(1, 32);

void BM_TwoOmega_Schlafli(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(color_two_omega(schlafli()).omega);
}
BENCHMARK(BM_TwoOmega_Schlafli);

void BM_TwoOmega_Random(benchmark::State& state) {
  const Graph g = random_class_member(static_cast<int>(state.range(0)), 7, SampleStrategy::kPrune);
  for (auto _ : state) benchmark::DoNotOptimize(color_two_omega(g).omega);
}
BENCHMARK(BM_TwoOmega_Random)->DenseRange(10, 26, 8);

void BM_ThreeOmega_Schlafli(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(color_three_omega(schlafli()).omega);
}
BENCHMARK(BM_ThreeOmega_Schlafli);

void BM_FindInduced_Gem_Schlafli(benchmark::State& state) {
  const Pattern gem = named_pattern("gem");
  for (auto _ : state) benchmark::DoNotOptimize(find_induced(schlafli(), gem));
}
BENCHMARK(BM_FindInduced_Gem_Schlafli);

void BM_ClassMembership(benchmark::State& state) {
  const Graph g = expansion(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_class_member(g).member);
  state.counters["n"] = g.order();
}
BENCHMARK(BM_ClassMembership)->DenseRange(1, 5, 2);

}  // namespace

BENCHMARK_MAIN();
