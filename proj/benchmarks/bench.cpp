#include <benchmark/benchmark.h>

#include "lgpoly/classifier.hpp"
#include "lgpoly/derived.hpp"
#include "lgpoly/families.hpp"
#include "lgpoly/generator.hpp"
#include "lgpoly/planarity.hpp"

using namespace lgpoly;

namespace {

Graph octahedron() { return line_graph(complete_graph(4)).graph; }

void BM_canonical_form_octahedron(benchmark::State& state) {
  Graph g = octahedron();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_canonical_form_octahedron);

void BM_canonical_form_cubic20(benchmark::State& state) {
  // circular ladder on 20 vertices: highly symmetric, stresses the refiner
  Graph g = circular_ladder(10);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_canonical_form_cubic20);

void BM_planarity_embedding(benchmark::State& state) {
  Graph g = circular_ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_planarity(g));
}
BENCHMARK(BM_planarity_embedding)->Arg(4)->Arg(12)->Arg(24);

void BM_planarity_witness(benchmark::State& state) {
  Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_planarity(g));
}
BENCHMARK(BM_planarity_witness)->Arg(5)->Arg(8);

void BM_classify_root(benchmark::State& state) {
  Graph g = decorate(circular_ladder(4), {{0, 1}, {4, 5}}, {2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(classify_root(g));
}
BENCHMARK(BM_classify_root);

void BM_root_recovery(benchmark::State& state) {
  Graph p = line_graph(circular_ladder(4)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(root_graph(p));
}
BENCHMARK(BM_root_recovery);

void BM_enumerate_roots(benchmark::State& state) {
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_roots(budget));
}
BENCHMARK(BM_enumerate_roots)->Arg(7)->Arg(9);

void BM_enumerate_cubic_polytopes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cubic_polytopes(n));
}
BENCHMARK(BM_enumerate_cubic_polytopes)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
