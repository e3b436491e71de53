#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "arrowpoly/cabling.hpp"
#include "arrowpoly/whisker_engine.hpp"

namespace {

arrowpoly::PDCode load(const std::string& name) {
  std::ifstream in(std::string(ARROWPOLY_CORPUS_DIR) + "/" + name + ".pd");
  std::stringstream ss;
  ss << in.rdbuf();
  return arrowpoly::parse_pd(ss.str());
}

const char* const kNames[] = {"2.1", "3.7", "4.105", "4.55", "4.72", "5.632", "figure8"};

void BM_Arrow(benchmark::State& state) {
  const auto pd = load(kNames[state.range(0)]);
  state.SetLabel(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(arrowpoly::compute_arrow(pd));
}
BENCHMARK(BM_Arrow)->DenseRange(0, 6);

void BM_Cable(benchmark::State& state, const char* name, int n) {
  const auto pd = load(name);
  arrowpoly::EngineStats st;
  for (auto _ : state) benchmark::DoNotOptimize(arrowpoly::cabled_arrow(pd, n, {}, &st));
  state.counters["peak_states"] = static_cast<double>(st.peak_states);
}
BENCHMARK_CAPTURE(BM_Cable, kishino_2, "4.55", 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cable, k472_3, "4.72", 3)->Unit(benchmark::kMillisecond);

// Crossing-by-crossing contraction, for comparison with the block cache.
void BM_CableDirect(benchmark::State& state) {
  const auto pd = load("4.72");
  arrowpoly::CableOptions o;
  o.use_blocks = false;
  for (auto _ : state) benchmark::DoNotOptimize(arrowpoly::cabled_arrow(pd, 3, o));
}
BENCHMARK(BM_CableDirect)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
