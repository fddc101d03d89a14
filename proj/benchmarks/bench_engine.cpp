#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "flapped/annuli.hpp"
#include "flapped/complex.hpp"
#include "flapped/dynamics.hpp"
#include "flapped/pullback.hpp"

using namespace flapped;

namespace {

FlappedPillow load(const std::string& name) {
  std::ifstream in(std::string(FLAPPED_DATA_DIR) + "/" + name + ".json");
  std::stringstream buf;
  buf << in.rdbuf();
  return build_pillow(parse_spec_json(buf.str()));
}

// slope k/(2k+1): complexity 3k+1
ExtendedSlope slope_of(long k) { return normalize_slope(BigInt(k), BigInt(2 * k + 1)); }

void BM_Pullback(benchmark::State& state) {
  FlappedPillow p = load("b3");
  ExtendedSlope x = slope_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pullback_components(p, x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Pullback)->RangeMultiplier(4)->Range(1, 256)->Complexity();

void BM_OrbitB3(benchmark::State& state) {
  FlappedPillow p = load("b3");
  for (auto _ : state) benchmark::DoNotOptimize(orbit(p, ExtendedSlope::parse("1/9"), 50));
}
BENCHMARK(BM_OrbitB3);

void BM_MonotonicityScan(benchmark::State& state) {
  FlappedPillow p = load("corner2");
  for (auto _ : state) {
    SlopeMap mu(p);
    benchmark::DoNotOptimize(monotonicity_scan(mu, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_MonotonicityScan)->Arg(10)->Arg(20)->Arg(30);

void BM_Annuli(benchmark::State& state) {
  FlappedPillow p = load("corner2");
  ExtendedSlope x = slope_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(annulus_components(p, x));
}
BENCHMARK(BM_Annuli)->Arg(0)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
