#include <benchmark/benchmark.h>

#include "agc/feasibility.hpp"
#include "agc/galois_invariants.hpp"
#include "agc/local_models.hpp"
#include "agc/monodromy.hpp"
#include "agc/surface_invariants.hpp"

namespace {

void BM_DiscriminantCurve(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(agc::discriminant_curve(n));
  }
}
BENCHMARK(BM_DiscriminantCurve)->Arg(1)->Arg(4)->Arg(12);

void BM_ResidualCurve(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(agc::residual_curve(n));
  }
}
BENCHMARK(BM_ResidualCurve)->Arg(1)->Arg(12);

void BM_InvariantReport(benchmark::State& state) {
  agc::SingularProfile p;
  p.d = 6;
  p.N = 4;
  p.n[0] = 24;
  p.t[1] = 12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(agc::make_invariant_report(p));
  }
}
BENCHMARK(BM_InvariantReport);

void BM_GaloisReport(benchmark::State& state) {
  agc::SingularProfile p;
  p.d = 6;
  p.N = state.range(0);
  p.n[1] = 6;
  p.t[2] = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(agc::make_galois_report(p));
  }
}
BENCHMARK(BM_GaloisReport)->Arg(4)->Arg(12)->Arg(30);

void BM_Enumerate(benchmark::State& state) {
  agc::EnumerationQuery q;
  q.d = 3;
  q.N = 3;
  q.k_max = 1;
  q.count_cap = 6;
  q.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(agc::enumerate_profiles(q));
  }
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(4);

void BM_TrackLoop(benchmark::State& state) {
  const auto model = agc::FiberModel::s3_cover(state.range(0));
  const auto loops = agc::standard_loops(model);
  for (auto _ : state) {
    benchmark::DoNotOptimize(agc::track_fiber(model, loops.front()));
  }
}
BENCHMARK(BM_TrackLoop)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
