#include <benchmark/benchmark.h>
#include <omp.h>

#include "zeta/stokes.hpp"

using namespace zeta;

namespace {

SweepSpec spec_for(const std::string& panel, int count, const PrecisionContext& ctx) {
  const CaptionSetup cap = *caption_setup(panel);
  ContextScope scope(ctx);
  SweepSpec spec;
  spec.n = cap.n;
  spec.abs_a = cap.abs_a;
  spec.s = hp::Complex(hp::Real(cap.s_re), hp::Real(cap.s_im));
  spec.count = count;
  spec.pinned = cap.plan;
  return spec;
}

void BM_Sweep(benchmark::State& state, const char* panel, bool parallel) {
  const PrecisionContext ctx(60);
  const SweepSpec spec = spec_for(panel, static_cast<int>(state.range(0)), ctx);
  for (auto _ : state) {
    auto out = parallel ? sweep(spec, ctx) : sweep_serial(spec, ctx);
    benchmark::DoNotOptimize(out);
  }
  state.counters["threads"] = parallel ? omp_get_max_threads() : 1;
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Sweep, fig1a_serial, "fig1a", false)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, fig1a_openmp, "fig1a", true)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, fig1c_serial, "fig1c", false)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, fig1c_openmp, "fig1c", true)->Arg(41)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
