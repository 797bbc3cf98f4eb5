// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include "ghl/closedform.hpp"
#include "ghl/hierarchy.hpp"
#include "ghl/kernels.hpp"

namespace {

const ghl::BreatherSolution& breather() {
  static const ghl::BreatherSolution b({1.0, 1.1, 0.3, 3, 0, 0});
  return b;
}

void BM_sample_serial(benchmark::State& st) {
  const ghl::Grid g(40, static_cast<int>(st.range(0)));
  std::vector<std::vector<double>> out;
  for (auto _ : st) {
    ghl::sample_serial(breather(), 0.3, g, 7, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_sample_parallel(benchmark::State& st) {
  const ghl::Grid g(40, static_cast<int>(st.range(0)));
  std::vector<std::vector<double>> out;
  for (auto _ : st) {
    ghl::sample_parallel(breather(), 0.3, g, 7, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_eval_serial(benchmark::State& st) {
  const ghl::Grid g(40, static_cast<int>(st.range(0)));
  const auto stack = ghl::analytic_stack(breather(), 0.3, g, 7);
  const auto p = ghl::compile(ghl::gardner_rhs(3).rhs, 0.3);
  std::vector<double> out;
  for (auto _ : st) {
    ghl::eval_poly_serial(p, stack, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_eval_parallel(benchmark::State& st) {
  const ghl::Grid g(40, static_cast<int>(st.range(0)));
  const auto stack = ghl::analytic_stack(breather(), 0.3, g, 7);
  const auto p = ghl::compile(ghl::gardner_rhs(3).rhs, 0.3);
  std::vector<double> out;
  for (auto _ : st) {
    ghl::eval_poly_parallel(p, stack, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_sample_serial)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_sample_parallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_eval_serial)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_eval_parallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

BENCHMARK_MAIN();
