// Serial reference vs OpenMP cell loops for the main assembly kernels.
// Run with --benchmark_counters_tabular=true for a compact table.

#include <benchmark/benchmark.h>

#include <random>

#include "smhd/assembly.hpp"
#include "smhd/fem_spaces.hpp"
#include "smhd/mesh.hpp"

namespace {

using namespace smhd;

Exec exec_of(const benchmark::State& st) { return st.range(1) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& st, std::size_t cells) {
  st.SetLabel(st.range(1) == 0 ? "serial" : "parallel");
  st.counters["cells/s"] = benchmark::Counter(static_cast<double>(cells), benchmark::Counter::kIsIterationInvariantRate);
}

FieldVector random_field(const Space& s, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  FieldVector f(s);
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) f.coeffs[i] = d(rng);
  return f;
}

void BM_MassNedelec(benchmark::State& st) {
  const TetMesh m = build_box_mesh(static_cast<int>(st.range(0)));
  const Space s(m, SpaceKind::Nedelec);
  for (auto _ : st) benchmark::DoNotOptimize(mass_matrix(s, -1, exec_of(st)));
  label(st, m.num_cells());
}

void BM_MassRt(benchmark::State& st) {
  const TetMesh m = build_box_mesh(static_cast<int>(st.range(0)));
  const Space s(m, SpaceKind::RaviartThomas);
  for (auto _ : st) benchmark::DoNotOptimize(mass_matrix(s, -1, exec_of(st)));
  label(st, m.num_cells());
}

void BM_CurlCurl(benchmark::State& st) {
  const TetMesh m = build_box_mesh(static_cast<int>(st.range(0)));
  const Space s(m, SpaceKind::Nedelec);
  for (auto _ : st) benchmark::DoNotOptimize(curl_curl_matrix(s, -1, exec_of(st)));
  label(st, m.num_cells());
}

void BM_CrossForm(benchmark::State& st) {
  const TetMesh m = build_box_mesh(static_cast<int>(st.range(0)));
  const Space n(m, SpaceKind::Nedelec);
  const Space r(m, SpaceKind::RaviartThomas);
  const FieldVector a = random_field(n, 1);
  const FieldVector b = random_field(r, 2);
  for (auto _ : st) benchmark::DoNotOptimize(cross_form(a, b, n, -1, exec_of(st)));
  label(st, m.num_cells());
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int n : {4, 8, 16})
    for (int e : {0, 1}) b->Args({n, e});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_MassNedelec)->Apply(sizes);
BENCHMARK(BM_MassRt)->Apply(sizes);
BENCHMARK(BM_CurlCurl)->Apply(sizes);
BENCHMARK(BM_CrossForm)->Apply(sizes);

BENCHMARK_MAIN();
