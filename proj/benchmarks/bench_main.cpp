#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fzspec/finite_spectra.hpp"
#include "fzspec/linalg.hpp"
#include "fzspec/periodic_spectra.hpp"
#include "fzspec/point_cloud.hpp"
#include "fzspec/poly_roots.hpp"
#include "fzspec/sierpinski.hpp"

namespace {

using fz::Complex;

void BM_TableBuild(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fz::sierpinski::CoefficientTable::build(rows).nonzero_count());
}
BENCHMARK(BM_TableBuild)->Arg(512)->Arg(2048);

void BM_SectionCharPoly(benchmark::State& state) {
  fz::finite::PatternId p{static_cast<int>(state.range(0)), 0b10110101u};
  for (auto _ : state)
    benchmark::DoNotOptimize(fz::finite::section_char_poly(p).coeffs.back());
}
BENCHMARK(BM_SectionCharPoly)->Arg(12)->Arg(20);

void BM_DistinctEigenvalues(benchmark::State& state) {
  fz::finite::PatternId p{static_cast<int>(state.range(0)), 0b10110101u};
  for (auto _ : state)
    benchmark::DoNotOptimize(fz::finite::distinct_section_eigenvalues(p).size());
}
BENCHMARK(BM_DistinctEigenvalues)->Arg(8)->Arg(12);

void BM_DenseEigenvalues(benchmark::State& state) {
  fz::DenseMatrix m = fz::finite::build_finite_matrix(
      {static_cast<int>(state.range(0)), 0b10110101u});
  for (auto _ : state) benchmark::DoNotOptimize(fz::eigenvalues(m).size());
}
BENCHMARK(BM_DenseEigenvalues)->Arg(12)->Arg(24);

void BM_SmallestSingularValue(benchmark::State& state) {
  fz::DenseMatrix m = fz::finite::build_finite_matrix({12, 0b1011u});
  for (int d = 0; d < m.size(); ++d) m.at(d, d) -= Complex(0.3, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(fz::smallest_singular_value(m));
}
BENCHMARK(BM_SmallestSingularValue);

void BM_SigmaSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fz::finite::sigma_n(n).size());
}
BENCHMARK(BM_SigmaSweep)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_PeriodicSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fz::periodic::pi_n(n, 64).size());
}
BENCHMARK(BM_PeriodicSweep)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_WarmPhaseSweep(benchmark::State& state) {
  // One rotation class swept over phases with a carried warm start.
  fz::IntPolynomial q = fz::periodic::transfer_trace_poly(7, 0b0110101u);
  std::vector<Complex> coeffs(q.coeffs.size());
  for (auto _ : state) {
    std::vector<Complex> warm;
    for (int k = 0; k < 256; ++k) {
      double phi = 2.0 * M_PI * k / 256;
      for (std::size_t j = 0; j < q.coeffs.size(); ++j)
        coeffs[j] = Complex(static_cast<double>(q.coeffs[j]), 0.0);
      coeffs[0] -= Complex(2.0 * std::cos(phi), 0.0);
      std::vector<Complex> roots = fz::aberth_roots(coeffs, warm.empty() ? nullptr : &warm);
      warm = std::move(roots);
    }
    benchmark::DoNotOptimize(warm.data());
  }
}
BENCHMARK(BM_WarmPhaseSweep)->Unit(benchmark::kMillisecond);

void BM_Dedup(benchmark::State& state) {
  fz::SpectralPointCloud cloud;
  for (int k = 0; k < 10000; ++k) {
    double t = 2.0 * M_PI * (k % 500) / 500.0;
    cloud.add(std::cos(t) + 1e-12 * k, std::sin(t));
  }
  cloud.sort();
  for (auto _ : state) benchmark::DoNotOptimize(fz::dedup(cloud, 1e-9).size());
}
BENCHMARK(BM_Dedup);

void BM_EigenvectorWindow(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fz::sierpinski::eigenvector(Complex(0.4, 0.3), m).size());
}
BENCHMARK(BM_EigenvectorWindow)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
