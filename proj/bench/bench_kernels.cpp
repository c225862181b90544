#include "shearcst/cst.hpp"
#include "shearcst/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace shearcst;

namespace {

std::vector<cplx> random_field(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

struct CstCase {
  std::vector<cplx> f, phi, out;
  CstGeometry geo;
  explicit CstCase(std::size_t n) {
    const ModelParams p;
    const auto y = UniformGrid::centered(n, 8.0 / static_cast<double>(n));
    phi = make_fiducial({FiducialKind::gaussian, 1.5}, y, p).values;
    f = random_field(n);
    out.resize(n * n);
    geo = {y, y.dual(p.hbar4), 0.25, p.hbar4, p.h2, y.step};
  }
};

void BM_CstSliceOmp(benchmark::State& state) {
  CstCase c(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    kernels::cst_slice(c.f, c.phi, c.geo, c.out);
    benchmark::DoNotOptimize(c.out.data());
  }
}

void BM_CstSliceSerial(benchmark::State& state) {
  CstCase c(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    reference::cst_slice(c.f, c.phi, c.geo, c.out);
    benchmark::DoNotOptimize(c.out.data());
  }
}

void BM_SpectralOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto v = random_field(n * n);
  for (auto _ : state) {
    kernels::spectral_derivative(v, n, n, Axis::x3, 0.1, 1);
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_SpectralSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto v = random_field(n * n);
  for (auto _ : state) {
    reference::spectral_derivative(v, n, n, Axis::x3, 0.1, 1);
    benchmark::DoNotOptimize(v.data());
  }
}

}  // namespace

BENCHMARK(BM_CstSliceOmp)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CstSliceSerial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SpectralOmp)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SpectralSerial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
