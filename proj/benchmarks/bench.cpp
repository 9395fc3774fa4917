#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "loghankel/caratheodory.hpp"
#include "loghankel/classes.hpp"
#include "loghankel/functionals.hpp"
#include "loghankel/optimizer.hpp"
#include "loghankel/series.hpp"
#include "loghankel/ybc.hpp"

namespace {

using namespace loghankel;

TruncatedSeries random_normalized(std::mt19937_64& rng, int order) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<Complex> c(static_cast<size_t>(order) + 1);
  c[1] = Complex(1.0);
  for (int k = 2; k <= order; ++k) c[static_cast<size_t>(k)] = {d(rng), d(rng)};
  return TruncatedSeries(std::move(c));
}

void BM_SeriesRevert(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto f = random_normalized(rng, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(revert(f));
  }
}
BENCHMARK(BM_SeriesRevert);

void BM_PowReal(benchmark::State& state) {
  std::vector<Complex> c(11, Complex(2.0));
  c[0] = Complex(1.0);
  const TruncatedSeries p(std::move(c));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pow_real(p, 0.62));
  }
}
BENCHMARK(BM_PowReal);

void BM_YClosedForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  std::vector<YInputs> inputs;
  for (int i = 0; i < 256; ++i) inputs.push_back({d(rng), d(rng), d(rng)});
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(y_closed_form(inputs[i++ & 255]));
  }
}
BENCHMARK(BM_YClosedForm);

void BM_YBruteForce(benchmark::State& state) {
  const YInputs in{0.5, -1.0, -0.25};
  for (auto _ : state) {
    benchmark::DoNotOptimize(y_brute_force(in, 64, 256));
  }
}
BENCHMARK(BM_YBruteForce);

void BM_H21Eval(benchmark::State& state) {
  const AlphaClassSpec spec{ClassKind::StronglyStarlike, 0.7};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  std::vector<LZParams> params;
  for (int i = 0; i < 256; ++i) {
    params.push_back({2.0 * u01(rng), std::polar(u01(rng), ang(rng)),
                      std::polar(u01(rng), ang(rng))});
  }
  size_t i = 0;
  for (auto _ : state) {
    const auto t = lz_coefficients(params[i++ & 255]);
    const auto a = a234_closed_form(spec, t.c1, t.c2, t.c3);
    benchmark::DoNotOptimize(h21_from_a234(a.a2, a.a3, a.a4));
  }
}
BENCHMARK(BM_H21Eval);

void BM_MaximizeH21(benchmark::State& state) {
  SearchConfig cfg;
  cfg.grid_c = 9;
  cfg.grid_ring = 5;
  cfg.grid_angle = 8;
  cfg.top_k = 3;
  cfg.polish_iters = 10;
  const AlphaClassSpec spec{ClassKind::StronglyConvex, 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximize_h21(spec, cfg));
  }
}
BENCHMARK(BM_MaximizeH21);

}  // namespace

BENCHMARK_MAIN();
