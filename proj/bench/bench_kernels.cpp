// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "reeb/generators.hpp"
#include "reeb/index_jump.hpp"
#include "reeb/index_model.hpp"
#include "reeb/toric.hpp"

namespace {

using namespace reeb;

std::vector<OrbitIndexModel> profile_models() {
  gen::Rng rng(1);
  std::vector<OrbitIndexModel> models;
  for (int i = 0; i < 8; ++i) models.push_back(gen::random_rotation_model(rng, 3, 12, {2}, 3, true));
  return models;
}

void BM_profile_serial(benchmark::State& state) {
  const auto models = profile_models();
  const Window w{0, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(serial::good_count_profile(models, w, ClassFilter::all));
}

void BM_profile_parallel(benchmark::State& state) {
  const auto models = profile_models();
  const Window w{0, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(good_count_profile(models, w, ClassFilter::all));
}

// mu(k) = 4k + 1 never admits a certificate, so the whole range is scanned.
const std::vector<OrbitIndexModel> kExhausting{
    OrbitIndexModel({PerturbedRational(Rational(1), Perturbation::plus)}, 2, 1)};

void BM_search_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::find_certificate(kExhausting, 2, 4, state.range(0)));
}

void BM_search_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_certificate(kExhausting, 2, 4, state.range(0)));
}

ReebDecomposition bench_facet(std::vector<Perturbation>& signs) {
  gen::Rng rng(3);
  const auto f = gen::random_facet(rng, 4, 20);
  signs = f.signs;
  return decompose_reeb(f.facet);
}

void BM_prop81_serial(benchmark::State& state) {
  std::vector<Perturbation> signs;
  const auto d = bench_facet(signs);
  for (auto _ : state) benchmark::DoNotOptimize(serial::prop81_check(d, signs, 4, state.range(0)));
}

void BM_prop81_parallel(benchmark::State& state) {
  std::vector<Perturbation> signs;
  const auto d = bench_facet(signs);
  for (auto _ : state) benchmark::DoNotOptimize(prop81_check(d, signs, 4, state.range(0)));
}

}  // namespace

BENCHMARK(BM_profile_serial)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_profile_parallel)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_serial)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_parallel)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_prop81_serial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_prop81_parallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
