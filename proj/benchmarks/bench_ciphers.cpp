#include <benchmark/benchmark.h>

#include <random>

#include "realcipher/realcipher.hpp"

using namespace realcipher;

namespace {

PlainText random_text(std::size_t n, std::uint64_t seed) {
  const auto alphabet = default_alphabet();
  std::mt19937_64 rng(seed);
  PlainText t(n);
  for (auto& b : t) b = alphabet[rng() % alphabet.size()];
  return t;
}

void BM_LinearEncrypt(benchmark::State& state) {
  const Pipeline p = presets::linear_product(presets::demo_linear_key());
  const PlainText text = random_text(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(encrypt_pipeline(p, text));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LinearEncrypt)->RangeMultiplier(10)->Range(100, 100000);

void BM_LinearDecrypt(benchmark::State& state) {
  const Pipeline p = presets::linear_product(presets::demo_linear_key());
  const std::string cipher = encrypt_pipeline(p, random_text(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(decrypt_pipeline(p, cipher));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LinearDecrypt)->RangeMultiplier(10)->Range(100, 100000);

void BM_NonlinearEncrypt(benchmark::State& state) {
  const Pipeline p = presets::nonlinear_product(presets::quintic_key(), presets::demo_keyword());
  const PlainText text = random_text(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(encrypt_pipeline(p, text));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NonlinearEncrypt)->RangeMultiplier(10)->Range(100, 100000);

void BM_NonlinearDecrypt(benchmark::State& state) {
  const Pipeline p = presets::nonlinear_product(presets::quintic_key(), presets::demo_keyword());
  const std::string cipher = encrypt_pipeline(p, random_text(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(decrypt_pipeline(p, cipher));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NonlinearDecrypt)->RangeMultiplier(10)->Range(100, 100000);

void BM_InvertMatrix(benchmark::State& state) {
  const Matrix a = keygen_linear(static_cast<std::size_t>(state.range(0)), 3).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(invert_matrix(a));
}
BENCHMARK(BM_InvertMatrix)->DenseRange(2, 10, 4)->Arg(32);

void BM_BisectionRoot(benchmark::State& state) {
  const NonlinearKey key = presets::quintic_key();
  for (auto _ : state) benchmark::DoNotOptimize(bisection_solve(key.f, 'e', key.solver));
}
BENCHMARK(BM_BisectionRoot);

void BM_SecantRoot(benchmark::State& state) {
  const NonlinearKey key = presets::exp2_key();
  for (auto _ : state) benchmark::DoNotOptimize(secant_solve(key.f, 'e', key.solver));
}
BENCHMARK(BM_SecantRoot);

void BM_FormatScalar(benchmark::State& state) {
  FormatSpec spec;
  spec.fractional_digits = static_cast<int>(state.range(0));
  double x = 1.0625;
  for (auto _ : state) {
    benchmark::DoNotOptimize(format_scalar(x, spec));
    x += 0.001;
  }
}
BENCHMARK(BM_FormatScalar)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
