#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "realcipher/pipeline.hpp"

namespace realcipher {

struct BenchResult {
  std::vector<std::size_t> sizes;
  std::vector<double> enc_times;  // seconds, median over repetitions
  std::vector<double> dec_times;
  double r_enc = 0.0;
  double r_dec = 0.0;
};

/// Pearson correlation coefficient. Throws PreconditionError for fewer than
/// two points, mismatched lengths, or zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// 21, 1036, 2024, 4658, 6218, 9830, 18552, 31081, 39674, 60173 bytes.
std::vector<std::size_t> default_bench_sizes();

/// Random printable text of the given length.
PlainText random_printable(std::size_t size, std::uint64_t seed);

/// Times encrypt_pipeline and decrypt_pipeline on random printable text per
/// size: one discarded warm-up, then the median of `repetitions` runs on a
/// monotonic clock. Requires >= 3 strictly increasing sizes and >= 5
/// repetitions.
BenchResult bench(const Pipeline& pipeline, std::span<const std::size_t> sizes, std::uint64_t seed,
                  int repetitions = 5);

/// Aligned human-readable table.
std::string format_bench_table(const BenchResult& result);

/// size,enc_seconds,dec_seconds rows plus r_enc/r_dec trailer lines.
std::string format_bench_csv(const BenchResult& result);

}  // namespace realcipher
