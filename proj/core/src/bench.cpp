#include "realcipher/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "realcipher/errors.hpp"

namespace realcipher {
namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

template <class Fn>
double time_once(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw PreconditionError("pearson needs two equally long series of at least 2 points");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw PreconditionError("pearson is undefined for a constant series");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<std::size_t> default_bench_sizes() {
  return {21, 1036, 2024, 4658, 6218, 9830, 18552, 31081, 39674, 60173};
}

PlainText random_printable(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PlainText out(size);
  for (auto& c : out) c = static_cast<PlainByte>(32 + rng() % 95);
  return out;
}

BenchResult bench(const Pipeline& pipeline, std::span<const std::size_t> sizes, std::uint64_t seed,
                  int repetitions) {
  if (sizes.size() < 3) throw PreconditionError("bench needs at least 3 sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw PreconditionError("bench sizes must be strictly increasing");
  }
  if (repetitions < 5) throw PreconditionError("bench needs at least 5 repetitions");

  BenchResult result;
  result.sizes.assign(sizes.begin(), sizes.end());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const PlainText text = random_printable(sizes[i], seed + i);
    std::string cipher = encrypt_pipeline(pipeline, text);  // warm-up
    PlainText plain = decrypt_pipeline(pipeline, cipher);
    std::vector<double> enc;
    std::vector<double> dec;
    for (int r = 0; r < repetitions; ++r) {
      enc.push_back(time_once([&] { cipher = encrypt_pipeline(pipeline, text); }));
      dec.push_back(time_once([&] { plain = decrypt_pipeline(pipeline, cipher); }));
    }
    result.enc_times.push_back(median(std::move(enc)));
    result.dec_times.push_back(median(std::move(dec)));
  }
  std::vector<double> xs(sizes.begin(), sizes.end());
  result.r_enc = pearson(xs, result.enc_times);
  result.r_dec = pearson(xs, result.dec_times);
  return result;
}

std::string format_bench_table(const BenchResult& result) {
  std::ostringstream out;
  out << std::setw(10) << "size" << std::setw(16) << "encrypt (ms)" << std::setw(16) << "decrypt (ms)" << "\n";
  out << std::fixed << std::setprecision(4);
  for (std::size_t i = 0; i < result.sizes.size(); ++i) {
    out << std::setw(10) << result.sizes[i] << std::setw(16) << result.enc_times[i] * 1e3 << std::setw(16)
        << result.dec_times[i] * 1e3 << "\n";
  }
  out << "r_enc = " << result.r_enc << "\nr_dec = " << result.r_dec << "\n";
  return out.str();
}

std::string format_bench_csv(const BenchResult& result) {
  std::ostringstream out;
  out << "size,enc_seconds,dec_seconds\n" << std::scientific << std::setprecision(6);
  for (std::size_t i = 0; i < result.sizes.size(); ++i) {
    out << result.sizes[i] << "," << result.enc_times[i] << "," << result.dec_times[i] << "\n";
  }
  out << std::fixed << "# r_enc," << result.r_enc << "\n# r_dec," << result.r_dec << "\n";
  return out.str();
}

}  // namespace realcipher
