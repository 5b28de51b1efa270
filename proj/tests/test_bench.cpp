#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "realcipher/bench.hpp"
#include "realcipher/errors.hpp"
#include "realcipher/presets.hpp"

using namespace realcipher;

TEST_CASE("pearson on hand-computed data") {
  const std::vector<double> x{1, 2, 3};
  CHECK(pearson(x, std::vector<double>{2, 4, 6}) == 1.0);
  CHECK(pearson(x, std::vector<double>{6, 4, 2}) == -1.0);
  // x - 2 = (-1, 0, 1), y - 2 = (-1, -1, 2): r = 3 / sqrt(2 * 6)
  CHECK(pearson(x, std::vector<double>{1, 1, 4}) == doctest::Approx(3.0 / std::sqrt(12.0)));
}

TEST_CASE("pearson preconditions") {
  CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{1}), PreconditionError);
  CHECK_THROWS_AS(pearson(std::vector<double>{1, 2}, std::vector<double>{1, 2, 3}), PreconditionError);
  CHECK_THROWS_AS(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{5, 5, 5}), PreconditionError);
}

TEST_CASE("default sizes") {
  CHECK(default_bench_sizes() ==
        std::vector<std::size_t>{21, 1036, 2024, 4658, 6218, 9830, 18552, 31081, 39674, 60173});
}

TEST_CASE("random_printable is deterministic and printable") {
  const PlainText a = random_printable(5000, 42);
  CHECK(a == random_printable(5000, 42));
  CHECK(a != random_printable(5000, 43));
  CHECK(std::all_of(a.begin(), a.end(), [](PlainByte b) { return b >= 32 && b <= 126; }));
}

TEST_CASE("bench preconditions") {
  const Pipeline p = presets::linear_product(keygen_linear(3, 1));
  const std::vector<std::size_t> two{10, 20};
  const std::vector<std::size_t> equal{10, 10, 10};
  const std::vector<std::size_t> down{30, 20, 10};
  const std::vector<std::size_t> ok{10, 20, 30};
  CHECK_THROWS_AS(bench(p, two, 1), PreconditionError);
  CHECK_THROWS_AS(bench(p, equal, 1), PreconditionError);
  CHECK_THROWS_AS(bench(p, down, 1), PreconditionError);
  CHECK_THROWS_AS(bench(p, ok, 1, 4), PreconditionError);
}

TEST_CASE("bench result shape and formatting") {
  const Pipeline p = presets::nonlinear_product(presets::quintic_key(), presets::demo_keyword());
  const std::vector<std::size_t> sizes{100, 2000, 8000};
  const BenchResult r = bench(p, sizes, 7);
  CHECK(r.sizes == sizes);
  REQUIRE(r.enc_times.size() == 3);
  REQUIRE(r.dec_times.size() == 3);
  for (double t : r.enc_times) CHECK(t > 0.0);
  for (double t : r.dec_times) CHECK(t > 0.0);
  CHECK(std::fabs(r.r_enc) <= 1.0);
  CHECK(std::fabs(r.r_dec) <= 1.0);

  const std::string csv = format_bench_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "size,enc_seconds,dec_seconds");
  std::getline(in, line);
  CHECK(line.rfind("100,", 0) == 0);
  CHECK(csv.find("# r_enc,") != std::string::npos);
  CHECK(format_bench_table(r).find("8000") != std::string::npos);
}
