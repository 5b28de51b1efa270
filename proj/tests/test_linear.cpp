#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "realcipher/errors.hpp"
#include "realcipher/linear_cipher.hpp"
#include "realcipher/matrix.hpp"
#include "realcipher/presets.hpp"

using namespace realcipher;

namespace {

oracle::Dense to_dense(const Matrix& m) {
  oracle::Dense d(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

LinearKey epic_key() { return LinearKey(Matrix{{2, 3}, {1, 4}}, {-3, 2}); }

const PlainText kEpic{'e', 'p', 'i', 'c'};

PlainText random_bytes(std::mt19937_64& rng, std::size_t n) {
  PlainText p(n);
  for (auto& b : p) b = static_cast<PlainByte>(rng());
  return p;
}

}  // namespace

TEST_CASE("invert_matrix on the worked 2x2 example") {
  const Matrix inv = invert_matrix(Matrix{{2, 3}, {1, 4}});
  const Matrix expected{{4.0 / 5, -3.0 / 5}, {-1.0 / 5, 2.0 / 5}};
  CHECK(max_abs_difference(inv, expected) <= 1e-15);
  CHECK(max_abs_difference(invert_matrix_adjugate(Matrix{{2, 3}, {1, 4}}), expected) <= 1e-15);
}

TEST_CASE("invert_matrix of the identity") {
  for (std::size_t n : {1u, 2u, 5u, 10u}) {
    CHECK(invert_matrix(Matrix::identity(n)) == Matrix::identity(n));
  }
}

TEST_CASE("singular matrices are rejected") {
  CHECK_THROWS_AS(invert_matrix(Matrix{{1, 2}, {2, 4}}), SingularMatrixError);
  CHECK_THROWS_AS(invert_matrix_adjugate(Matrix{{1, 2}, {2, 4}}), SingularMatrixError);
  CHECK_THROWS_AS(invert_matrix(Matrix{{1e-4, 0}, {0, 1e-3}}), SingularMatrixError);
  CHECK_THROWS_AS(LinearKey(Matrix{{1, 2}, {2, 4}}, {0, 0}), SingularMatrixError);
}

TEST_CASE("adjugate path is limited to n <= 4") {
  CHECK_NOTHROW(invert_matrix_adjugate(Matrix::identity(4)));
  CHECK_THROWS_AS(invert_matrix_adjugate(Matrix::identity(5)), PreconditionError);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const LinearKey key = keygen_linear(2 + seed % 6, seed);
    const double ref = oracle::cofactor_determinant(to_dense(key.matrix()));
    CHECK(determinant(key.matrix()) == doctest::Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("keygen_linear postconditions") {
  const LinearKey k = keygen_linear(2, 1, 10);
  CHECK(k.block_size() == 2);
  CHECK(std::fabs(determinant(k.matrix())) >= kMinDeterminant);

  const LinearKey big = keygen_linear(10, 7, 100);
  const double det = oracle::cofactor_determinant(to_dense(big.matrix()));
  CHECK(std::fabs(det) >= kMinDeterminant);
  CHECK(big.condition_estimate() <= kMaxConditionEstimate);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) CHECK(std::fabs(big.matrix()(i, j)) <= 100.0);
  for (double v : big.offset()) CHECK(std::fabs(v) <= 100.0);

  CHECK_THROWS_AS(keygen_linear(1, 1), PreconditionError);
  CHECK_THROWS_AS(keygen_linear(kMaxLinearBlock + 1, 1), PreconditionError);
}

TEST_CASE("keygen_linear is deterministic in the seed") {
  CHECK(keygen_linear(4, 99).matrix() == keygen_linear(4, 99).matrix());
  CHECK(keygen_linear(4, 99).offset() == keygen_linear(4, 99).offset());
  CHECK_FALSE(keygen_linear(4, 99).matrix() == keygen_linear(4, 100).matrix());
}

TEST_CASE("A * inverse(A) is the identity for generated keys") {
  for (std::size_t n = 2; n <= 12; ++n) {
    const LinearKey key = keygen_linear(n, 1000 + n);
    CHECK(max_abs_difference(key.matrix() * key.inverse(), Matrix::identity(n)) <= 1e-9);
  }
}

TEST_CASE("adjugate and elimination inverses agree") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const Matrix a = keygen_linear(n, seed).matrix();
    CHECK(max_abs_difference(invert_matrix(a), invert_matrix_adjugate(a)) <= 1e-9);
  }
}

TEST_CASE("solve_least_squares matches Eigen on an overdetermined system") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-5, 5);
  Matrix m(9, 4);
  Matrix rhs(9, 2);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = u(rng);
    for (std::size_t j = 0; j < 2; ++j) rhs(i, j) = u(rng);
  }
  const Matrix x = solve_least_squares(m, rhs);
  const Eigen::MatrixXd ref = to_eigen(m).colPivHouseholderQr().solve(to_eigen(rhs));
  REQUIRE(x.rows() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(x(i, j) == doctest::Approx(ref(i, j)).epsilon(1e-10));
}

TEST_CASE("epic example encrypts to the published block solutions") {
  const auto x = encrypt_linear(epic_key(), kEpic);
  const std::vector<double> expected{-17.2, -23.2, -28.2, -17.2};
  REQUIRE(x.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::fabs(x[i] - expected[i]) <= 1e-9);
  CHECK(decrypt_linear(epic_key(), expected) == kEpic);
}

TEST_CASE("plaintext block equal to b encrypts to zero") {
  const LinearKey key(Matrix{{2, 3}, {1, 4}}, {101, 112});
  const auto x = encrypt_linear(key, PlainText{'e', 'p'});
  CHECK(x[0] == 0.0);
  CHECK(x[1] == 0.0);
}

TEST_CASE("short blocks are padded with spaces") {
  const auto x = encrypt_linear(epic_key(), PlainText{'a', 'b', 'c'});
  CHECK(x.size() == 4);
  CHECK(decrypt_linear(epic_key(), x) == PlainText{'a', 'b', 'c', ' '});
  CHECK(encrypt_linear(epic_key(), PlainText{}).empty());
  CHECK(pad_to_block(PlainText{'a'}, 3) == PlainText{'a', ' ', ' '});
}

TEST_CASE("ciphertext length must be a multiple of n") {
  CHECK_THROWS_AS(decrypt_linear(epic_key(), std::vector<double>{1.0, 2.0, 3.0}), ParseError);
}

TEST_CASE("10x10 demo key reproduces the published linear ciphertext") {
  const LinearKey key = presets::demo_linear_key();
  CHECK(key.defined_by_inverse());
  const auto x = encrypt_linear(key, fixtures::kPlainCodes);
  REQUIRE(x.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) {
    CAPTURE(i);
    CHECK(std::fabs(x[i] - fixtures::kLinearCipher[i]) <= 1e-2);
  }
}

TEST_CASE("demo ciphertext agrees with an Eigen solve of A x = b - c") {
  const LinearKey key = presets::demo_linear_key();
  const Eigen::MatrixXd m = to_eigen(presets::demo_encryption_matrix());
  const Eigen::MatrixXd a = m.inverse();
  const auto x = encrypt_linear(key, fixtures::kPlainCodes);
  for (std::size_t blk = 0; blk < 2; ++blk) {
    Eigen::VectorXd rhs(10);
    for (std::size_t i = 0; i < 10; ++i) rhs(i) = key.offset()[i] - fixtures::kPlainCodes[blk * 10 + i];
    const Eigen::VectorXd sol = a.partialPivLu().solve(rhs);
    for (std::size_t i = 0; i < 10; ++i) {
      CHECK(x[blk * 10 + i] == doctest::Approx(sol(i)).epsilon(1e-9));
      CHECK(std::fabs(sol(i) - fixtures::kLinearCipher[blk * 10 + i]) <= 1e-2);
    }
  }
}

TEST_CASE("published ciphertext decrypts to the published reals and plaintext") {
  const LinearKey key = presets::demo_linear_key();
  const auto reals = decrypt_linear_reals(key, fixtures::kLinearCipher);
  for (std::size_t i = 0; i < 20; ++i) CHECK(std::fabs(reals[i] - fixtures::kLinearDecryptedReals[i]) <= 1e-3);
  const auto plain = decrypt_linear(key, fixtures::kLinearCipher);
  CHECK(std::equal(plain.begin(), plain.end(), fixtures::kPlainCodes.begin(), fixtures::kPlainCodes.end()));
}

TEST_CASE("round trip over all 256 codes for block sizes 2..10") {
  std::mt19937_64 rng(21);
  PlainText all(256);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const LinearKey key = keygen_linear(n, rng());
      std::shuffle(all.begin(), all.end(), rng);
      const PlainText extra = random_bytes(rng, rng() % 40);
      PlainText p = all;
      p.insert(p.end(), extra.begin(), extra.end());
      REQUIRE(decrypt_linear(key, encrypt_linear(key, p)) == pad_to_block(p, n));
    }
  }
}

TEST_CASE("repeated characters encrypt to different scalars") {
  const auto x = encrypt_linear(epic_key(), PlainText{'a', 'a', 'a', 'a'});
  CHECK(x[0] != x[1]);
  CHECK(x[0] == doctest::Approx(-23.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(-18.0).epsilon(1e-14));
}

TEST_CASE("decrypting with the wrong key is detected") {
  const auto x = encrypt_linear(keygen_linear(3, 1), PlainText(30, 'q'));
  try {
    (void)decrypt_linear(keygen_linear(3, 2), x);
    FAIL("expected an error");
  } catch (const RoundingDriftError& e) {
    CHECK(std::string(e.what()).find("character") != std::string::npos);
  } catch (const CodeRangeError& e) {
    CHECK(std::string(e.what()).find("character") != std::string::npos);
  }
}

TEST_CASE("mod-26 Hill comparison") {
  const IntMatrix a{{2, 3}, {1, 4}};
  std::vector<std::int64_t> codes;
  for (PlainByte c : kEpic) codes.push_back(c % 26);
  const auto y = hill_encrypt(a, codes);
  // Column blocks [[18,13],[3,7]].
  CHECK(y == std::vector<std::int64_t>{18, 3, 13, 7});
  CHECK(hill_inverse(a) == IntMatrix{{6, 15}, {5, 16}});
  CHECK(hill_decrypt(a, y) == codes);

  CHECK(hill_encrypt(IntMatrix{{1, 0}, {0, 1}}, codes) == codes);
  CHECK_THROWS_AS(hill_inverse(IntMatrix{{2, 0}, {0, 1}}), SingularMatrixError);
  CHECK_THROWS_AS(hill_encrypt(IntMatrix{{13, 0}, {0, 1}}, codes), SingularMatrixError);
}

TEST_CASE("real-field and Hill decryption both recover epic") {
  const std::vector<double> x{-17.2, -23.2, -28.2, -17.2};
  CHECK(decrypt_linear(epic_key(), x) == kEpic);
  std::vector<std::int64_t> codes;
  for (PlainByte c : kEpic) codes.push_back(c % 26);
  const IntMatrix a{{2, 3}, {1, 4}};
  CHECK(hill_decrypt(a, hill_encrypt(a, codes)) == codes);
}
