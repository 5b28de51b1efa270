#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "realcipher/errors.hpp"
#include "realcipher/pipeline.hpp"
#include "realcipher/presets.hpp"

using namespace realcipher;

namespace {

FormatSpec digits(int p) {
  FormatSpec f;
  f.fractional_digits = p;
  return f;
}

PlainText random_text(std::mt19937_64& rng, std::size_t n) {
  const auto alphabet = default_alphabet();
  PlainText p(n);
  for (auto& b : p) b = alphabet[rng() % alphabet.size()];
  return p;
}

PlainText padded(PlainText p, std::size_t n) {
  while (p.size() % n != 0) p.push_back(' ');
  return p;
}

std::vector<double> undo_halving(const std::string& text, int p) {
  return parse_ciphertext(inverse_transpose_halving(text), digits(p));
}

const TranspositionSpec kHalving = HalvingInterleave{};

}  // namespace

TEST_CASE("serialize_ciphertext") {
  CHECK(serialize_ciphertext(std::vector<double>{-17.2, -23.2}, digits(6)) == "-17.200000 -23.200000");
  CHECK(serialize_ciphertext(std::vector<double>{}, digits(6)).empty());
  CHECK(serialize_ciphertext(fixtures::kRoots, digits(12)) == fixtures::kRootsText);
  FormatSpec comma = digits(2);
  comma.separator = ',';
  CHECK(serialize_ciphertext(std::vector<double>{1.0, 2.5}, comma) == "1.00,2.50");
}

TEST_CASE("serialized bisection roots parse back to the published roots") {
  // The published digits are accurate to about 1e-10, so the 12th decimal
  // differs in places.
  const auto roots = encrypt_nonlinear(presets::quintic_key(), fixtures::kPlainCodes);
  const auto back = parse_ciphertext(serialize_ciphertext(roots, digits(12)), digits(12));
  for (std::size_t i = 0; i < 20; ++i) CHECK(std::fabs(back[i] - fixtures::kRoots[i]) <= 1e-9);
}

TEST_CASE("transposition chains pad once to a common block length") {
  const Pipeline p({keygen_linear(2, 1), kHalving, TranspositionSpec{KeyedBlockPermutation{{2, 0, 1}}}});
  for (std::size_t size : {1u, 2u, 3u, 7u}) {
    const PlainText plain(size, 'z');
    const std::string text = encrypt_pipeline(p, plain);
    CHECK(text.size() % 6 == 0);
    CHECK(decrypt_pipeline(p, text) == padded(plain, 2));
  }
}

TEST_CASE("parse_ciphertext") {
  const auto xs = parse_ciphertext("-17.200000 -23.200000", digits(6));
  CHECK(xs == std::vector<double>{-17.2, -23.2});
  CHECK(parse_ciphertext("", digits(6)).empty());
  CHECK(parse_ciphertext("1.5 ", digits(6)) == std::vector<double>{1.5});
  CHECK(parse_ciphertext("1.5   ", digits(6)) == std::vector<double>{1.5});
  CHECK_THROWS_AS(parse_ciphertext("abc", digits(6)), ParseError);
  CHECK_THROWS_AS(parse_ciphertext("1.5  2.5", digits(6)), ParseError);
  CHECK_THROWS_AS(parse_ciphertext(" 1.5", digits(6)), ParseError);
  try {
    (void)parse_ciphertext("1.0 2.0 x", digits(6));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("token 2") != std::string::npos);
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1e4, 1e4);
  for (int p : {1, 6, 12, 17}) {
    std::vector<double> xs(10000);
    for (auto& x : xs) x = u(rng);
    const auto back = parse_ciphertext(serialize_ciphertext(xs, digits(p)), digits(p));
    REQUIRE(back.size() == xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double ulp = std::nextafter(std::fabs(xs[i]), INFINITY) - std::fabs(xs[i]);
      REQUIRE(std::fabs(back[i] - xs[i]) <= 0.5 * std::pow(10.0, -p) + 0.5 * ulp);
    }
  }
}

TEST_CASE("stage order is checked at construction") {
  const LinearKey lin = presets::demo_linear_key();
  const NonlinearKey nl = presets::quintic_key();
  const VigenereKey kw = presets::demo_keyword();
  CHECK_THROWS_AS(Pipeline({}), PreconditionError);
  CHECK_THROWS_AS(Pipeline({kw, nl}), PreconditionError);
  CHECK_THROWS_AS(Pipeline({kHalving, lin}), PreconditionError);
  CHECK_THROWS_AS(Pipeline({lin, nl}), PreconditionError);
  CHECK_THROWS_AS(Pipeline({nl, kHalving, kw}), PreconditionError);
  CHECK_THROWS_AS(Pipeline({kw}), PreconditionError);
  CHECK_NOTHROW(Pipeline({nl, kw, kw, kHalving, kHalving}));
  CHECK_NOTHROW(Pipeline({lin, kw, kHalving}));
}

TEST_CASE("serialization loss must stay below the decrypt tolerance") {
  const LinearKey wide = keygen_linear(3, 5, 100.0);
  CHECK_THROWS_AS(Pipeline({wide}, digits(1)), PreconditionError);
  CHECK_NOTHROW(Pipeline({wide}, digits(6)));
  CHECK_THROWS_AS(Pipeline({presets::quintic_key()}, digits(2)), PreconditionError);
  for (const Pipeline& p : {presets::linear_product(presets::demo_linear_key()),
                            presets::nonlinear_product(presets::quintic_key(), presets::demo_keyword())}) {
    CHECK(p.serialization_loss_bound() < 0.25);
  }
}

TEST_CASE("default digits follow the substitution kind") {
  CHECK(presets::linear_product(presets::demo_linear_key()).format().fractional_digits == 6);
  CHECK(presets::nonlinear_product(presets::quintic_key(), presets::demo_keyword()).format().fractional_digits == 12);
}

TEST_CASE("linear product cipher reproduces the published first stage") {
  const Pipeline p = presets::linear_product(presets::demo_linear_key());
  const std::string text = encrypt_pipeline(p, fixtures::kPlainCodes);
  const auto xs = undo_halving(text, 6);
  REQUIRE(xs.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) CHECK(std::fabs(xs[i] - fixtures::kLinearCipher[i]) <= 1e-2);
  // The transposed text is the riffle of the first-stage serialization.
  const std::string stage1 = serialize_ciphertext(encrypt_linear(presets::demo_linear_key(), fixtures::kPlainCodes),
                                                  digits(6));
  CHECK(text == transpose_halving(stage1));
  CHECK(inverse_transpose_halving(text).substr(0, stage1.size()) == stage1);
}

TEST_CASE("nonlinear product cipher reproduces the published Vigenère stage") {
  const Pipeline p = presets::nonlinear_product(presets::quintic_key(), presets::demo_keyword());
  const auto ys = undo_halving(encrypt_pipeline(p, fixtures::kPlainCodes), 12);
  REQUIRE(ys.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) CHECK(std::fabs(ys[i] - fixtures::kVigenereCipher[i]) <= 1e-5);
}

TEST_CASE("single-stage pipeline is the bare substitution") {
  const Pipeline p({presets::quintic_key()});
  const auto roots = encrypt_nonlinear(presets::quintic_key(), fixtures::kPlainCodes);
  CHECK(encrypt_pipeline(p, fixtures::kPlainCodes) == serialize_ciphertext(roots, digits(12)));
  const auto back = decrypt_pipeline(p, fixtures::kRootsText);
  CHECK(std::equal(back.begin(), back.end(), fixtures::kPlainCodes.begin(), fixtures::kPlainCodes.end()));
}

TEST_CASE("decrypted reals match the published pre-rounding values") {
  const LinearKey key = presets::demo_linear_key();
  const Pipeline p = presets::linear_product(key);
  const auto reals = decrypt_pipeline_reals(p, encrypt_pipeline(p, fixtures::kPlainCodes));
  for (std::size_t i = 0; i < 20; ++i) CHECK(std::fabs(reals[i] - fixtures::kLinearDecryptedReals[i]) <= 1e-3);
  // Starting from the printed first-stage ciphertext.
  const Pipeline bare({key});
  const auto from_print = decrypt_pipeline_reals(bare, serialize_ciphertext(fixtures::kLinearCipher, digits(6)));
  for (std::size_t i = 0; i < 20; ++i) CHECK(std::fabs(from_print[i] - fixtures::kLinearDecryptedReals[i]) <= 1e-3);
}

TEST_CASE("round trip across stage combinations and sizes") {
  std::mt19937_64 rng(10);
  const LinearKey lin = keygen_linear(4, 3);
  const NonlinearKey q = presets::quintic_key();
  const NonlinearKey e = presets::exp2_key();
  const VigenereKey kw = presets::demo_keyword();
  const TranspositionSpec keyed = KeyedBlockPermutation{{3, 1, 4, 0, 2}};
  const std::vector<Pipeline> pipelines{
      Pipeline({lin}),           Pipeline({lin, kHalving}),          Pipeline({lin, keyed}),
      Pipeline({lin, kHalving, keyed}), Pipeline({lin, kw, kHalving}), Pipeline({q}),
      Pipeline({q, kw}),         Pipeline({q, kw, kHalving}),        Pipeline({q, keyed, kHalving}),
      Pipeline({e, kw, kw, kHalving}),
  };
  for (const Pipeline& p : pipelines) {
    const std::size_t n = std::holds_alternative<LinearKey>(p.stages().front()) ? 4 : 1;
    for (std::size_t size : {std::size_t{0}, std::size_t{1}, n - 1, n, n + 1, std::size_t{65536}}) {
      const PlainText plain = random_text(rng, size);
      REQUIRE(decrypt_pipeline(p, encrypt_pipeline(p, plain)) == padded(plain, n));
    }
  }
}

TEST_CASE("stage errors carry the stage index") {
  const Pipeline p = presets::nonlinear_product(presets::quintic_key(), presets::demo_keyword());
  try {
    (void)decrypt_pipeline(p, "1.0 2.0 x");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("stage") != std::string::npos);
  }
  const Pipeline other = presets::nonlinear_product(presets::quintic_key(), VigenereKey{{0.5}});
  try {
    (void)decrypt_pipeline(other, encrypt_pipeline(p, fixtures::kPlainCodes));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("stage 0") != std::string::npos);
  }
}
