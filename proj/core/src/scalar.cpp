#include "realcipher/scalar.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>

#include "realcipher/errors.hpp"

namespace realcipher {
namespace {

// Number of binary fractional digits of the exact value of `x`. A value with
// k fractional bits has exactly k decimal fractional digits, the last being 5.
int fractional_bits(double x) {
  int exponent = 0;
  const double mantissa = std::frexp(std::fabs(x), &exponent);
  auto bits = static_cast<std::uint64_t>(std::ldexp(mantissa, 53));
  int scale = exponent - 53;
  if (bits == 0) return 0;
  while ((bits & 1U) == 0) {
    bits >>= 1U;
    ++scale;
  }
  return scale < 0 ? -scale : 0;
}

void increment_magnitude(std::string& digits) {
  // `digits` holds "<int>.<frac>" without sign.
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it == '.') continue;
    if (*it != '9') {
      ++*it;
      return;
    }
    *it = '0';
  }
  digits.insert(digits.begin(), '1');
}

}  // namespace

void ScalarTraits<double>::append_fixed(std::string& out, double x,
                                        int fractional_digits) {
  std::array<char, 400> buf{};
  const bool tie = fractional_bits(x) == fractional_digits + 1;
  const int precision = tie ? fractional_digits + 1 : fractional_digits;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::fixed, precision);
  if (ec != std::errc{}) throw FormatOverflow("scalar does not fit the fixed format");

  std::string_view text(buf.data(), static_cast<std::size_t>(end - buf.data()));
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string digits(text);
  if (tie) {
    // The dropped digit is exactly 5 followed by nothing: round away from zero.
    digits.pop_back();
    increment_magnitude(digits);
  }
  const bool zero = digits.find_first_not_of("0.") == std::string::npos;
  if (negative && !zero) out.push_back('-');
  out += digits;
}

double ScalarTraits<double>::parse(std::string_view literal) {
  double value = 0.0;
  const char* first = literal.data();
  const char* last = first + literal.size();
  auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("number out of range: '" + std::string(literal) + "'");
  }
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("malformed number: '" + std::string(literal) + "'");
  }
  return value;
}

void FormatSpec::validate() const {
  if (fractional_digits < 1 ||
      fractional_digits > ScalarTraits<Scalar>::max_fractional_digits) {
    throw PreconditionError("fractional digits must be in [1, " +
                            std::to_string(ScalarTraits<Scalar>::max_fractional_digits) +
                            "], got " + std::to_string(fractional_digits));
  }
}

void append_scalar(std::string& out, Scalar x, const FormatSpec& spec) {
  if (!std::isfinite(x)) throw FormatOverflow("cannot format a non-finite scalar");
  if (std::fabs(x) > ScalarTraits<Scalar>::magnitude_guard) {
    throw FormatOverflow("scalar magnitude exceeds 1e308");
  }
  ScalarTraits<Scalar>::append_fixed(out, x, spec.fractional_digits);
}

std::string format_scalar(Scalar x, const FormatSpec& spec) {
  spec.validate();
  std::string out;
  append_scalar(out, x, spec);
  return out;
}

Scalar parse_scalar(std::string_view token) {
  std::size_t pos = 0;
  if (pos < token.size() && token[pos] == '-') ++pos;
  const std::size_t int_begin = pos;
  while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') ++pos;
  const std::size_t int_len = pos - int_begin;
  bool ok = int_len > 0 && !(int_len > 1 && token[int_begin] == '0');
  if (ok) ok = pos < token.size() && token[pos] == '.';
  if (ok) {
    const std::size_t frac_begin = ++pos;
    while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') ++pos;
    ok = pos > frac_begin && pos == token.size();
  }
  if (!ok) throw ParseError("malformed scalar token '" + std::string(token) + "'");
  return ScalarTraits<Scalar>::parse(token);
}

PlainByte round_to_code(Scalar x, Scalar tol) {
  if (!(tol > 0.0 && tol < 0.5)) {
    throw PreconditionError("rounding tolerance must lie in (0, 0.5)");
  }
  if (!std::isfinite(x)) throw RoundingDriftError("decrypted value is not finite");
  const Scalar nearest = std::round(x);
  if (std::fabs(x - nearest) > tol) {
    throw RoundingDriftError("decrypted value " + exact_literal(x) +
                             " is not within tolerance of an integer code");
  }
  if (nearest < 0.0 || nearest > 255.0) {
    throw CodeRangeError("decrypted code " + exact_literal(nearest) +
                         " outside [0, 255]");
  }
  return static_cast<PlainByte>(nearest);
}

Scalar parse_literal(std::string_view literal) {
  if (!literal.empty() && literal.front() == '+') literal.remove_prefix(1);
  const Scalar value = ScalarTraits<Scalar>::parse(literal);
  if (!std::isfinite(value)) throw ParseError("non-finite literal");
  return value;
}

std::string exact_literal(Scalar x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  (void)ec;
  return std::string(buf.data(), end);
}

}  // namespace realcipher
