#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace realcipher {

// Numeric hooks for a real-number backend. Only binary64 is provided; a
// wider backend plugs in by specializing this template and changing the
// Scalar alias below. Nothing outside scalar.cpp depends on the
// representation beyond ordinary arithmetic and <cmath> functions.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr int max_fractional_digits = 17;
  static constexpr double magnitude_guard = 1e308;

  static void append_fixed(std::string& out, double x, int fractional_digits);
  static double parse(std::string_view literal);
};

using Scalar = double;
using PlainByte = std::uint8_t;
using PlainText = std::vector<PlainByte>;

inline constexpr Scalar kDefaultDecryptTolerance = 0.25;

/// Textual form of ciphertext scalars: fixed decimal with exactly
/// `fractional_digits` digits after the point, tokens joined by `separator`.
struct FormatSpec {
  int fractional_digits = 6;
  char separator = ' ';

  /// Throws PreconditionError unless 1 <= fractional_digits <= backend capacity.
  void validate() const;
};

/// Fixed-decimal rendering, round half away from zero, never exponent
/// notation. Zero renders without a sign ("0.000000", never "-0.000000").
std::string format_scalar(Scalar x, const FormatSpec& spec);

/// Same as format_scalar, appending to `out`.
void append_scalar(std::string& out, Scalar x, const FormatSpec& spec);

/// Inverse of format_scalar. Accepts `-?(0|[1-9][0-9]*)\.[0-9]+` and returns
/// the nearest representable value.
Scalar parse_scalar(std::string_view token);

/// Nearest integer code to `x`, provided it lies within `tol` of x and in
/// [0, 255]. Throws RoundingDriftError / CodeRangeError otherwise.
PlainByte round_to_code(Scalar x, Scalar tol = kDefaultDecryptTolerance);

/// Parses a general decimal literal (the key-file number grammar: optional
/// sign, digits, optional fraction and exponent).
Scalar parse_literal(std::string_view literal);

/// Shortest text that parses back to exactly `x`.
std::string exact_literal(Scalar x);

}  // namespace realcipher
