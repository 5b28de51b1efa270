#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "realcipher/classical.hpp"
#include "realcipher/linear_cipher.hpp"
#include "realcipher/nonlinear_cipher.hpp"
#include "realcipher/scalar.hpp"

namespace realcipher {

using Stage = std::variant<LinearKey, NonlinearKey, VigenereKey, TranspositionSpec>;

/// Default serialization digits for a substitution stage: 6 for the linear
/// cipher, 12 for the nonlinear cipher.
FormatSpec default_format_for(const Stage& substitution);

/// Before the first transposition the serialized text is padded with spaces
/// to a multiple of every transposition's block length (2 for the halving
/// interleave), so the transposition chain preserves length.
///
/// Ordered product cipher. Stage order is checked on construction: exactly
/// one substitution stage, first; then Vigenère stages; then transpositions.
/// The scalar-to-text boundary sits between the last Vigenère stage and the
/// first transposition.
class Pipeline {
 public:
  explicit Pipeline(std::vector<Stage> stages);
  Pipeline(std::vector<Stage> stages, FormatSpec format);

  const std::vector<Stage>& stages() const { return stages_; }
  const FormatSpec& format() const { return format_; }

  /// Worst-case deviation introduced in the decrypted reals by serializing
  /// the scalars with format(); checked below the decrypt tolerance.
  Scalar serialization_loss_bound() const { return loss_bound_; }

 private:
  void validate();

  std::vector<Stage> stages_;
  FormatSpec format_;
  Scalar loss_bound_ = 0.0;
};

/// Tokens joined by the separator, no trailing separator.
std::string serialize_ciphertext(std::span<const Scalar> xs, const FormatSpec& fmt);

/// Splits on the separator and parses every token. Trailing separator and
/// space bytes (transposition padding) are ignored. Empty text gives an empty
/// sequence.
std::vector<Scalar> parse_ciphertext(std::string_view text, const FormatSpec& fmt);

std::string encrypt_pipeline(const Pipeline& p, std::span<const PlainByte> plaintext);

PlainText decrypt_pipeline(const Pipeline& p, std::string_view text);

/// Undoes every stage but stops before rounding the substitution output to
/// character codes.
std::vector<Scalar> decrypt_pipeline_reals(const Pipeline& p, std::string_view text);

}  // namespace realcipher
