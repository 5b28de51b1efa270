#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "realcipher/matrix.hpp"
#include "realcipher/scalar.hpp"

namespace realcipher {

inline constexpr std::size_t kMaxLinearBlock = 64;
inline constexpr Scalar kMaxConditionEstimate = 1e8;
inline constexpr PlainByte kPaddingByte = 0x20;

/// Key of the n-block cipher: each plaintext block c is encrypted to the
/// solution x of A x = b - c.
class LinearKey {
 public:
  /// Validates n >= 2, shapes and |det(A)| >= kMinDeterminant, and caches A^-1.
  LinearKey(Matrix a, std::vector<Scalar> b, Scalar decrypt_tol = kDefaultDecryptTolerance);

  /// Builds the key from the encryption-side matrix M = A^-1, so that
  /// x = M (b - c). A is derived by inversion; M is kept verbatim.
  static LinearKey from_encryption_matrix(const Matrix& a_inverse, std::vector<Scalar> b,
                                          Scalar decrypt_tol = kDefaultDecryptTolerance);

  std::size_t block_size() const { return b_.size(); }
  const Matrix& matrix() const { return a_; }
  const Matrix& inverse() const { return a_inv_; }
  const std::vector<Scalar>& offset() const { return b_; }
  Scalar decrypt_tolerance() const { return decrypt_tol_; }
  bool defined_by_inverse() const { return defined_by_inverse_; }

  /// ||A||_inf * ||A^-1||_inf
  Scalar condition_estimate() const;

 private:
  LinearKey() = default;
  void validate_shapes_of(const Matrix& m) const;

  Matrix a_;
  Matrix a_inv_;
  std::vector<Scalar> b_;
  Scalar decrypt_tol_ = kDefaultDecryptTolerance;
  bool defined_by_inverse_ = false;
};

/// Random key with entries uniform in [-magnitude, magnitude], resampled until
/// |det(A)| >= kMinDeterminant and the condition estimate is <= 1e8.
/// Deterministic in `seed`. Throws KeygenError after 100 rejected draws.
LinearKey keygen_linear(std::size_t n, std::uint64_t seed, Scalar magnitude = 10.0);

/// Pads with spaces to a multiple of n and returns the concatenated solution
/// blocks x = A^-1 (b - c).
std::vector<Scalar> encrypt_linear(const LinearKey& key, std::span<const PlainByte> plaintext);

/// Per block c = b - A x, before rounding.
std::vector<Scalar> decrypt_linear_reals(const LinearKey& key, std::span<const Scalar> ciphertext);

/// Per block c = b - A x, each entry rounded with the key's tolerance.
PlainText decrypt_linear(const LinearKey& key, std::span<const Scalar> ciphertext);

/// Pads `plaintext` with spaces to a multiple of `n`.
PlainText pad_to_block(std::span<const PlainByte> plaintext, std::size_t n);

// Classical Hill cipher over Z_m, kept as a comparison oracle for the real
// field cipher. Blocks are column vectors of consecutive codes.

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// A^-1 mod m. Throws SingularMatrixError when gcd(det A, m) != 1.
IntMatrix hill_inverse(const IntMatrix& a, std::int64_t modulus = 26);

/// y = A c mod m per block; plaintext length must be a multiple of n.
std::vector<std::int64_t> hill_encrypt(const IntMatrix& a, std::span<const std::int64_t> codes,
                                       std::int64_t modulus = 26);

/// c = A^-1 y mod m per block.
std::vector<std::int64_t> hill_decrypt(const IntMatrix& a, std::span<const std::int64_t> codes,
                                       std::int64_t modulus = 26);

}  // namespace realcipher
