#include "realcipher/linear_cipher.hpp"

#include <cmath>
#include <numeric>
#include <utility>
#include <random>
#include <string>

#include "realcipher/errors.hpp"

namespace realcipher {
namespace {

// Portable uniform draw in [-magnitude, magnitude] from the top 53 bits.
Scalar draw(std::mt19937_64& rng, Scalar magnitude) {
  const Scalar unit = static_cast<Scalar>(rng() >> 11U) * 0x1.0p-53;
  return magnitude * (2.0 * unit - 1.0);
}

std::int64_t mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::int64_t int_determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  std::int64_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    det += ((c % 2 == 0) ? 1 : -1) * a[0][c] * int_determinant(minor);
  }
  return det;
}

std::int64_t mod_inverse(std::int64_t v, std::int64_t m) {
  std::int64_t old_r = mod(v, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw SingularMatrixError("matrix is not invertible modulo " + std::to_string(m));
  return mod(old_s, m);
}

void require_square(const IntMatrix& a) {
  if (a.empty()) throw PreconditionError("Hill matrix must be nonempty");
  for (const auto& row : a) {
    if (row.size() != a.size()) throw PreconditionError("Hill matrix must be square");
  }
}

std::vector<std::int64_t> hill_apply(const IntMatrix& a, std::span<const std::int64_t> codes,
                                     std::int64_t modulus) {
  const std::size_t n = a.size();
  if (codes.size() % n != 0) throw PreconditionError("Hill input length must be a multiple of n");
  std::vector<std::int64_t> out(codes.size());
  for (std::size_t blk = 0; blk < codes.size(); blk += n) {
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < n; ++k) sum = mod(sum + a[i][k] * mod(codes[blk + k], modulus), modulus);
      out[blk + i] = sum;
    }
  }
  return out;
}

}  // namespace

LinearKey::LinearKey(Matrix a, std::vector<Scalar> b, Scalar decrypt_tol)
    : a_(std::move(a)), b_(std::move(b)), decrypt_tol_(decrypt_tol) {
  validate_shapes_of(a_);
  a_inv_ = invert_matrix(a_);
}

LinearKey LinearKey::from_encryption_matrix(const Matrix& a_inverse, std::vector<Scalar> b,
                                            Scalar decrypt_tol) {
  LinearKey key;
  key.a_inv_ = a_inverse;
  key.b_ = std::move(b);
  key.decrypt_tol_ = decrypt_tol;
  key.defined_by_inverse_ = true;
  key.validate_shapes_of(key.a_inv_);
  // The threshold applies to the matrix the key is written with. det(A) is
  // 1/det(M) here and shrinks with the scale of M, not with its conditioning.
  key.a_ = invert_matrix(a_inverse);
  if (!(key.condition_estimate() <= kMaxConditionEstimate)) {
    throw SingularMatrixError("key matrix is too ill-conditioned to decrypt reliably");
  }
  return key;
}

void LinearKey::validate_shapes_of(const Matrix& m) const {
  const std::size_t n = b_.size();
  if (n < 2) throw PreconditionError("block length must be at least 2");
  if (n > kMaxLinearBlock) throw PreconditionError("block length must not exceed 64");
  if (m.rows() != n || m.cols() != n) throw PreconditionError("key matrix must be n x n with n = |b|");
  for (std::size_t i = 0; i < n; ++i) {
    for (Scalar v : m.row(i)) {
      if (!std::isfinite(v)) throw PreconditionError("key matrix entries must be finite");
    }
    if (!std::isfinite(b_[i])) throw PreconditionError("key offset entries must be finite");
  }
  if (!(decrypt_tol_ > 0.0 && decrypt_tol_ < 0.5)) {
    throw PreconditionError("decrypt tolerance must lie in (0, 0.5)");
  }
}

Scalar LinearKey::condition_estimate() const { return norm_inf(a_) * norm_inf(a_inv_); }

LinearKey keygen_linear(std::size_t n, std::uint64_t seed, Scalar magnitude) {
  if (n < 2 || n > kMaxLinearBlock) throw PreconditionError("block length must be in [2, 64]");
  if (!(magnitude > 0.0) || !std::isfinite(magnitude)) {
    throw PreconditionError("key magnitude must be positive and finite");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = draw(rng, magnitude);
    }
    std::vector<Scalar> b(n);
    for (auto& v : b) v = draw(rng, magnitude);
    try {
      LinearKey key(std::move(a), std::move(b));
      if (key.condition_estimate() <= kMaxConditionEstimate) return key;
    } catch (const SingularMatrixError&) {
    }
  }
  throw KeygenError("could not draw a well-conditioned key in 100 attempts");
}

PlainText pad_to_block(std::span<const PlainByte> plaintext, std::size_t n) {
  PlainText padded(plaintext.begin(), plaintext.end());
  while (padded.size() % n != 0) padded.push_back(kPaddingByte);
  return padded;
}

std::vector<Scalar> encrypt_linear(const LinearKey& key, std::span<const PlainByte> plaintext) {
  const std::size_t n = key.block_size();
  const PlainText padded = pad_to_block(plaintext, n);
  const auto& b = key.offset();
  const Matrix& inv = key.inverse();
  std::vector<Scalar> out(padded.size());
  std::vector<Scalar> rhs(n);
  for (std::size_t blk = 0; blk < padded.size(); blk += n) {
    for (std::size_t i = 0; i < n; ++i) rhs[i] = b[i] - static_cast<Scalar>(padded[blk + i]);
    for (std::size_t i = 0; i < n; ++i) {
      Scalar sum = 0.0;
      const auto row = inv.row(i);
      for (std::size_t j = 0; j < n; ++j) sum += row[j] * rhs[j];
      out[blk + i] = sum;
    }
  }
  return out;
}

std::vector<Scalar> decrypt_linear_reals(const LinearKey& key, std::span<const Scalar> ciphertext) {
  const std::size_t n = key.block_size();
  if (ciphertext.size() % n != 0) {
    throw ParseError("ciphertext length " + std::to_string(ciphertext.size()) +
                     " is not a multiple of the block length " + std::to_string(n));
  }
  const auto& b = key.offset();
  const Matrix& a = key.matrix();
  std::vector<Scalar> out(ciphertext.size());
  for (std::size_t blk = 0; blk < ciphertext.size(); blk += n) {
    for (std::size_t i = 0; i < n; ++i) {
      Scalar sum = 0.0;
      const auto row = a.row(i);
      for (std::size_t j = 0; j < n; ++j) sum += row[j] * ciphertext[blk + j];
      out[blk + i] = b[i] - sum;
    }
  }
  return out;
}

PlainText decrypt_linear(const LinearKey& key, std::span<const Scalar> ciphertext) {
  const std::vector<Scalar> reals = decrypt_linear_reals(key, ciphertext);
  PlainText out(reals.size());
  for (std::size_t i = 0; i < reals.size(); ++i) {
    try {
      out[i] = round_to_code(reals[i], key.decrypt_tolerance());
    } catch (Error& e) {
      e.add_context("character " + std::to_string(i));
      throw;
    }
  }
  return out;
}

IntMatrix hill_inverse(const IntMatrix& a, std::int64_t modulus) {
  require_square(a);
  if (modulus < 2) throw PreconditionError("modulus must be at least 2");
  const std::size_t n = a.size();
  const std::int64_t det_inv = mod_inverse(int_determinant(a), modulus);
  IntMatrix inv(n, std::vector<std::int64_t>(n));
  if (n == 1) {
    inv[0][0] = det_inv;
    return inv;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      IntMatrix minor;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != c) row.push_back(a[i][j]);
        }
        minor.push_back(std::move(row));
      }
      const std::int64_t cofactor = (((r + c) % 2 == 0) ? 1 : -1) * int_determinant(minor);
      inv[c][r] = mod(mod(cofactor, modulus) * det_inv, modulus);
    }
  }
  return inv;
}

std::vector<std::int64_t> hill_encrypt(const IntMatrix& a, std::span<const std::int64_t> codes,
                                       std::int64_t modulus) {
  require_square(a);
  if (std::gcd(mod(int_determinant(a), modulus), modulus) != 1) {
    throw SingularMatrixError("matrix is not invertible modulo " + std::to_string(modulus));
  }
  return hill_apply(a, codes, modulus);
}

std::vector<std::int64_t> hill_decrypt(const IntMatrix& a, std::span<const std::int64_t> codes,
                                       std::int64_t modulus) {
  return hill_apply(hill_inverse(a, modulus), codes, modulus);
}

}  // namespace realcipher
