#pragma once

#include <span>
#include <utility>
#include <vector>

#include "realcipher/linear_cipher.hpp"
#include "realcipher/nonlinear_cipher.hpp"
#include "realcipher/security_measure.hpp"

namespace realcipher {

struct KnownBlock {
  std::vector<PlainByte> plain;
  std::vector<Scalar> cipher;
};

using KnownPairs = std::vector<KnownBlock>;

/// Cuts aligned plaintext/ciphertext streams into n-blocks. The plaintext is
/// space-padded like encrypt_linear does.
KnownPairs make_known_pairs(std::span<const PlainByte> plaintext, std::span<const Scalar> ciphertext,
                            std::size_t n);

/// Known-plaintext recovery of A and b. Every block gives one equation
/// sum_j a_ij x_j - b_i = -c_i per row i, so n + 1 generic blocks determine
/// each row's n + 1 unknowns; extra blocks are used in a least-squares sense.
/// Throws InsufficientDataError for too few blocks or rank-deficient data.
LinearKey kpa_linear(const KnownPairs& pairs, std::size_t n);

using RootCodePair = std::pair<Scalar, PlainByte>;

/// Pairs each root with its plaintext code.
std::vector<RootCodePair> make_root_pairs(std::span<const Scalar> roots, std::span<const PlainByte> plaintext);

/// Newton divided-difference interpolant through the distinct points (the
/// nodes come out sorted ascending). Repeated identical pairs are merged;
/// a repeated root with a different code throws InconsistentDataError.
Polynomial interpolate_key(std::span<const RootCodePair> points);

/// Expands a Newton-form polynomial into ascending monomial coefficients.
std::vector<Scalar> to_monomial(const Polynomial& p);

/// A decrypt-capable key around an interpolated polynomial: bisection on the
/// node span widened by 1% on each side.
NonlinearKey interpolation_key(std::span<const RootCodePair> points);

/// Empirical distribution over bit-identical values, support sorted ascending.
Distribution frequency_histogram(std::span<const Scalar> xs);

/// Empirical distribution of plaintext bytes.
Distribution byte_histogram(std::span<const PlainByte> bytes);

}  // namespace realcipher
