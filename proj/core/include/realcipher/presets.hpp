#pragma once

#include "realcipher/classical.hpp"
#include "realcipher/linear_cipher.hpp"
#include "realcipher/nonlinear_cipher.hpp"
#include "realcipher/pipeline.hpp"

// Reference keys used by the demonstration fixtures and the CLI presets.
namespace realcipher::presets {

/// The 10x10 demonstration key. Its published matrix is the encryption-side
/// matrix, x = M (b - c), so the key is built from A = M^-1.
Matrix demo_encryption_matrix();
std::vector<Scalar> demo_offset();
LinearKey demo_linear_key();

/// x^5 + 7.34x^4 + 22.03x^3 + 46.012x^2 + 12.25x - 1 on [0, 2], bisection.
NonlinearKey quintic_key();

/// 2^(x^2 - x/2) on [0, 4], secant seeded at (2, 3).
NonlinearKey exp2_key();

/// Ten-entry real keyword of the three-stage demonstration cipher.
VigenereKey demo_keyword();

/// Linear substitution followed by halving transposition.
Pipeline linear_product(LinearKey key);

/// Nonlinear substitution, Vigenère, halving transposition.
Pipeline nonlinear_product(NonlinearKey key, VigenereKey keyword);

}  // namespace realcipher::presets
