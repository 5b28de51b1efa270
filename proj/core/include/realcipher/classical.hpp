#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "realcipher/scalar.hpp"

namespace realcipher {

/// Real-valued Vigenère keyword; entries are reused cyclically.
struct VigenereKey {
  std::vector<Scalar> keyword;

  /// Throws PreconditionError when empty or non-finite.
  void validate() const;
};

struct HalvingInterleave {};

/// Each block of m bytes is rearranged so that out[j] = in[permutation[j]].
struct KeyedBlockPermutation {
  std::vector<std::size_t> permutation;

  std::size_t block_size() const { return permutation.size(); }
  /// Throws PreconditionError unless permutation is a bijection on [0, m).
  void validate() const;
};

using TranspositionSpec = std::variant<HalvingInterleave, KeyedBlockPermutation>;

/// Riffle of the two halves: H1[0] H2[0] H1[1] H2[1] ... An odd-length input
/// first gets one trailing space.
std::string transpose_halving(std::string_view text);

/// Even-indexed bytes followed by odd-indexed bytes. Throws ParseError on odd
/// length.
std::string inverse_transpose_halving(std::string_view text);

/// Pads with spaces to a multiple of m, then permutes every block.
std::string keyed_block_transpose(std::string_view text, const KeyedBlockPermutation& spec);

/// Inverse of keyed_block_transpose. Throws ParseError unless the length is a
/// multiple of m.
std::string inverse_keyed_block_transpose(std::string_view text, const KeyedBlockPermutation& spec);

std::string apply_transposition(std::string_view text, const TranspositionSpec& spec);
std::string invert_transposition(std::string_view text, const TranspositionSpec& spec);

/// y_i = x_i + keyword[i mod k]
std::vector<Scalar> vigenere_encrypt(std::span<const Scalar> xs, const VigenereKey& key);

/// x_i = y_i - keyword[i mod k]
std::vector<Scalar> vigenere_decrypt(std::span<const Scalar> ys, const VigenereKey& key);

}  // namespace realcipher
