#include "realcipher/classical.hpp"

#include <cmath>

#include "realcipher/errors.hpp"

namespace realcipher {

void VigenereKey::validate() const {
  if (keyword.empty()) throw PreconditionError("Vigenère keyword must not be empty");
  for (Scalar v : keyword) {
    if (!std::isfinite(v)) throw PreconditionError("Vigenère keyword entries must be finite");
  }
}

void KeyedBlockPermutation::validate() const {
  if (permutation.empty()) throw PreconditionError("block permutation must not be empty");
  std::vector<bool> seen(permutation.size(), false);
  for (std::size_t p : permutation) {
    if (p >= permutation.size() || seen[p]) {
      throw PreconditionError("block permutation is not a bijection");
    }
    seen[p] = true;
  }
}

std::string transpose_halving(std::string_view text) {
  std::string padded(text);
  if (padded.size() % 2 != 0) padded.push_back(' ');
  const std::size_t half = padded.size() / 2;
  std::string out(padded.size(), '\0');
  for (std::size_t i = 0; i < half; ++i) {
    out[2 * i] = padded[i];
    out[2 * i + 1] = padded[half + i];
  }
  return out;
}

std::string inverse_transpose_halving(std::string_view text) {
  if (text.size() % 2 != 0) throw ParseError("transposed text must have even length");
  const std::size_t half = text.size() / 2;
  std::string out(text.size(), '\0');
  for (std::size_t i = 0; i < half; ++i) {
    out[i] = text[2 * i];
    out[half + i] = text[2 * i + 1];
  }
  return out;
}

std::string keyed_block_transpose(std::string_view text, const KeyedBlockPermutation& spec) {
  spec.validate();
  const std::size_t m = spec.block_size();
  std::string padded(text);
  while (padded.size() % m != 0) padded.push_back(' ');
  std::string out(padded.size(), '\0');
  for (std::size_t blk = 0; blk < padded.size(); blk += m) {
    for (std::size_t j = 0; j < m; ++j) out[blk + j] = padded[blk + spec.permutation[j]];
  }
  return out;
}

std::string inverse_keyed_block_transpose(std::string_view text, const KeyedBlockPermutation& spec) {
  spec.validate();
  const std::size_t m = spec.block_size();
  if (text.size() % m != 0) throw ParseError("transposed text length is not a multiple of the block size");
  std::string out(text.size(), '\0');
  for (std::size_t blk = 0; blk < text.size(); blk += m) {
    for (std::size_t j = 0; j < m; ++j) out[blk + spec.permutation[j]] = text[blk + j];
  }
  return out;
}

std::string apply_transposition(std::string_view text, const TranspositionSpec& spec) {
  if (const auto* keyed = std::get_if<KeyedBlockPermutation>(&spec)) {
    return keyed_block_transpose(text, *keyed);
  }
  return transpose_halving(text);
}

std::string invert_transposition(std::string_view text, const TranspositionSpec& spec) {
  if (const auto* keyed = std::get_if<KeyedBlockPermutation>(&spec)) {
    return inverse_keyed_block_transpose(text, *keyed);
  }
  return inverse_transpose_halving(text);
}

std::vector<Scalar> vigenere_encrypt(std::span<const Scalar> xs, const VigenereKey& key) {
  key.validate();
  const std::size_t k = key.keyword.size();
  std::vector<Scalar> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = xs[i] + key.keyword[i % k];
  return out;
}

std::vector<Scalar> vigenere_decrypt(std::span<const Scalar> ys, const VigenereKey& key) {
  key.validate();
  const std::size_t k = key.keyword.size();
  std::vector<Scalar> out(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) out[i] = ys[i] - key.keyword[i % k];
  return out;
}

}  // namespace realcipher
