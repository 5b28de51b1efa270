#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "realcipher/scalar.hpp"

namespace realcipher {

/// Exact unbounded count (keyspace sizes, factorials).
using BigCount = boost::multiprecision::cpp_int;

/// Probability mass function over scalar values.
struct Distribution {
  std::vector<Scalar> support;
  std::vector<Scalar> probs;

  /// Throws PreconditionError unless sizes match, probs >= 0 and sum to 1 +- 1e-12.
  void validate() const;
};

Distribution uniform_distribution(std::size_t n);

/// Shannon entropy in bits, with 0 log 0 = 0.
double entropy(const Distribution& d);

/// All quantities in bits.
struct EquivocationReport {
  double hk = 0;
  double hpn = 0;
  double hcn = 0;
  double equivocation = 0;  // H(K) + (H(P^n) - H(C^n))
  double lower_bound = 0;   // H(K) + n H_L - n log2|C|, or `equivocation` when n/H_L/|C| are unknown
};

struct LanguageModel {
  std::size_t gram_length = 1;
  double letter_entropy = 1.25;  // English
  std::size_t cipher_alphabet = 26;
};

EquivocationReport key_equivocation(double hk, double hpn, double hcn,
                                    std::optional<LanguageModel> language = std::nullopt);

/// H(K) + n H_L - n log2|C|
double equivocation_lower_bound(double hk, std::size_t n, double letter_entropy = 1.25,
                                std::size_t cipher_alphabet = 26);

/// |GL(n, Z_m)|: number of n x n matrices invertible modulo m.
BigCount hill_keyspace(unsigned n, std::uint64_t m);

/// Human-readable product form of hill_keyspace, e.g.
/// "26^4 (1-1/2)(1-1/2^2)(1-1/13)(1-1/13^2) = 157248".
std::string hill_keyspace_expansion(unsigned n, std::uint64_t m);

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m);

BigCount factorial(unsigned n);

/// log2 of an exact count, accurate to double precision for any size.
double log2_count(const BigCount& value);

/// log2((n/2)!) exactly, or the Stirling form (n/2) log2(n/(2e)) + log2 sqrt(pi n).
double transposition_uncertainty(unsigned n, bool exact = true);

/// k log2 10
double vigenere_uncertainty(unsigned k);

/// transposition_uncertainty(n, exact) + vigenere_uncertainty(k)
double product_gained_uncertainty(unsigned n, unsigned k);

}  // namespace realcipher
