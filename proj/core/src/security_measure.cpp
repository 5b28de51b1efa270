#include "realcipher/security_measure.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "realcipher/errors.hpp"

namespace realcipher {

void Distribution::validate() const {
  if (support.size() != probs.size()) throw PreconditionError("distribution support/probability size mismatch");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw PreconditionError("probabilities must be nonnegative");
    sum += p;
  }
  if (!probs.empty() && std::fabs(sum - 1.0) > 1e-12) {
    throw PreconditionError("probabilities must sum to 1");
  }
}

Distribution uniform_distribution(std::size_t n) {
  if (n == 0) throw PreconditionError("uniform distribution needs at least one outcome");
  Distribution d;
  d.support.resize(n);
  d.probs.assign(n, 1.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) d.support[i] = static_cast<Scalar>(i);
  return d;
}

double entropy(const Distribution& d) {
  d.validate();
  // Kahan-compensated so that uniform distributions hit log2 n to ~1e-15.
  double sum = 0.0;
  double carry = 0.0;
  for (double p : d.probs) {
    if (p == 0.0) continue;
    const double term = -p * std::log2(p) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum;
}

double equivocation_lower_bound(double hk, std::size_t n, double letter_entropy,
                                std::size_t cipher_alphabet) {
  if (cipher_alphabet < 2) throw PreconditionError("cipher alphabet must have at least 2 symbols");
  const double grams = static_cast<double>(n);
  return hk + grams * letter_entropy - grams * std::log2(static_cast<double>(cipher_alphabet));
}

EquivocationReport key_equivocation(double hk, double hpn, double hcn,
                                    std::optional<LanguageModel> language) {
  if (hk < 0 || hpn < 0 || hcn < 0) throw PreconditionError("entropies must be nonnegative");
  EquivocationReport r;
  r.hk = hk;
  r.hpn = hpn;
  r.hcn = hcn;
  r.equivocation = hk + (hpn - hcn);  // exactly hk when hpn == hcn
  r.lower_bound = language ? equivocation_lower_bound(hk, language->gram_length, language->letter_entropy,
                                                      language->cipher_alphabet)
                           : r.equivocation;
  return r;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k > 0) out.emplace_back(p, k);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

BigCount hill_keyspace(unsigned n, std::uint64_t m) {
  if (n < 1) throw PreconditionError("matrix size must be at least 1");
  if (m < 2) throw PreconditionError("modulus must be at least 2");
  BigCount total = 1;
  for (const auto& [p, k] : factorize(m)) {
    const BigCount prime(p);
    const BigCount pn = boost::multiprecision::pow(prime, n);
    BigCount term = boost::multiprecision::pow(prime, (k - 1) * n * n);
    BigCount pj = 1;
    for (unsigned j = 0; j < n; ++j) {
      term *= pn - pj;
      pj *= prime;
    }
    total *= term;
  }
  return total;
}

std::string hill_keyspace_expansion(unsigned n, std::uint64_t m) {
  std::ostringstream out;
  out << m << "^" << n * n << " ";
  for (const auto& [p, k] : factorize(m)) {
    for (unsigned j = 1; j <= n; ++j) {
      out << "(1-1/" << p;
      if (j > 1) out << "^" << j;
      out << ")";
    }
  }
  out << " = " << hill_keyspace(n, m);
  return out.str();
}

BigCount factorial(unsigned n) {
  BigCount out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

double log2_count(const BigCount& value) {
  if (value <= 0) throw PreconditionError("log2 of a non-positive count");
  if (boost::multiprecision::msb(value) < 1000) return std::log2(value.convert_to<double>());
  // Leading 17 decimal digits carry full double precision.
  const std::string digits = value.str();
  const std::size_t kept = 17;
  const double leading = std::stod(digits.substr(0, kept));
  return std::log2(leading) + static_cast<double>(digits.size() - kept) * std::log2(10.0);
}

double transposition_uncertainty(unsigned n, bool exact) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("transposition length must be even and at least 2");
  if (exact) return log2_count(factorial(n / 2));
  const double half = n / 2.0;
  return half * std::log2(half / std::numbers::e) + std::log2(std::sqrt(std::numbers::pi * n));
}

double vigenere_uncertainty(unsigned k) {
  if (k < 1) throw PreconditionError("keyword length must be at least 1");
  return k * std::log2(10.0);
}

double product_gained_uncertainty(unsigned n, unsigned k) {
  return transposition_uncertainty(n, true) + vigenere_uncertainty(k);
}

}  // namespace realcipher
