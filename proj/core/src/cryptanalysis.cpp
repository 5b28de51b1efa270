#include "realcipher/cryptanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "realcipher/errors.hpp"
#include "realcipher/matrix.hpp"

namespace realcipher {

KnownPairs make_known_pairs(std::span<const PlainByte> plaintext, std::span<const Scalar> ciphertext,
                            std::size_t n) {
  if (n < 2) throw PreconditionError("block length must be at least 2");
  const PlainText padded = pad_to_block(plaintext, n);
  if (ciphertext.size() != padded.size()) {
    throw PreconditionError("plaintext (" + std::to_string(padded.size()) + " padded) and ciphertext (" +
                            std::to_string(ciphertext.size()) + ") lengths differ");
  }
  KnownPairs pairs;
  for (std::size_t blk = 0; blk < padded.size(); blk += n) {
    pairs.push_back({{padded.begin() + blk, padded.begin() + blk + n},
                     {ciphertext.begin() + blk, ciphertext.begin() + blk + n}});
  }
  return pairs;
}

LinearKey kpa_linear(const KnownPairs& pairs, std::size_t n) {
  if (n < 2) throw PreconditionError("block length must be at least 2");
  for (const auto& blk : pairs) {
    if (blk.plain.size() != n || blk.cipher.size() != n) {
      throw PreconditionError("known block does not have length n");
    }
  }
  if (pairs.size() < n + 1) {
    throw InsufficientDataError("need at least " + std::to_string(n + 1) + " known blocks, got " +
                                std::to_string(pairs.size()));
  }
  // Unknowns per row i: (a_i1, ..., a_in, b_i); all rows share the design matrix.
  const std::size_t m = pairs.size();
  Matrix design(m, n + 1);
  Matrix rhs(m, n);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < n; ++j) design(k, j) = pairs[k].cipher[j];
    design(k, n) = -1.0;
    for (std::size_t i = 0; i < n; ++i) rhs(k, i) = -static_cast<Scalar>(pairs[k].plain[i]);
  }
  const Matrix solution = solve_least_squares(design, rhs);
  if (solution.rows() == 0) throw InsufficientDataError("known blocks do not determine the key (rank deficient)");
  Matrix a(n, n);
  std::vector<Scalar> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = solution(j, i);
    b[i] = solution(n, i);
  }
  return LinearKey(std::move(a), std::move(b));
}

std::vector<RootCodePair> make_root_pairs(std::span<const Scalar> roots, std::span<const PlainByte> plaintext) {
  if (roots.size() != plaintext.size()) throw PreconditionError("root and plaintext lengths differ");
  std::vector<RootCodePair> out(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) out[i] = {roots[i], plaintext[i]};
  return out;
}

Polynomial interpolate_key(std::span<const RootCodePair> points) {
  std::vector<RootCodePair> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Scalar> xs;
  std::vector<Scalar> dd;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i].first == sorted[i - 1].first) {
      if (sorted[i].second != sorted[i - 1].second) {
        throw InconsistentDataError("root " + exact_literal(sorted[i].first) + " maps to codes " +
                                    std::to_string(sorted[i - 1].second) + " and " +
                                    std::to_string(sorted[i].second));
      }
      continue;
    }
    xs.push_back(sorted[i].first);
    dd.push_back(static_cast<Scalar>(sorted[i].second));
  }
  if (xs.empty()) throw InsufficientDataError("interpolation needs at least one point");

  // In-place divided differences: dd[k] becomes f[x0, ..., xk].
  const std::size_t count = xs.size();
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  while (dd.size() > 1 && dd.back() == 0.0) dd.pop_back();
  xs.resize(dd.size() - 1);
  return Polynomial{std::move(dd), std::move(xs)};
}

std::vector<Scalar> to_monomial(const Polynomial& p) {
  if (p.nodes.empty()) return p.coefficients;
  // Nested form: acc = c_k + (x - x_k) acc, evaluated on coefficient vectors.
  const auto& c = p.coefficients;
  std::vector<Scalar> acc{c.back()};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    std::vector<Scalar> next(acc.size() + 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= p.nodes[k] * acc[i];
    }
    next[0] += c[k];
    acc = std::move(next);
  }
  return acc;
}

NonlinearKey interpolation_key(std::span<const RootCodePair> points) {
  NonlinearKey key;
  key.f = interpolate_key(points);
  Scalar lo = points.front().first;
  Scalar hi = lo;
  for (const auto& [x, c] : points) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const Scalar margin = hi > lo ? 0.01 * (hi - lo) : 1.0;
  key.solver.method = SolverMethod::Bisection;
  key.solver.lo = lo - margin;
  key.solver.hi = hi + margin;
  key.validate();
  return key;
}

Distribution frequency_histogram(std::span<const Scalar> xs) {
  // Bit-identical grouping: +0.0 and -0.0 are kept apart.
  std::map<std::uint64_t, std::size_t> by_bits;
  for (Scalar x : xs) ++by_bits[std::bit_cast<std::uint64_t>(x)];
  std::vector<std::pair<Scalar, std::size_t>> entries;
  for (const auto& [bits, count] : by_bits) entries.emplace_back(std::bit_cast<Scalar>(bits), count);
  std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) {
    return l.first < r.first || (l.first == r.first && std::signbit(l.first) && !std::signbit(r.first));
  });
  Distribution d;
  for (const auto& [value, count] : entries) {
    d.support.push_back(value);
    d.probs.push_back(static_cast<Scalar>(count) / static_cast<Scalar>(xs.size()));
  }
  return d;
}

Distribution byte_histogram(std::span<const PlainByte> bytes) {
  std::vector<Scalar> values(bytes.begin(), bytes.end());
  return frequency_histogram(values);
}

}  // namespace realcipher
