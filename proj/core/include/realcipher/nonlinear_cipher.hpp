#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "realcipher/scalar.hpp"

namespace realcipher {

/// Polynomial key. With `nodes` empty, `coefficients` are monomial
/// coefficients in ascending order (c0 + c1 x + ... + cd x^d). With nodes
/// x0..x(d-1) present, the coefficients are in Newton form:
/// c0 + c1 (x - x0) + c2 (x - x0)(x - x1) + ...
struct Polynomial {
  std::vector<Scalar> coefficients;
  std::vector<Scalar> nodes;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// f(x) = 2^(alpha x^2 + beta x + gamma)
struct Exp2Quadratic {
  Scalar alpha = 1.0;
  Scalar beta = 0.0;
  Scalar gamma = 0.0;
};

using KeyFunction = std::variant<Polynomial, Exp2Quadratic>;

enum class SolverMethod { Bisection, Secant };

struct SolverConfig {
  SolverMethod method = SolverMethod::Bisection;
  Scalar lo = 0.0;
  Scalar hi = 2.0;
  Scalar tol = 1e-13;
  int max_iter = 200;
  int bracket_scan_steps = 4096;
  /// Secant starting points. When absent the secant starts from the
  /// endpoints of the first sign-change bracket.
  std::optional<std::pair<Scalar, Scalar>> seeds;

  void validate() const;
};

struct NonlinearKey {
  KeyFunction f;
  SolverConfig solver;
  Scalar decrypt_tol = kDefaultDecryptTolerance;

  /// Structural checks: nonzero leading coefficient / alpha, solver config,
  /// tolerance in (0, 0.5). Throws PreconditionError.
  void validate() const;
};

struct Bracket {
  Scalar lo;
  Scalar hi;
};

struct ValidationReport {
  std::vector<PlainByte> failing;
  bool ok() const { return failing.empty(); }
};

/// Printable ASCII 32..126 plus LF and CR.
std::vector<PlainByte> default_alphabet();

/// Horner (monomial or Newton form) or 2^(...). Throws FormatOverflow when
/// the result is not finite.
Scalar eval_key_function(const KeyFunction& f, Scalar x);

/// Walks [lo, hi] in bracket_scan_steps equal steps and returns the first
/// subinterval on which f(x) - c changes sign (degenerate when an exact zero
/// is hit on a grid point).
std::optional<Bracket> find_bracket(const KeyFunction& f, PlainByte c, const SolverConfig& cfg);

Scalar bisection_solve(const KeyFunction& f, PlainByte c, const SolverConfig& cfg);
Scalar secant_solve(const KeyFunction& f, PlainByte c, const SolverConfig& cfg);

/// Dispatches on cfg.method.
Scalar solve_root(const KeyFunction& f, PlainByte c, const SolverConfig& cfg);

/// One root per character; equal characters map to bit-identical roots.
std::vector<Scalar> encrypt_nonlinear(const NonlinearKey& key, std::span<const PlainByte> plaintext);

/// f(root) per element, before rounding.
std::vector<Scalar> decrypt_nonlinear_reals(const NonlinearKey& key, std::span<const Scalar> roots);

PlainText decrypt_nonlinear(const NonlinearKey& key, std::span<const Scalar> roots);

ValidationReport validate_key(const NonlinearKey& key, std::span<const PlainByte> alphabet);

/// Upper estimate of |f'| over the key interval (finite differences on the
/// scan grid, widened by 10%). Used to bound serialization loss.
Scalar slope_bound(const NonlinearKey& key);

}  // namespace realcipher
