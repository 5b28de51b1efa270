#include "realcipher/nonlinear_cipher.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <string>
#include <tuple>

#include "realcipher/errors.hpp"

namespace realcipher {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int sign_of(Scalar v) { return (v > 0.0) - (v < 0.0); }

Scalar residual(const KeyFunction& f, PlainByte c, Scalar x) {
  return eval_key_function(f, x) - static_cast<Scalar>(c);
}

}  // namespace

void SolverConfig::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw PreconditionError("solver interval must satisfy lo < hi");
  }
  if (!(tol > 0.0)) throw PreconditionError("solver tolerance must be positive");
  if (max_iter < 1) throw PreconditionError("max_iter must be at least 1");
  if (bracket_scan_steps < 1) throw PreconditionError("bracket scan steps must be at least 1");
  if (seeds && (!std::isfinite(seeds->first) || !std::isfinite(seeds->second) ||
                seeds->first == seeds->second)) {
    throw PreconditionError("secant seeds must be finite and distinct");
  }
}

void NonlinearKey::validate() const {
  std::visit(Overloaded{
                 [](const Polynomial& p) {
                   if (p.coefficients.empty()) throw PreconditionError("polynomial has no coefficients");
                   if (p.coefficients.back() == 0.0) {
                     throw PreconditionError("polynomial leading coefficient must be nonzero");
                   }
                   if (!p.nodes.empty() && p.nodes.size() + 1 != p.coefficients.size()) {
                     throw PreconditionError("Newton form needs exactly degree nodes");
                   }
                   for (Scalar v : p.coefficients) {
                     if (!std::isfinite(v)) throw PreconditionError("polynomial coefficients must be finite");
                   }
                   for (Scalar v : p.nodes) {
                     if (!std::isfinite(v)) throw PreconditionError("polynomial nodes must be finite");
                   }
                 },
                 [](const Exp2Quadratic& e) {
                   if (e.alpha == 0.0) throw PreconditionError("alpha must be nonzero");
                   if (!std::isfinite(e.alpha) || !std::isfinite(e.beta) || !std::isfinite(e.gamma)) {
                     throw PreconditionError("exponent coefficients must be finite");
                   }
                 },
             },
             f);
  solver.validate();
  if (!(decrypt_tol > 0.0 && decrypt_tol < 0.5)) {
    throw PreconditionError("decrypt tolerance must lie in (0, 0.5)");
  }
}

std::vector<PlainByte> default_alphabet() {
  std::vector<PlainByte> out{10, 13};
  for (int c = 32; c <= 126; ++c) out.push_back(static_cast<PlainByte>(c));
  return out;
}

Scalar eval_key_function(const KeyFunction& f, Scalar x) {
  const Scalar y = std::visit(
      Overloaded{
          [x](const Polynomial& p) {
            Scalar acc = 0.0;
            const auto& c = p.coefficients;
            if (p.nodes.empty()) {
              for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
            } else {
              for (std::size_t k = c.size(); k-- > 0;) {
                acc = k == c.size() - 1 ? c[k] : acc * (x - p.nodes[k]) + c[k];
              }
            }
            return acc;
          },
          [x](const Exp2Quadratic& e) { return std::exp2((e.alpha * x + e.beta) * x + e.gamma); },
      },
      f);
  if (!std::isfinite(y)) throw FormatOverflow("key function overflows at x = " + exact_literal(x));
  return y;
}

std::optional<Bracket> find_bracket(const KeyFunction& f, PlainByte c, const SolverConfig& cfg) {
  const Scalar step = (cfg.hi - cfg.lo) / cfg.bracket_scan_steps;
  Scalar x_prev = cfg.lo;
  Scalar g_prev = residual(f, c, x_prev);
  if (g_prev == 0.0) return Bracket{x_prev, x_prev};
  for (int i = 1; i <= cfg.bracket_scan_steps; ++i) {
    const Scalar x = i == cfg.bracket_scan_steps ? cfg.hi : cfg.lo + i * step;
    const Scalar g = residual(f, c, x);
    if (g == 0.0) return Bracket{x, x};
    if (sign_of(g) != sign_of(g_prev)) return Bracket{x_prev, x};
    x_prev = x;
    g_prev = g;
  }
  return std::nullopt;
}

Scalar bisection_solve(const KeyFunction& f, PlainByte c, const SolverConfig& cfg) {
  const auto bracket = find_bracket(f, c, cfg);
  if (!bracket) {
    throw NoRootError("no sign change of f(x) - " + std::to_string(c) + " on the key interval");
  }
  Scalar lo = bracket->lo;
  Scalar hi = bracket->hi;
  if (lo == hi) return lo;
  int lo_sign = sign_of(residual(f, c, lo));
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    const Scalar mid = lo + (hi - lo) / 2;
    const Scalar g = residual(f, c, mid);
    if (std::fabs(g) <= cfg.tol || hi - lo <= cfg.tol || mid == lo || mid == hi) return mid;
    if (sign_of(g) == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("bisection did not converge in " + std::to_string(cfg.max_iter) +
                         " iterations");
}

Scalar secant_solve(const KeyFunction& f, PlainByte c, const SolverConfig& cfg) {
  Scalar x0 = 0.0;
  Scalar x1 = 0.0;
  if (cfg.seeds) {
    std::tie(x0, x1) = *cfg.seeds;
  } else {
    const auto bracket = find_bracket(f, c, cfg);
    if (!bracket) {
      throw NoRootError("no sign change of f(x) - " + std::to_string(c) + " on the key interval");
    }
    if (bracket->lo == bracket->hi) return bracket->lo;
    x0 = bracket->lo;
    x1 = bracket->hi;
  }
  if (x0 == x1) throw PreconditionError("secant seeds must differ");
  Scalar g0 = residual(f, c, x0);
  Scalar g1 = residual(f, c, x1);
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (std::fabs(g1) <= cfg.tol) return x1;
    const Scalar denom = g1 - g0;
    if (std::fabs(denom) < 1e-300) throw ConvergenceError("secant step is flat");
    const Scalar x2 = x1 - g1 * (x1 - x0) / denom;
    if (!std::isfinite(x2)) throw ConvergenceError("secant iteration diverged");
    Scalar g2 = 0.0;
    try {
      g2 = residual(f, c, x2);
    } catch (const FormatOverflow&) {
      throw ConvergenceError("secant iteration diverged");
    }
    if (std::fabs(x2 - x1) <= cfg.tol) return x2;
    x0 = x1;
    g0 = g1;
    x1 = x2;
    g1 = g2;
  }
  throw ConvergenceError("secant did not converge in " + std::to_string(cfg.max_iter) +
                         " iterations");
}

Scalar solve_root(const KeyFunction& f, PlainByte c, const SolverConfig& cfg) {
  return cfg.method == SolverMethod::Bisection ? bisection_solve(f, c, cfg) : secant_solve(f, c, cfg);
}

std::vector<Scalar> encrypt_nonlinear(const NonlinearKey& key, std::span<const PlainByte> plaintext) {
  // Memoized per code: the map is monoalphabetic, so each code is solved once.
  std::array<std::optional<Scalar>, 256> roots{};
  std::vector<Scalar> out(plaintext.size());
  for (std::size_t i = 0; i < plaintext.size(); ++i) {
    auto& slot = roots[plaintext[i]];
    if (!slot) {
      try {
        slot = solve_root(key.f, plaintext[i], key.solver);
      } catch (Error& e) {
        e.add_context("character " + std::to_string(i));
        throw;
      }
    }
    out[i] = *slot;
  }
  return out;
}

std::vector<Scalar> decrypt_nonlinear_reals(const NonlinearKey& key, std::span<const Scalar> roots) {
  std::vector<Scalar> out(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    try {
      out[i] = eval_key_function(key.f, roots[i]);
    } catch (Error& e) {
      e.add_context("character " + std::to_string(i));
      throw;
    }
  }
  return out;
}

PlainText decrypt_nonlinear(const NonlinearKey& key, std::span<const Scalar> roots) {
  PlainText out(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    try {
      out[i] = round_to_code(eval_key_function(key.f, roots[i]), key.decrypt_tol);
    } catch (Error& e) {
      e.add_context("character " + std::to_string(i));
      throw;
    }
  }
  return out;
}

ValidationReport validate_key(const NonlinearKey& key, std::span<const PlainByte> alphabet) {
  ValidationReport report;
  for (PlainByte c : alphabet) {
    bool found = false;
    try {
      found = find_bracket(key.f, c, key.solver).has_value();
    } catch (const Error&) {
    }
    if (!found) report.failing.push_back(c);
  }
  return report;
}

Scalar slope_bound(const NonlinearKey& key) {
  const auto& cfg = key.solver;
  const Scalar step = (cfg.hi - cfg.lo) / cfg.bracket_scan_steps;
  Scalar best = 0.0;
  Scalar y_prev = eval_key_function(key.f, cfg.lo);
  for (int i = 1; i <= cfg.bracket_scan_steps; ++i) {
    const Scalar x = i == cfg.bracket_scan_steps ? cfg.hi : cfg.lo + i * step;
    const Scalar y = eval_key_function(key.f, x);
    best = std::max(best, std::fabs(y - y_prev) / step);
    y_prev = y;
  }
  return 1.1 * best;
}

}  // namespace realcipher
