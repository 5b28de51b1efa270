#include "realcipher/pipeline.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "realcipher/errors.hpp"

namespace realcipher {
namespace {

bool is_substitution(const Stage& s) {
  return std::holds_alternative<LinearKey>(s) || std::holds_alternative<NonlinearKey>(s);
}

void with_stage(std::size_t index, auto&& fn) {
  try {
    fn();
  } catch (Error& e) {
    e.add_context("stage " + std::to_string(index));
    throw;
  }
}

// Index of the first transposition stage (== size when none).
std::size_t text_boundary(const std::vector<Stage>& stages) {
  std::size_t i = 0;
  while (i < stages.size() && !std::holds_alternative<TranspositionSpec>(stages[i])) ++i;
  return i;
}

}  // namespace

FormatSpec default_format_for(const Stage& substitution) {
  FormatSpec spec;
  spec.fractional_digits = std::holds_alternative<NonlinearKey>(substitution) ? 12 : 6;
  return spec;
}

Pipeline::Pipeline(std::vector<Stage> stages) : stages_(std::move(stages)) {
  if (!stages_.empty()) format_ = default_format_for(stages_.front());
  validate();
}

Pipeline::Pipeline(std::vector<Stage> stages, FormatSpec format)
    : stages_(std::move(stages)), format_(format) {
  validate();
}

void Pipeline::validate() {
  if (stages_.empty()) throw PreconditionError("pipeline must contain at least one stage");
  format_.validate();
  if (!is_substitution(stages_.front())) {
    throw PreconditionError("the first stage must be a substitution stage");
  }
  bool seen_transposition = false;
  for (std::size_t i = 1; i < stages_.size(); ++i) {
    if (is_substitution(stages_[i])) {
      throw PreconditionError("stage " + std::to_string(i) + ": only one substitution stage is allowed");
    }
    if (std::holds_alternative<VigenereKey>(stages_[i]) && seen_transposition) {
      throw PreconditionError("stage " + std::to_string(i) +
                              ": Vigenère stages must precede transposition stages");
    }
    if (std::holds_alternative<TranspositionSpec>(stages_[i])) seen_transposition = true;
  }
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    with_stage(i, [&] {
      std::visit(
          [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NonlinearKey> || std::is_same_v<T, VigenereKey>) {
              s.validate();
            } else if constexpr (std::is_same_v<T, TranspositionSpec>) {
              if (const auto* keyed = std::get_if<KeyedBlockPermutation>(&s)) keyed->validate();
            }
          },
          stages_[i]);
    });
  }

  // Serialization loss: half a unit in the last printed digit plus the
  // representation error of the largest scalar that can be printed,
  // propagated through the inverse substitution.
  const Scalar half_unit = 0.5 * std::pow(10.0, -format_.fractional_digits);
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  Scalar keyword_max = 0.0;
  for (const auto& s : stages_) {
    if (const auto* v = std::get_if<VigenereKey>(&s)) {
      for (Scalar k : v->keyword) keyword_max = std::max(keyword_max, std::fabs(k));
    }
  }
  Scalar tolerance = 0.0;
  if (const auto* lin = std::get_if<LinearKey>(&stages_.front())) {
    Scalar b_max = 0.0;
    for (Scalar b : lin->offset()) b_max = std::max(b_max, std::fabs(b));
    const Scalar x_max = norm_inf(lin->inverse()) * (b_max + 255.0) + keyword_max;
    loss_bound_ = norm_inf(lin->matrix()) * (half_unit + 2.0 * eps * x_max);
    tolerance = lin->decrypt_tolerance();
  } else {
    const auto& key = std::get<NonlinearKey>(stages_.front());
    const Scalar x_max = std::max(std::fabs(key.solver.lo), std::fabs(key.solver.hi)) + keyword_max;
    loss_bound_ = slope_bound(key) * (half_unit + 2.0 * eps * x_max);
    tolerance = key.decrypt_tol;
  }
  if (!(loss_bound_ < tolerance)) {
    throw PreconditionError("serialization with " + std::to_string(format_.fractional_digits) +
                            " fractional digits can shift decrypted codes by up to " +
                            exact_literal(loss_bound_) + ", above the decrypt tolerance");
  }
}

std::string serialize_ciphertext(std::span<const Scalar> xs, const FormatSpec& fmt) {
  fmt.validate();
  std::string out;
  out.reserve(xs.size() * static_cast<std::size_t>(fmt.fractional_digits + 8));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out.push_back(fmt.separator);
    try {
      append_scalar(out, xs[i], fmt);
    } catch (Error& e) {
      e.add_context("token " + std::to_string(i));
      throw;
    }
  }
  return out;
}

std::vector<Scalar> parse_ciphertext(std::string_view text, const FormatSpec& fmt) {
  while (!text.empty() && (text.back() == fmt.separator || text.back() == static_cast<char>(kPaddingByte))) {
    text.remove_suffix(1);
  }
  std::vector<Scalar> out;
  if (text.empty()) return out;
  std::size_t index = 0;
  while (true) {
    const std::size_t pos = text.find(fmt.separator);
    const std::string_view token = text.substr(0, pos);
    try {
      out.push_back(parse_scalar(token));
    } catch (Error& e) {
      e.add_context("token " + std::to_string(index));
      throw;
    }
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
    ++index;
  }
  return out;
}

std::string encrypt_pipeline(const Pipeline& p, std::span<const PlainByte> plaintext) {
  const auto& stages = p.stages();
  std::vector<Scalar> scalars;
  with_stage(0, [&] {
    if (const auto* lin = std::get_if<LinearKey>(&stages[0])) {
      scalars = encrypt_linear(*lin, plaintext);
    } else {
      scalars = encrypt_nonlinear(std::get<NonlinearKey>(stages[0]), plaintext);
    }
  });
  const std::size_t boundary = text_boundary(stages);
  for (std::size_t i = 1; i < boundary; ++i) {
    with_stage(i, [&] { scalars = vigenere_encrypt(scalars, std::get<VigenereKey>(stages[i])); });
  }
  std::string text = serialize_ciphertext(scalars, p.format());
  // Pad once for the whole transposition chain so that every stage is a
  // length-preserving bijection and the receiver can undo them exactly.
  std::size_t unit = 1;
  for (std::size_t i = boundary; i < stages.size(); ++i) {
    const auto& spec = std::get<TranspositionSpec>(stages[i]);
    const auto* keyed = std::get_if<KeyedBlockPermutation>(&spec);
    unit = std::lcm(unit, keyed != nullptr ? keyed->block_size() : std::size_t{2});
  }
  if (text.size() % unit != 0) text.append(unit - text.size() % unit, static_cast<char>(kPaddingByte));
  for (std::size_t i = boundary; i < stages.size(); ++i) {
    with_stage(i, [&] { text = apply_transposition(text, std::get<TranspositionSpec>(stages[i])); });
  }
  return text;
}

namespace {

std::vector<Scalar> undo_to_substitution(const Pipeline& p, std::string_view input) {
  const auto& stages = p.stages();
  const std::size_t boundary = text_boundary(stages);
  std::string text(input);
  for (std::size_t i = stages.size(); i-- > boundary;) {
    with_stage(i, [&] { text = invert_transposition(text, std::get<TranspositionSpec>(stages[i])); });
  }
  std::vector<Scalar> scalars;
  with_stage(boundary == 0 ? 0 : boundary - 1, [&] { scalars = parse_ciphertext(text, p.format()); });
  for (std::size_t i = boundary; i-- > 1;) {
    with_stage(i, [&] { scalars = vigenere_decrypt(scalars, std::get<VigenereKey>(stages[i])); });
  }
  return scalars;
}

}  // namespace

PlainText decrypt_pipeline(const Pipeline& p, std::string_view text) {
  const std::vector<Scalar> scalars = undo_to_substitution(p, text);
  const auto& first = p.stages().front();
  PlainText out;
  with_stage(0, [&] {
    if (const auto* lin = std::get_if<LinearKey>(&first)) {
      out = decrypt_linear(*lin, scalars);
    } else {
      out = decrypt_nonlinear(std::get<NonlinearKey>(first), scalars);
    }
  });
  return out;
}

std::vector<Scalar> decrypt_pipeline_reals(const Pipeline& p, std::string_view text) {
  const std::vector<Scalar> scalars = undo_to_substitution(p, text);
  const auto& first = p.stages().front();
  std::vector<Scalar> out;
  with_stage(0, [&] {
    if (const auto* lin = std::get_if<LinearKey>(&first)) {
      out = decrypt_linear_reals(*lin, scalars);
    } else {
      out = decrypt_nonlinear_reals(std::get<NonlinearKey>(first), scalars);
    }
  });
  return out;
}

}  // namespace realcipher
