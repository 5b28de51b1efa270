#include "realcipher/key_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "realcipher/errors.hpp"

namespace realcipher {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) words.push_back(line.substr(start, pos - start));
  }
  return words;
}

std::vector<Scalar> numbers(std::span<const std::string_view> words) {
  std::vector<Scalar> out;
  out.reserve(words.size());
  for (auto w : words) out.push_back(parse_literal(w));
  return out;
}

long long integer(std::string_view word) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError("expected an integer, got '" + std::string(word) + "'");
  }
  return v;
}

void expect_count(std::span<const std::string_view> args, std::size_t n, std::string_view param) {
  if (args.size() != n) {
    throw ParseError("'" + std::string(param) + "' expects " + std::to_string(n) + " values");
  }
}

struct StageDraft {
  std::string kind;
  std::size_t line = 0;
  std::vector<std::vector<std::string_view>> params;  // name followed by args
  std::vector<std::size_t> lines;
  mutable std::size_t current_line = 0;  // line being interpreted, for diagnostics
};

template <class Fn>
void for_each_param(const StageDraft& d, Fn&& fn) {
  for (std::size_t k = 0; k < d.params.size(); ++k) {
    d.current_line = d.lines[k];
    fn(d.params[k]);
  }
  d.current_line = d.line;
}

Stage build_linear(const StageDraft& d) {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::vector<Scalar>> inverse_rows;
  std::optional<std::vector<Scalar>> b;
  Scalar tol = kDefaultDecryptTolerance;
  for_each_param(d, [&](const std::vector<std::string_view>& p) {
    const std::span<const std::string_view> args(p.data() + 1, p.size() - 1);
    if (p[0] == "row") {
      rows.push_back(numbers(args));
    } else if (p[0] == "inverse_row") {
      inverse_rows.push_back(numbers(args));
    } else if (p[0] == "b") {
      b = numbers(args);
    } else if (p[0] == "decrypt_tol") {
      expect_count(args, 1, p[0]);
      tol = parse_literal(args[0]);
    } else {
      throw ParseError("unknown linear parameter '" + std::string(p[0]) + "'");
    }
  });
  if (!b) throw ParseError("linear stage is missing 'b'");
  if (rows.empty() == inverse_rows.empty()) {
    throw ParseError("linear stage needs either 'row' or 'inverse_row' lines");
  }
  const auto& source = rows.empty() ? inverse_rows : rows;
  const std::size_t n = b->size();
  if (source.size() != n) throw ParseError("linear stage needs exactly n matrix rows");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (source[i].size() != n) throw ParseError("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = source[i][j];
  }
  if (rows.empty()) return LinearKey::from_encryption_matrix(m, *b, tol);
  return LinearKey(std::move(m), *b, tol);
}

Stage build_nonlinear(const StageDraft& d) {
  NonlinearKey key;
  bool has_function = false;
  std::vector<Scalar> nodes;
  for_each_param(d, [&](const std::vector<std::string_view>& p) {
    const std::span<const std::string_view> args(p.data() + 1, p.size() - 1);
    const auto& name = p[0];
    if (name == "function") {
      if (args.empty()) throw ParseError("'function' needs a kind");
      const auto values = numbers(args.subspan(1));
      if (args[0] == "polynomial") {
        key.f = Polynomial{values, {}};
      } else if (args[0] == "exp2quadratic") {
        if (values.size() != 3) throw ParseError("exp2quadratic expects 3 values");
        key.f = Exp2Quadratic{values[0], values[1], values[2]};
      } else {
        throw ParseError("unknown function kind '" + std::string(args[0]) + "'");
      }
      has_function = true;
    } else if (name == "nodes") {
      nodes = numbers(args);
    } else if (name == "method") {
      expect_count(args, 1, name);
      if (args[0] == "bisection") {
        key.solver.method = SolverMethod::Bisection;
      } else if (args[0] == "secant") {
        key.solver.method = SolverMethod::Secant;
      } else {
        throw ParseError("unknown method '" + std::string(args[0]) + "'");
      }
    } else if (name == "interval") {
      expect_count(args, 2, name);
      key.solver.lo = parse_literal(args[0]);
      key.solver.hi = parse_literal(args[1]);
    } else if (name == "tol") {
      expect_count(args, 1, name);
      key.solver.tol = parse_literal(args[0]);
    } else if (name == "max_iter") {
      expect_count(args, 1, name);
      key.solver.max_iter = static_cast<int>(integer(args[0]));
    } else if (name == "scan_steps") {
      expect_count(args, 1, name);
      key.solver.bracket_scan_steps = static_cast<int>(integer(args[0]));
    } else if (name == "seeds") {
      expect_count(args, 2, name);
      key.solver.seeds = std::pair{parse_literal(args[0]), parse_literal(args[1])};
    } else if (name == "decrypt_tol") {
      expect_count(args, 1, name);
      key.decrypt_tol = parse_literal(args[0]);
    } else {
      throw ParseError("unknown nonlinear parameter '" + std::string(name) + "'");
    }
  });
  if (!has_function) throw ParseError("nonlinear stage is missing 'function'");
  if (!nodes.empty()) {
    auto* poly = std::get_if<Polynomial>(&key.f);
    if (poly == nullptr) throw ParseError("'nodes' only applies to polynomial keys");
    poly->nodes = std::move(nodes);
  }
  key.validate();
  return key;
}

Stage build_vigenere(const StageDraft& d) {
  VigenereKey key;
  for_each_param(d, [&](const std::vector<std::string_view>& p) {
    if (p[0] != "keyword") throw ParseError("unknown vigenere parameter '" + std::string(p[0]) + "'");
    key.keyword = numbers(std::span<const std::string_view>(p.data() + 1, p.size() - 1));
  });
  key.validate();
  return key;
}

Stage build_transpose(const StageDraft& d) {
  std::string mode = "halving";
  std::vector<std::size_t> permutation;
  for_each_param(d, [&](const std::vector<std::string_view>& p) {
    const std::span<const std::string_view> args(p.data() + 1, p.size() - 1);
    if (p[0] == "mode") {
      expect_count(args, 1, p[0]);
      mode = std::string(args[0]);
    } else if (p[0] == "permutation") {
      for (auto a : args) {
        const long long v = integer(a);
        if (v < 0) throw ParseError("permutation entries must be nonnegative");
        permutation.push_back(static_cast<std::size_t>(v));
      }
    } else {
      throw ParseError("unknown transpose parameter '" + std::string(p[0]) + "'");
    }
  });
  if (mode == "halving") {
    if (!permutation.empty()) throw ParseError("'permutation' requires mode keyed");
    return TranspositionSpec{HalvingInterleave{}};
  }
  if (mode == "keyed") {
    KeyedBlockPermutation keyed{std::move(permutation)};
    keyed.validate();
    return TranspositionSpec{std::move(keyed)};
  }
  throw ParseError("unknown transposition mode '" + mode + "'");
}

void append_numbers(std::string& out, std::string_view name, std::span<const Scalar> values) {
  out += name;
  for (Scalar v : values) {
    out.push_back(' ');
    out += exact_literal(v);
  }
  out.push_back('\n');
}

}  // namespace

Pipeline parse_key_file(std::string_view text) {
  std::vector<StageDraft> drafts;
  std::optional<int> digits;
  bool seen_magic = false;
  std::size_t line_no = 0;
  try {
    while (!text.empty()) {
      const std::size_t eol = text.find('\n');
      std::string_view line = text.substr(0, eol);
      text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const auto words = split_words(line);
      if (words.empty() || words[0].front() == '#') continue;
      if (!seen_magic) {
        if (line != kKeyFileMagic) throw ParseError("missing 'realcipher-key v1' header");
        seen_magic = true;
        continue;
      }
      if (words[0] == "stage") {
        if (words.size() != 2) throw ParseError("'stage' expects a kind");
        StageDraft draft;
        draft.kind = std::string(words[1]);
        draft.line = line_no;
        draft.current_line = line_no;
        drafts.push_back(std::move(draft));
      } else if (words[0] == "digits" && drafts.empty()) {
        if (words.size() != 2) throw ParseError("'digits' expects one value");
        digits = static_cast<int>(integer(words[1]));
      } else {
        if (drafts.empty()) throw ParseError("parameter outside of a stage block");
        drafts.back().params.push_back(words);
        drafts.back().lines.push_back(line_no);
      }
    }
    if (!seen_magic) throw ParseError("missing 'realcipher-key v1' header");
  } catch (const Error& e) {
    throw KeyFileError("key file line " + std::to_string(std::max<std::size_t>(line_no, 1)) + ": " + e.what());
  }

  std::vector<Stage> stages;
  for (const StageDraft& d : drafts) {
    try {
      if (d.kind == "linear") {
        stages.push_back(build_linear(d));
      } else if (d.kind == "nonlinear") {
        stages.push_back(build_nonlinear(d));
      } else if (d.kind == "vigenere") {
        stages.push_back(build_vigenere(d));
      } else if (d.kind == "transpose") {
        stages.push_back(build_transpose(d));
      } else {
        throw ParseError("unknown stage kind '" + d.kind + "'");
      }
    } catch (const Error& e) {
      throw KeyFileError("key file line " + std::to_string(d.current_line) + ": " + e.what());
    }
  }
  if (stages.empty()) throw KeyFileError("key file declares no stages");
  try {
    if (digits) {
      FormatSpec fmt;
      fmt.fractional_digits = *digits;
      return Pipeline(std::move(stages), fmt);
    }
    return Pipeline(std::move(stages));
  } catch (const Error& e) {
    throw KeyFileError(std::string("key file: ") + e.what());
  }
}

std::string write_key_file(const Pipeline& pipeline) {
  std::string out(kKeyFileMagic);
  out += "\ndigits " + std::to_string(pipeline.format().fractional_digits) + "\n";
  for (const Stage& stage : pipeline.stages()) {
    if (const auto* lin = std::get_if<LinearKey>(&stage)) {
      out += "stage linear\n";
      const Matrix& m = lin->defined_by_inverse() ? lin->inverse() : lin->matrix();
      const std::string_view row_name = lin->defined_by_inverse() ? "inverse_row" : "row";
      for (std::size_t i = 0; i < m.rows(); ++i) append_numbers(out, row_name, m.row(i));
      append_numbers(out, "b", lin->offset());
      out += "decrypt_tol " + exact_literal(lin->decrypt_tolerance()) + "\n";
    } else if (const auto* nl = std::get_if<NonlinearKey>(&stage)) {
      out += "stage nonlinear\n";
      if (const auto* poly = std::get_if<Polynomial>(&nl->f)) {
        append_numbers(out, "function polynomial", poly->coefficients);
        if (!poly->nodes.empty()) append_numbers(out, "nodes", poly->nodes);
      } else {
        const auto& e = std::get<Exp2Quadratic>(nl->f);
        const Scalar values[] = {e.alpha, e.beta, e.gamma};
        append_numbers(out, "function exp2quadratic", values);
      }
      const auto& s = nl->solver;
      out += std::string("method ") + (s.method == SolverMethod::Bisection ? "bisection" : "secant") + "\n";
      out += "interval " + exact_literal(s.lo) + " " + exact_literal(s.hi) + "\n";
      out += "tol " + exact_literal(s.tol) + "\n";
      out += "max_iter " + std::to_string(s.max_iter) + "\n";
      out += "scan_steps " + std::to_string(s.bracket_scan_steps) + "\n";
      if (s.seeds) out += "seeds " + exact_literal(s.seeds->first) + " " + exact_literal(s.seeds->second) + "\n";
      out += "decrypt_tol " + exact_literal(nl->decrypt_tol) + "\n";
    } else if (const auto* vig = std::get_if<VigenereKey>(&stage)) {
      out += "stage vigenere\n";
      append_numbers(out, "keyword", vig->keyword);
    } else {
      const auto& tr = std::get<TranspositionSpec>(stage);
      out += "stage transpose\n";
      if (const auto* keyed = std::get_if<KeyedBlockPermutation>(&tr)) {
        out += "mode keyed\npermutation";
        for (std::size_t p : keyed->permutation) out += " " + std::to_string(p);
        out += "\n";
      } else {
        out += "mode halving\n";
      }
    }
  }
  return out;
}

Pipeline load_key_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KeyFileError("cannot open key file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key_file(buf.str());
}

void save_key_file(const std::filesystem::path& path, const Pipeline& pipeline) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write key file " + path.string());
  out << write_key_file(pipeline);
  if (!out) throw Error("failed writing key file " + path.string());
}

}  // namespace realcipher
