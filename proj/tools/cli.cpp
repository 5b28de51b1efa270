#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "realcipher/realcipher.hpp"

namespace realcipher::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error("failed writing " + path);
}

PlainText as_bytes(std::string_view s) { return PlainText(s.begin(), s.end()); }
std::string as_string(std::span<const PlainByte> b) { return std::string(b.begin(), b.end()); }

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("REALCIPHER_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError("REALCIPHER_SEED must be a nonnegative integer");
    }
  }
  return seed;
}

void emit_key(const Pipeline& p, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << write_key_file(p);
  } else {
    save_key_file(out_path, p);
  }
}

std::vector<Stage> transposition_stages(const std::string& mode, std::size_t block, std::mt19937_64& rng) {
  if (mode == "none") return {};
  if (mode == "halving") return {TranspositionSpec{HalvingInterleave{}}};
  std::vector<std::size_t> perm(block);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return {TranspositionSpec{KeyedBlockPermutation{std::move(perm)}}};
}

struct KeygenOptions {
  std::uint64_t seed = 1;
  std::string transpose = "halving";
  std::size_t block = 8;
  int digits = 0;
  std::string out;
};

void add_keygen_common(CLI::App* cmd, KeygenOptions& o) {
  cmd->add_option("--seed", o.seed, "RNG seed (REALCIPHER_SEED overrides)");
  cmd->add_option("--transpose", o.transpose, "Transposition stage")
      ->check(CLI::IsMember({"none", "halving", "keyed"}));
  cmd->add_option("--block", o.block, "Block size of the keyed transposition")->check(CLI::Range(1, 1 << 20));
  cmd->add_option("--digits", o.digits, "Serialized fractional digits (default 6 linear, 12 nonlinear)");
  cmd->add_option("--out", o.out, "Key file to write (stdout when omitted)");
}

Pipeline assemble(std::vector<Stage> stages, int digits) {
  if (digits == 0) return Pipeline(std::move(stages));
  FormatSpec fmt;
  fmt.fractional_digits = digits;
  return Pipeline(std::move(stages), fmt);
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      sizes.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw PreconditionError("invalid size '" + item + "'");
    }
  }
  return sizes;
}

std::string fixed(double v, int precision) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << v;
  return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric ciphers over the reals: linear-system and root-finding substitution, "
               "Vigenère and transposition stages, attacks and security measures"};
  app.name("realcipher");
  app.require_subcommand(1);

  // keygen
  auto* keygen = app.add_subcommand("keygen", "Generate a key file");
  keygen->require_subcommand(1);
  KeygenOptions lin_opts;
  std::size_t lin_n = 3;
  double magnitude = 10.0;
  auto* keygen_lin = keygen->add_subcommand("linear", "Linear-system substitution key");
  keygen_lin->add_option("--n", lin_n, "Block length")->check(CLI::Range(2, 64));
  keygen_lin->add_option("--magnitude", magnitude, "Entry range [-m, m]");
  add_keygen_common(keygen_lin, lin_opts);

  KeygenOptions nl_opts;
  nl_opts.seed = 1;
  std::string function = "quintic";
  std::string method;
  std::size_t keyword_length = 10;
  auto* keygen_nl = keygen->add_subcommand("nonlinear", "Root-finding substitution key");
  keygen_nl->add_option("--function", function, "Key function")->check(CLI::IsMember({"quintic", "exp2"}));
  keygen_nl->add_option("--method", method, "Root finder")->check(CLI::IsMember({"bisection", "secant"}));
  keygen_nl->add_option("--keyword-length", keyword_length, "Vigenère keyword length (0 disables)");
  add_keygen_common(keygen_nl, nl_opts);

  // encrypt / decrypt
  std::string key_path;
  std::string in_path;
  std::string out_path;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file");
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a file");
  for (auto* cmd : {encrypt, decrypt}) {
    cmd->add_option("--key", key_path, "Key file")->required();
    cmd->add_option("--in", in_path, "Input file")->required();
    cmd->add_option("--out", out_path, "Output file")->required();
  }

  // attack
  auto* attack = app.add_subcommand("attack", "Known-plaintext attacks");
  attack->require_subcommand(1);
  std::string plain_path;
  std::string cipher_path;
  std::size_t attack_n = 0;
  auto* attack_kpa = attack->add_subcommand("kpa", "Recover a linear key from plaintext/ciphertext");
  auto* attack_interp = attack->add_subcommand("interp", "Interpolate a nonlinear key from plaintext/roots");
  attack_kpa->add_option("--n", attack_n, "Block length")->required()->check(CLI::Range(2, 64));
  for (auto* cmd : {attack_kpa, attack_interp}) {
    cmd->add_option("--plain", plain_path, "Known plaintext file")->required();
    cmd->add_option("--cipher", cipher_path, "Matching substitution-only ciphertext file")->required();
    cmd->add_option("--out", out_path, "Recovered key file (stdout when omitted)");
  }

  // measure
  auto* measure = app.add_subcommand("measure", "Entropy, key equivocation and keyspace report");
  double hk = 0.0;
  std::optional<double> hpn;
  std::optional<double> hcn;
  std::size_t grams = 10;
  double letter_entropy = 1.25;
  std::size_t alphabet = 26;
  unsigned tr_length = 100;
  unsigned kw_length = 20;
  unsigned hill_max = 4;
  std::uint64_t modulus = 26;
  measure->add_option("--hk", hk, "Key entropy H(K) in bits");
  measure->add_option("--hpn", hpn, "H(P^n) in bits (default n * H_L)");
  measure->add_option("--hcn", hcn, "H(C^n) in bits (default n * log2|C|)");
  measure->add_option("--grams", grams, "n-gram length n");
  measure->add_option("--hl", letter_entropy, "Per-letter plaintext entropy H_L");
  measure->add_option("--alphabet", alphabet, "Ciphertext alphabet size |C|")->check(CLI::Range(2, 1 << 30));
  measure->add_option("--length", tr_length, "Ciphertext length for the transposition term (even)");
  measure->add_option("--keyword", kw_length, "Vigenère keyword length")->check(CLI::Range(1, 1 << 20));
  measure->add_option("--hill-max-n", hill_max, "Largest Hill matrix size in the table")->check(CLI::Range(1, 16));
  measure->add_option("--modulus", modulus, "Hill modulus")->check(CLI::Range(2, 1 << 30));

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time encryption/decryption against plaintext size");
  std::string bench_pipeline = "linear";
  std::string bench_key;
  std::string sizes_list;
  int reps = 5;
  std::uint64_t bench_seed = 1;
  std::string csv_path;
  bench_cmd->add_option("--pipeline", bench_pipeline, "Built-in pipeline")
      ->check(CLI::IsMember({"linear", "nonlinear"}));
  bench_cmd->add_option("--key", bench_key, "Benchmark this key file instead");
  bench_cmd->add_option("--sizes", sizes_list, "Comma-separated plaintext sizes");
  bench_cmd->add_option("--reps", reps, "Timed repetitions per size (at least 5)")->check(CLI::Range(5, 1000));
  bench_cmd->add_option("--seed", bench_seed, "Plaintext/key seed (REALCIPHER_SEED overrides)");
  bench_cmd->add_option("--csv", csv_path, "Also write the comma-separated table here");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*keygen_lin) {
      const std::uint64_t seed = effective_seed(lin_opts.seed);
      std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
      std::vector<Stage> stages{keygen_linear(lin_n, seed, magnitude)};
      for (auto& s : transposition_stages(lin_opts.transpose, lin_opts.block, rng)) stages.push_back(std::move(s));
      emit_key(assemble(std::move(stages), lin_opts.digits), lin_opts.out, out);
    } else if (*keygen_nl) {
      const std::uint64_t seed = effective_seed(nl_opts.seed);
      std::mt19937_64 rng(seed);
      NonlinearKey key = function == "exp2" ? presets::exp2_key() : presets::quintic_key();
      if (method == "bisection") key.solver.method = SolverMethod::Bisection;
      if (method == "secant") key.solver.method = SolverMethod::Secant;
      if (const auto report = validate_key(key, default_alphabet()); !report.ok()) {
        throw KeygenError("key function has no root on its interval for " +
                          std::to_string(report.failing.size()) + " alphabet codes");
      }
      std::vector<Stage> stages{std::move(key)};
      if (keyword_length > 0) {
        // Eleven-decimal keyword digits in [0, 10).
        VigenereKey kw;
        for (std::size_t i = 0; i < keyword_length; ++i) {
          kw.keyword.push_back(static_cast<Scalar>(rng() % 1'000'000'000'000ULL) * 1e-11);
        }
        stages.emplace_back(std::move(kw));
      }
      for (auto& s : transposition_stages(nl_opts.transpose, nl_opts.block, rng)) stages.push_back(std::move(s));
      emit_key(assemble(std::move(stages), nl_opts.digits), nl_opts.out, out);
    } else if (*encrypt) {
      const Pipeline p = load_key_file(key_path);
      write_file(out_path, encrypt_pipeline(p, as_bytes(read_file(in_path))));
    } else if (*decrypt) {
      const Pipeline p = load_key_file(key_path);
      write_file(out_path, as_string(decrypt_pipeline(p, read_file(in_path))));
    } else if (*attack_kpa) {
      const PlainText plain = as_bytes(read_file(plain_path));
      const auto cipher = parse_ciphertext(read_file(cipher_path), FormatSpec{});
      const LinearKey key = kpa_linear(make_known_pairs(plain, cipher, attack_n), attack_n);
      emit_key(Pipeline({key}), out_path, out);
    } else if (*attack_interp) {
      PlainText plain = as_bytes(read_file(plain_path));
      const auto roots = parse_ciphertext(read_file(cipher_path), FormatSpec{});
      if (plain.size() > roots.size()) plain.resize(roots.size());
      const auto pairs = make_root_pairs(roots, plain);
      emit_key(Pipeline({interpolation_key(pairs)}), out_path, out);
    } else if (*measure) {
      const double hpn_v = hpn.value_or(static_cast<double>(grams) * letter_entropy);
      const double hcn_v = hcn.value_or(static_cast<double>(grams) * std::log2(static_cast<double>(alphabet)));
      const auto report = key_equivocation(hk, hpn_v, hcn_v, LanguageModel{grams, letter_entropy, alphabet});
      out << "Key equivocation (bits)\n"
          << "  H(K)            " << std::setw(12) << fixed(report.hk, 4) << "\n"
          << "  H(P^n)          " << std::setw(12) << fixed(report.hpn, 4) << "\n"
          << "  H(C^n)          " << std::setw(12) << fixed(report.hcn, 4) << "\n"
          << "  H(K|C^n)        " << std::setw(12) << fixed(report.equivocation, 4) << "\n"
          << "  lower bound     " << std::setw(12) << fixed(report.lower_bound, 4) << "\n\n";
      out << "Hill keyspace |GL(n, Z_" << modulus << ")|\n"
          << "   n  " << std::setw(12) << "log2" << "  count\n";
      for (unsigned n = 1; n <= hill_max; ++n) {
        out << std::setw(4) << n << "  " << std::setw(12) << fixed(log2_count(hill_keyspace(n, modulus)), 4)
            << "  " << hill_keyspace_expansion(n, modulus) << "\n";
      }
      out << "\nGained uncertainty (bits)\n"
          << "  transposition, n = " << tr_length << "  exact " << fixed(transposition_uncertainty(tr_length, true), 4)
          << "  Stirling " << fixed(transposition_uncertainty(tr_length, false), 4) << "\n"
          << "  vigenere, k = " << kw_length << "        " << fixed(vigenere_uncertainty(kw_length), 4) << "\n"
          << "  product                " << fixed(product_gained_uncertainty(tr_length, kw_length), 4) << "\n";
    } else if (*bench_cmd) {
      const std::uint64_t seed = effective_seed(bench_seed);
      const std::vector<std::size_t> sizes = sizes_list.empty() ? default_bench_sizes() : parse_sizes(sizes_list);
      const Pipeline p = !bench_key.empty()            ? load_key_file(bench_key)
                         : bench_pipeline == "linear" ? presets::linear_product(keygen_linear(3, seed))
                                                      : presets::nonlinear_product(presets::quintic_key(),
                                                                                   presets::demo_keyword());
      const BenchResult result = bench(p, sizes, seed, reps);
      out << format_bench_table(result) << "\n" << format_bench_csv(result);
      if (!csv_path.empty()) write_file(csv_path, format_bench_csv(result));
    }
  } catch (const std::exception& e) {
    err << "realcipher: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace realcipher::cli
