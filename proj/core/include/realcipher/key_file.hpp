#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "realcipher/pipeline.hpp"

namespace realcipher {

inline constexpr std::string_view kKeyFileMagic = "realcipher-key v1";

// Key file grammar (UTF-8 text, one directive per line):
//
//   realcipher-key v1
//   digits <int>                       optional, serialization digits
//   stage linear
//     row <a_i1> ... <a_in>            n lines, the matrix A
//     inverse_row <m_i1> ... <m_in>    alternatively n lines of A^-1
//     b <b_1> ... <b_n>
//     decrypt_tol <x>                  optional
//   stage nonlinear
//     function polynomial <c0> <c1> ... <cd>     ascending order
//     nodes <x0> ... <x(d-1)>          optional, Newton form
//     function exp2quadratic <alpha> <beta> <gamma>
//     method bisection|secant
//     interval <lo> <hi>
//     tol <x>  max_iter <int>  scan_steps <int>  seeds <x0> <x1>  decrypt_tol <x>
//   stage vigenere
//     keyword <k_0> ... <k_(m-1)>
//   stage transpose
//     mode halving | mode keyed
//     permutation <p_0> ... <p_(m-1)>  keyed mode only
//
// Blank lines and lines starting with '#' are ignored. Numbers are decimal
// literals with optional exponent; the writer emits the shortest form that
// reads back bit-exactly.

Pipeline parse_key_file(std::string_view text);
std::string write_key_file(const Pipeline& pipeline);

Pipeline load_key_file(const std::filesystem::path& path);
void save_key_file(const std::filesystem::path& path, const Pipeline& pipeline);

}  // namespace realcipher
