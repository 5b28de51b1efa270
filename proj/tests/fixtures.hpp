#pragma once

// Published "We are the champs" example: plaintext codes and the printed
// figure listings used as reference data.

#include <array>
#include <string_view>

#include "realcipher/scalar.hpp"

namespace fixtures {

inline constexpr std::array<realcipher::PlainByte, 20> kPlainCodes{
    87, 101, 32, 97, 114, 101, 32, 116, 104, 101, 32, 99, 104, 97, 109, 112, 115, 13, 10, 13};

// Linear-stage ciphertext (10x10 key).
inline constexpr std::array<double, 20> kLinearCipher{
    -9343.900391, -1072.250000, -6781.200195, -5534.299805, -6628.520020, -7563.500000, -6515.274414,
    3477.149902,  -2777.700195, -1943.399902, -442.599976,  -5014.049805, -5717.200195, -7918.899902,
    -6734.479980, 596.650024,   -397.275085,  4744.850098,  -6241.600098, 152.000000};

// Reals recovered by re-substituting the linear ciphertext, before rounding.
inline constexpr std::array<double, 20> kLinearDecryptedReals{
    87.000114,  101.000092, 32.000019,  97.000038,  113.999611, 100.999565, 31.999895,
    116.000237, 104.000084, 100.999886, 32.000282,  99.000137,  103.999985, 97.000183,
    108.999832, 111.999611, 114.999886, 13.000096,  10.000035,  12.999951};

// Bisection roots of the quintic key.
inline constexpr std::array<double, 20> kRoots{
    0.996905152715, 1.062095760863, 0.632444388903, 1.044151171664, 1.117163734307,
    1.062095760863, 0.632444388903, 1.125235020154, 1.075229083508, 1.062095760863,
    0.632444388903, 1.053187075449, 1.075229083508, 1.044151171664, 1.096536606346,
    1.108991331275, 1.121211836726, 0.402103486558, 0.350298562407, 0.402103486558};

inline constexpr std::string_view kRootsText =
    "0.996905152715 1.062095760863 0.632444388903 1.044151171664 1.117163734307 "
    "1.062095760863 0.632444388903 1.125235020154 1.075229083508 1.062095760863 "
    "0.632444388903 1.053187075449 1.075229083508 1.044151171664 1.096536606346 "
    "1.108991331275 1.121211836726 0.402103486558 0.350298562407 0.402103486558";

inline constexpr std::array<double, 10> kKeyword{8.27409124359, 3.44876404589, 2.84907100186, 1.27800971542,
                                                 4.90898111008, 5.46406511234, 0.21409875231, 7.19061419871,
                                                 2.38408754321, 3.12908182363};

// Roots after the Vigenère stage.
inline constexpr std::array<double, 20> kVigenereCipher{
    9.270995914936, 4.510859847069, 3.481515407562, 2.322160959244, 6.026145100594,
    6.526160836220, 0.846543133259, 8.315849184990, 3.459316611290, 4.191177487373,
    8.906535148621, 4.501951217651, 3.924300074577, 2.322160959244, 6.005517959595,
    6.573056459427, 1.335310637951, 7.592717707157, 2.734386116266, 3.531185209751};

// Secant roots of 2^(x^2 - x/2) = c for "epic"; the first is printed with a
// spurious minus sign in the source and is stored positive here.
inline constexpr std::array<double, 4> kEpicRoots{2.842433505, 2.871040808, 2.853218300, 2.836862311};

inline constexpr std::array<realcipher::PlainByte, 4> kEpicCodes{101, 112, 105, 99};

}  // namespace fixtures
