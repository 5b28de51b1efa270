#pragma once

#include "realcipher/bench.hpp"
#include "realcipher/classical.hpp"
#include "realcipher/cryptanalysis.hpp"
#include "realcipher/errors.hpp"
#include "realcipher/key_file.hpp"
#include "realcipher/linear_cipher.hpp"
#include "realcipher/matrix.hpp"
#include "realcipher/nonlinear_cipher.hpp"
#include "realcipher/pipeline.hpp"
#include "realcipher/presets.hpp"
#include "realcipher/scalar.hpp"
#include "realcipher/security_measure.hpp"
