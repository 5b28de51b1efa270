#include "realcipher/presets.hpp"

namespace realcipher::presets {

Matrix demo_encryption_matrix() {
  return Matrix{
      {1, -1, -5, 0.5, -20, 0, 0.4, 10, 0.25, 86},
      {3, -1, 0, 2, -3, -12, 52, 1, 0, -0.1},
      {0, 23, 9, 9, 3, 34, -14, 7, 9, -8},
      {1, -9, 67, -2, -5, 8, 20, 2, 0.1, 45},
      {-2, 23, 0, 9, 0, 34, 0.12, 4, 3, -4},
      {0.4, 11, 1, 0, 1, 0, 0.15, -0.8, 89, -1},
      {20, 0.2, -15, 23, -2, 1, -10, 9, 23, 0.45},
      {0.5, -3, 0.1, -30, -0.8, -3, -12, 12, -11, 0.30},
      {-1, -2, 2, 21, 9, -0.5, 35, -3, -0.1, -1},
      {3, 0, -1, -0.1, 11, 0, -2, 7, 9, 0.8},
  };
}

std::vector<Scalar> demo_offset() { return {-10, 2, 27, -1, 90, 0.2, -4, 12, 30, -0.5}; }

LinearKey demo_linear_key() {
  return LinearKey::from_encryption_matrix(demo_encryption_matrix(), demo_offset());
}

NonlinearKey quintic_key() {
  NonlinearKey key;
  key.f = Polynomial{{-1.0, 12.25, 46.012, 22.03, 7.34, 1.0}, {}};
  key.solver.method = SolverMethod::Bisection;
  key.solver.lo = 0.0;
  key.solver.hi = 2.0;
  return key;
}

NonlinearKey exp2_key() {
  NonlinearKey key;
  key.f = Exp2Quadratic{1.0, -0.5, 0.0};
  key.solver.method = SolverMethod::Secant;
  key.solver.lo = 0.0;
  key.solver.hi = 4.0;
  key.solver.seeds = std::pair{2.0, 3.0};
  return key;
}

VigenereKey demo_keyword() {
  return VigenereKey{{8.27409124359, 3.44876404589, 2.84907100186, 1.27800971542, 4.90898111008,
                      5.46406511234, 0.21409875231, 7.19061419871, 2.38408754321, 3.12908182363}};
}

Pipeline linear_product(LinearKey key) {
  return Pipeline({std::move(key), TranspositionSpec{HalvingInterleave{}}});
}

Pipeline nonlinear_product(NonlinearKey key, VigenereKey keyword) {
  return Pipeline({std::move(key), std::move(keyword), TranspositionSpec{HalvingInterleave{}}});
}

}  // namespace realcipher::presets
