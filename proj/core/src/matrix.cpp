#include "realcipher/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "realcipher/errors.hpp"

namespace realcipher {
namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.square() || a.rows() == 0) {
    throw PreconditionError(std::string(what) + ": matrix must be square and nonempty");
  }
}

Matrix minor_of(const Matrix& a, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = a.rows();
  Matrix m(n - 1, n - 1);
  for (std::size_t r = 0, mr = 0; r < n; ++r) {
    if (r == skip_row) continue;
    for (std::size_t c = 0, mc = 0; c < n; ++c) {
      if (c == skip_col) continue;
      m(mr, mc++) = a(r, c);
    }
    ++mr;
  }
  return m;
}

Scalar cofactor_determinant(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Scalar det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    const Scalar sign = (c % 2 == 0) ? 1.0 : -1.0;
    det += sign * a(0, c) * cofactor_determinant(minor_of(a, 0, c));
  }
  return det;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<Scalar> multiply(const Matrix& a, std::span<const Scalar> x) {
  if (a.cols() != x.size()) throw PreconditionError("matrix-vector product: shape mismatch");
  std::vector<Scalar> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar sum = 0.0;
    const auto r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) sum += r[j] * x[j];
    y[i] = sum;
  }
  return y;
}

Scalar norm_inf(const Matrix& a) {
  Scalar best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar sum = 0.0;
    for (Scalar v : a.row(i)) sum += std::fabs(v);
    best = std::max(best, sum);
  }
  return best;
}

Scalar max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PreconditionError("matrix difference: shape mismatch");
  }
  Scalar best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) best = std::max(best, std::fabs(a(i, j) - b(i, j)));
  }
  return best;
}

Scalar determinant(const Matrix& a) {
  require_square(a, "determinant");
  Matrix lu = a;
  const std::size_t n = lu.rows();
  Scalar det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(lu(i, k)) > std::fabs(lu(pivot, k))) pivot = i;
    }
    if (lu(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      std::swap_ranges(lu.row(k).begin(), lu.row(k).end(), lu.row(pivot).begin());
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar factor = lu(i, k) / lu(k, k);
      for (std::size_t j = k; j < n; ++j) lu(i, j) -= factor * lu(k, j);
    }
  }
  return det;
}

Matrix invert_matrix(const Matrix& a, Scalar min_det) {
  require_square(a, "invert_matrix");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  Scalar det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(work(i, k)) > std::fabs(work(pivot, k))) pivot = i;
    }
    if (work(pivot, k) == 0.0) throw SingularMatrixError("matrix is singular");
    if (pivot != k) {
      std::swap_ranges(work.row(k).begin(), work.row(k).end(), work.row(pivot).begin());
      std::swap_ranges(inv.row(k).begin(), inv.row(k).end(), inv.row(pivot).begin());
      det = -det;
    }
    const Scalar p = work(k, k);
    det *= p;
    for (std::size_t j = 0; j < n; ++j) {
      work(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Scalar factor = work(i, k);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= factor * work(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  if (!(std::fabs(det) >= min_det)) {
    throw SingularMatrixError("|det(A)| = " + exact_literal(std::fabs(det)) +
                              " is below the invertibility threshold");
  }
  return inv;
}

Matrix invert_matrix_adjugate(const Matrix& a, Scalar min_det) {
  require_square(a, "invert_matrix_adjugate");
  const std::size_t n = a.rows();
  if (n > 4) throw PreconditionError("adjugate inverse is limited to n <= 4");
  const Scalar det = cofactor_determinant(a);
  if (!(std::fabs(det) >= min_det)) {
    throw SingularMatrixError("|det(A)| = " + exact_literal(std::fabs(det)) +
                              " is below the invertibility threshold");
  }
  Matrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = 1.0 / det;
    return inv;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Scalar sign = ((r + c) % 2 == 0) ? 1.0 : -1.0;
      // adj(A)_{cr} = cofactor C_{rc}
      inv(c, r) = sign * cofactor_determinant(minor_of(a, r, c)) / det;
    }
  }
  return inv;
}

Matrix solve_least_squares(const Matrix& m, const Matrix& rhs, Scalar rank_tol) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rhs.rows() != rows) throw PreconditionError("least squares: shape mismatch");
  if (rows < cols) return {};

  Matrix r = m;
  Matrix q_t_b = rhs;
  std::vector<Scalar> v(rows);
  for (std::size_t k = 0; k < cols; ++k) {
    Scalar norm = 0.0;
    for (std::size_t i = k; i < rows; ++i) norm = std::hypot(norm, r(i, k));
    if (norm == 0.0) continue;
    const Scalar alpha = r(k, k) > 0 ? -norm : norm;
    for (std::size_t i = 0; i < rows; ++i) v[i] = i < k ? 0.0 : r(i, k);
    v[k] -= alpha;
    Scalar vnorm2 = 0.0;
    for (std::size_t i = k; i < rows; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    auto reflect = [&](Matrix& target) {
      for (std::size_t j = 0; j < target.cols(); ++j) {
        Scalar dot = 0.0;
        for (std::size_t i = k; i < rows; ++i) dot += v[i] * target(i, j);
        const Scalar s = 2.0 * dot / vnorm2;
        for (std::size_t i = k; i < rows; ++i) target(i, j) -= s * v[i];
      }
    };
    reflect(r);
    reflect(q_t_b);
  }

  Scalar largest = 0.0;
  for (std::size_t k = 0; k < cols; ++k) largest = std::max(largest, std::fabs(r(k, k)));
  for (std::size_t k = 0; k < cols; ++k) {
    if (!(std::fabs(r(k, k)) > rank_tol * largest)) return {};
  }

  Matrix x(cols, rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    for (std::size_t k = cols; k-- > 0;) {
      Scalar sum = q_t_b(k, j);
      for (std::size_t i = k + 1; i < cols; ++i) sum -= r(k, i) * x(i, j);
      x(k, j) = sum / r(k, k);
    }
  }
  return x;
}

}  // namespace realcipher
