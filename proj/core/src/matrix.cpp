#include "edgecert/matrix.hpp"

#include <string>
#include <utility>

namespace edgecert {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Multiplies the leading n x n block by the lcm of its denominators. The
// scale is positive, so signs of minors are preserved.
IntMatrix integer_scaled(const RatMatrix& b, std::size_t n, mpz_class& scale) {
  scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b(i, j).raw().get_den_mpz_t());
    }
  }
  IntMatrix m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = b(i, j).raw();
      m[i][j] = q.get_num() * (scale / q.get_den());
    }
  }
  return m;
}

// One Bareiss step eliminating below pivot k; `prev` is the previous pivot.
void bareiss_step(IntMatrix& m, std::size_t k, const mpz_class& prev) {
  const std::size_t n = m.size();
  for (std::size_t i = k + 1; i < n; ++i) {
    for (std::size_t j = k + 1; j < n; ++j) {
      m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
      mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
    }
    m[i][k] = 0;
  }
}

RatMatrix leading_block(const RatMatrix& b, std::size_t n) {
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = b(i, j);
  }
  return out;
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix entry count " + std::to_string(entries_.size()) + " != " +
                         std::to_string(rows_) + " x " + std::to_string(cols_));
  }
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged rows in matrix literal");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {r, c, std::move(entries)};
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RatMatrix RatMatrix::minus_scaled_identity(const Rational& s) const {
  if (!is_square()) throw DimensionError("minus_scaled_identity on a non-square matrix");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out(i, i) -= s;
  return out;
}

RatMatrix transpose(const RatMatrix& a) {
  RatMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

std::vector<Rational> matvec(const RatMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw DimensionError("matvec dimension mismatch");
  std::vector<Rational> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
    }
  }
  return y;
}

RatMatrix gram(const RatMatrix& a) {
  const RatMatrix at = transpose(a);
  return a.cols() <= a.rows() ? matmul(at, a) : matmul(a, at);
}

Rational exact_determinant(const RatMatrix& b) {
  if (!b.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = b.rows();
  if (n == 0) return Rational(1);
  mpz_class scale;
  IntMatrix m = integer_scaled(b, n, scale);
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    bareiss_step(m, k, prev);
    prev = m[k][k];
  }
  mpz_class scale_n;
  mpz_pow_ui(scale_n.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpz_class(sign * m[n - 1][n - 1]), scale_n);
}

bool is_positive_definite(const RatMatrix& b) {
  if (!b.is_symmetric()) throw DimensionError("positive-definiteness test needs a symmetric matrix");
  const std::size_t n = b.rows();
  mpz_class scale;
  IntMatrix m = integer_scaled(b, n, scale);
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // Without pivoting, the k-th Bareiss pivot equals the (k+1)-th leading
    // principal minor of the scaled matrix.
    if (m[k][k] <= 0) return false;
    bareiss_step(m, k, prev);
    prev = m[k][k];
  }
  return true;
}

std::vector<Rational> leading_principal_minors(const RatMatrix& b) {
  if (!b.is_square()) throw DimensionError("leading minors of a non-square matrix");
  const std::size_t n = b.rows();
  std::vector<Rational> minors;
  minors.reserve(n);
  mpz_class scale;
  IntMatrix m = integer_scaled(b, n, scale);
  mpz_class prev = 1;
  mpz_class scale_k = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    scale_k *= scale;
    if (m[k][k] == 0) break;
    minors.emplace_back(m[k][k], scale_k);
    bareiss_step(m, k, prev);
    prev = m[k][k];
  }
  // A zero pivot stalls the pivot-free sweep; finish with full determinants.
  for (; k < n; ++k) minors.push_back(exact_determinant(leading_block(b, k + 1)));
  return minors;
}

}  // namespace edgecert
