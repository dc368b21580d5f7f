#ifndef EDGECERT_MATRIX_HPP_
#define EDGECERT_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "edgecert/rational.hpp"

namespace edgecert {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-list construction; all rows must have equal length.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> entries() const { return entries_; }

  /// Copies of the matrix minus s * I. Requires a square matrix.
  RatMatrix minus_scaled_identity(const Rational& s) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatMatrix transpose(const RatMatrix& a);
/// Throws DimensionError unless a.cols() == b.rows().
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> matvec(const RatMatrix& a, std::span<const Rational> x);

/// A^T A when cols <= rows (ties included), otherwise A A^T.
RatMatrix gram(const RatMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational exact_determinant(const RatMatrix& b);

/// Sylvester's criterion: every leading principal minor strictly positive.
/// The minors come out of a single pivot-free Bareiss sweep over the matrix
/// scaled to integers. Throws DimensionError for non-symmetric input.
bool is_positive_definite(const RatMatrix& b);

/// Leading principal minors of a square matrix, in order of size.
std::vector<Rational> leading_principal_minors(const RatMatrix& b);

}  // namespace edgecert

#endif  // EDGECERT_MATRIX_HPP_
