#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qclust {

/// Dense rational matrix. Representations and reduction substitutions need
/// exact kernels and images, so everything goes through mpq_class.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows);
  /// Columns given as vectors of equal length `rows`.
  static QMatrix from_columns(std::size_t rows, const std::vector<std::vector<mpq_class>>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<mpq_class> column(std::size_t j) const;
  std::vector<std::vector<mpq_class>> columns() const;
  QMatrix transposed() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& b);
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const mpq_class& s, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Horizontal and vertical concatenation; empty inputs are allowed.
QMatrix hcat(const std::vector<QMatrix>& parts, std::size_t rows);
QMatrix vcat(const std::vector<QMatrix>& parts, std::size_t cols);

struct Echelon {
  QMatrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(const QMatrix& a);
std::size_t rank(const QMatrix& a);

/// Basis of the null space as the columns of a cols×k matrix.
QMatrix kernel(const QMatrix& a);
/// Basis of the column space chosen among the columns of a (leftmost pivots).
QMatrix image(const QMatrix& a);
/// Inverse of a square matrix; throws when singular.
QMatrix inverse(const QMatrix& a);
/// Coordinates x with basis * x == target, or throws when target is outside the span.
QMatrix solve(const QMatrix& basis, const QMatrix& target);
/// Extends the independent columns of `part` to a basis of Q^n using
/// standard unit vectors; returns only the added columns.
QMatrix complement(const QMatrix& part, std::size_t n);

}  // namespace qclust
