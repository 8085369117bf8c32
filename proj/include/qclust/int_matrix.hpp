#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qclust {

using IntVec = std::vector<long>;

/// Dense row-major integer matrix for exchange matrices, skew forms and
/// c-vector bookkeeping. Entries stay small, so `long` is enough here; all
/// polynomial coefficients live in GMP integers elsewhere.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  long& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec column(std::size_t j) const;
  IntVec row(std::size_t i) const;
  IntMatrix transposed() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_skew_symmetric() const;
  bool is_zero() const;

  IntVec apply(const IntVec& x) const;  // this * x

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long> data_;
};

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec scaled(const IntVec& a, long s);
long dot(const IntVec& a, const IntVec& b);
IntVec unit_vector(std::size_t dim, std::size_t i);
bool all_nonnegative(const IntVec& a);
bool leq(const IntVec& a, const IntVec& b);  // entrywise
std::string to_string(const IntVec& v);

}  // namespace qclust
