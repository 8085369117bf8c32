#include "qclust/int_matrix.hpp"

#include <sstream>

#include "qclust/error.hpp"

namespace qclust {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix out;
  out.rows_ = rows.size();
  out.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != out.cols_) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    out.data_.insert(out.data_.end(), r.begin(), r.end());
  }
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntVec IntMatrix::column(std::size_t j) const {
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  IntMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

bool IntMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (long x : data_)
    if (x != 0) return false;
  return true;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  if (x.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector product");
  IntVec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const long aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << qclust::to_string(row(i));
  }
  os << ']';
  return os.str();
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sum");
  IntVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector difference");
  IntVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

IntVec scaled(const IntVec& a, long s) {
  IntVec out(a);
  for (auto& x : out) x *= s;
  return out;
}

long dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product");
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec unit_vector(std::size_t dim, std::size_t i) {
  IntVec out(dim, 0);
  out.at(i) = 1;
  return out;
}

bool all_nonnegative(const IntVec& a) {
  for (long x : a)
    if (x < 0) return false;
  return true;
}

bool leq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "entrywise comparison");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string to_string(const IntVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ']';
}

}  // namespace qclust
