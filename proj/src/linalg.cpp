#include "qclust/linalg.hpp"

#include "qclust/error.hpp"

namespace qclust {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  QMatrix out(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(Errc::DimensionMismatch, "ragged rational matrix");
    for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<std::vector<mpq_class>>& cols) {
  QMatrix out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(Errc::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = cols[j][i];
  }
  return out;
}

std::vector<mpq_class> QMatrix::column(std::size_t j) const {
  std::vector<mpq_class> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<std::vector<mpq_class>> QMatrix::columns() const {
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

QMatrix QMatrix::transposed() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  QMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "rational matrix product");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpq_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "rational matrix sum");
  QMatrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "rational matrix difference");
  QMatrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

QMatrix operator*(const mpq_class& s, const QMatrix& a) {
  QMatrix out(a);
  for (auto& x : out.data_) x *= s;
  return out;
}

std::string QMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ',';
      s += (*this)(i, j).get_str();
    }
    s += ']';
  }
  return s + ']';
}

QMatrix hcat(const std::vector<QMatrix>& parts, std::size_t rows) {
  std::size_t c = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw Error(Errc::DimensionMismatch, "hcat row count");
    c += p.cols();
  }
  QMatrix out(rows, c);
  std::size_t at = 0;
  for (const auto& p : parts) {
    out.set_block(0, at, p);
    at += p.cols();
  }
  return out;
}

QMatrix vcat(const std::vector<QMatrix>& parts, std::size_t cols) {
  std::size_t r = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw Error(Errc::DimensionMismatch, "vcat column count");
    r += p.rows();
  }
  QMatrix out(r, cols);
  std::size_t at = 0;
  for (const auto& p : parts) {
    out.set_block(at, 0, p);
    at += p.rows();
  }
  return out;
}

Echelon row_reduce(const QMatrix& a) {
  Echelon e{a, {}};
  QMatrix& m = e.rref;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const mpq_class inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const mpq_class f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const QMatrix& a) { return row_reduce(a).pivots.size(); }

QMatrix kernel(const QMatrix& a) {
  const Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
    basis.push_back(std::move(v));
  }
  return QMatrix::from_columns(a.cols(), basis);
}

QMatrix image(const QMatrix& a) {
  const Echelon e = row_reduce(a);
  std::vector<std::vector<mpq_class>> basis;
  for (auto p : e.pivots) basis.push_back(a.column(p));
  return QMatrix::from_columns(a.rows(), basis);
}

QMatrix inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  const Echelon e = row_reduce(hcat({a, QMatrix::identity(n)}, n));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw Error(Errc::InvalidInput, "singular matrix");
  return e.rref.block(0, n, n, n);
}

QMatrix solve(const QMatrix& basis, const QMatrix& target) {
  const std::size_t k = basis.cols();
  const Echelon e = row_reduce(hcat({basis, target}, basis.rows()));
  for (auto p : e.pivots)
    if (p >= k) throw Error(Errc::InvalidInput, "target outside the span");
  if (e.pivots.size() != k) throw Error(Errc::InvalidInput, "basis columns are dependent");
  return e.rref.block(0, k, k, target.cols());
}

QMatrix complement(const QMatrix& part, std::size_t n) {
  const Echelon e = row_reduce(hcat({part, QMatrix::identity(n)}, n));
  std::vector<std::vector<mpq_class>> added;
  for (auto p : e.pivots) {
    if (p < part.cols()) continue;
    std::vector<mpq_class> u(n);
    u[p - part.cols()] = 1;
    added.push_back(std::move(u));
  }
  return QMatrix::from_columns(n, added);
}

}  // namespace qclust
