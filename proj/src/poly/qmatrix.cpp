#include "flexalg/poly/qmatrix.hpp"

#include <sstream>

#include "flexalg/error.hpp"
#include "flexalg/poly/pfaffian.hpp"

namespace flexalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Rational inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMatrix::QMatrix(const std::vector<std::vector<Rational>>& grid) {
  rows_ = grid.size();
  cols_ = grid.empty() ? 0 : grid.front().size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : grid) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

std::vector<std::vector<Rational>> QMatrix::grid() const {
  std::vector<std::vector<Rational>> g(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) g[i][j] = (*this)(i, j);
  return g;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t QMatrix::rank() const {
  QMatrix copy = *this;
  return reduce(copy).size();
}

Rational QMatrix::det() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  QMatrix a = *this;
  Rational d(1);
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    const Rational inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Rational f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

QMatrix QMatrix::inverse() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Rational(1);
  }
  const auto pivots = reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorCode::InvalidArgument, "matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
  QMatrix a = *this;
  const auto pivots = reduce(a);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool QMatrix::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == -(*this)(j, i))) return false;
  }
  return true;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in product");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in sum");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in difference");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

std::vector<Rational> operator*(const QMatrix& a, const std::vector<Rational>& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Rational pfaffian(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "Pfaffian of a non-square matrix");
  if (!m.is_skew()) throw Error(ErrorCode::NotSkewSymmetric, "Pfaffian of a non-skew-symmetric matrix");
  if (m.rows() > 30) throw Error(ErrorCode::InvalidArgument, "Pfaffian order too large");
  return detail::pfaffian_expand<Rational>(
      m.rows(), [&](std::size_t i, std::size_t j) -> const Rational& { return m(i, j); },
      Rational(0), Rational(1));
}

}  // namespace flexalg
