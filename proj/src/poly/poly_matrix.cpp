#include "flexalg/poly/poly_matrix.hpp"

#include "flexalg/error.hpp"
#include "flexalg/poly/pfaffian.hpp"

namespace flexalg {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(Ring ring, const std::vector<std::vector<Polynomial>>& grid)
    : ring_(std::move(ring)), rows_(grid.size()), cols_(grid.empty() ? 0 : grid.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : grid) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (const auto& p : r) {
      if (!(p.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "matrix entries live in different rings");
      data_.push_back(p);
    }
  }
}

QMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).evaluate(point);
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in product");
  if (!(a.ring_ == b.ring_)) throw Error(ErrorCode::RingMismatch, "matrices live in different rings");
  PolyMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in sum");
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  if (m.rows() > 20) throw Error(ErrorCode::InvalidArgument, "determinant order too large");
  return detail::determinant_expand<Polynomial>(
      m.rows(), [&](std::size_t i, std::size_t j) -> const Polynomial& { return m(i, j); },
      Polynomial(m.ring()), Polynomial::constant(m.ring(), Rational(1)));
}

Polynomial pfaffian(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "Pfaffian of a non-square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) throw Error(ErrorCode::NotSkewSymmetric, "nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == -m(j, i))) throw Error(ErrorCode::NotSkewSymmetric, "matrix is not skew-symmetric");
  }
  if (m.rows() > 30) throw Error(ErrorCode::InvalidArgument, "Pfaffian order too large");
  return detail::pfaffian_expand<Polynomial>(
      m.rows(), [&](std::size_t i, std::size_t j) -> const Polynomial& { return m(i, j); },
      Polynomial(m.ring()), Polynomial::constant(m.ring(), Rational(1)));
}

}  // namespace flexalg
