#pragma once

#include <cstddef>
#include <vector>

#include "flexalg/poly/polynomial.hpp"
#include "flexalg/poly/qmatrix.hpp"

namespace flexalg {

// Rectangular matrix of polynomials sharing one ring.
class PolyMatrix {
 public:
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  // Throws InvalidArgument for ragged input, RingMismatch for mixed rings.
  PolyMatrix(Ring ring, const std::vector<std::vector<Polynomial>>& grid);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix evaluate(std::span<const Rational> point) const;
  PolyMatrix transpose() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> data_;
};

// Throws NotSquare.
Polynomial determinant(const PolyMatrix& m);
// Throws NotSquare / NotSkewSymmetric. Odd order gives 0.
Polynomial pfaffian(const PolyMatrix& m);

}  // namespace flexalg
