#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flexalg/poly/rational.hpp"

namespace flexalg {

// Dense matrix over the rationals, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Throws InvalidArgument for ragged input.
  explicit QMatrix(const std::vector<std::vector<Rational>>& grid);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::vector<Rational>> grid() const;
  QMatrix transpose() const;

  std::size_t rank() const;
  // Throws NotSquare.
  Rational det() const;
  // Throws NotSquare, or InvalidArgument when singular.
  QMatrix inverse() const;
  // Basis of {x : Ax = 0}, one vector per free column.
  std::vector<std::vector<Rational>> nullspace() const;

  bool is_symmetric() const;
  // Skew-symmetric with zero diagonal.
  bool is_skew() const;

  std::string to_string() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<Rational> operator*(const QMatrix& a, const std::vector<Rational>& v);

// Pfaffian of a skew-symmetric rational matrix; 0 for odd order.
// Throws NotSquare / NotSkewSymmetric.
Rational pfaffian(const QMatrix& m);

}  // namespace flexalg
