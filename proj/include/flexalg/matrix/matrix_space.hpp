#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flexalg/lnd/derivation.hpp"
#include "flexalg/poly/poly_matrix.hpp"
#include "flexalg/poly/qmatrix.hpp"

namespace flexalg {

enum class MatrixMode { Generic, Symmetric, Skew };

std::string_view to_string(MatrixMode mode) noexcept;
// Throws InvalidArgument.
MatrixMode parse_mode(std::string_view text);

// A rational matrix tagged with the space it lives in.
class MatrixPoint {
 public:
  // Throws NotSquare / NotSkewSymmetric / InvalidArgument (asymmetric input,
  // empty shape).
  MatrixPoint(QMatrix entries, MatrixMode mode);

  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }
  MatrixMode mode() const noexcept { return mode_; }
  const QMatrix& entries() const noexcept { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  friend bool operator==(const MatrixPoint& a, const MatrixPoint& b) {
    return a.mode_ == b.mode_ && a.entries_ == b.entries_;
  }

 private:
  QMatrix entries_;
  MatrixMode mode_;
};

// Which one-parameter subgroup acts. Indices are 0-based.
//   Row(k, l):        row l += t * row k,              B -> (I + t E_lk) B
//   Col(k, l):        column l += t * column k,        B -> B (I + t E_kl)
//   Congruence(k, l): row and column k += t * line l,  B -> P B P^T, P = I + t E_kl
enum class Side { Row, Col, Congruence };

std::string_view to_string(Side side) noexcept;
Side parse_side(std::string_view text);

struct ElemGenerator {
  Side side = Side::Row;
  std::size_t k = 0;
  std::size_t l = 1;
  friend bool operator==(const ElemGenerator&, const ElemGenerator&) = default;
};

// Coordinate ring of Mat(n, m), of symmetric n x n matrices (variables b_ij,
// i <= j) or of skew n x n matrices (variables b_ij, i < j). Variable names
// use 1-based indices: b12 is entry (0, 1).
class MatrixSpace {
 public:
  MatrixSpace(std::size_t n, std::size_t m, MatrixMode mode);
  static MatrixSpace of(const MatrixPoint& b) { return MatrixSpace(b.rows(), b.cols(), b.mode()); }

  std::size_t rows() const noexcept { return n_; }
  std::size_t cols() const noexcept { return m_; }
  MatrixMode mode() const noexcept { return mode_; }
  const Ring& ring() const noexcept { return ring_; }

  // The matrix of coordinate functions (b_ji = b_ij or -b_ij off the stored
  // triangle, zero on a skew diagonal).
  const PolyMatrix& generic_matrix() const noexcept { return generic_; }
  // Entry position of each ring variable.
  const std::vector<std::pair<std::size_t, std::size_t>>& positions() const noexcept { return positions_; }

  std::vector<Rational> coordinates(const MatrixPoint& b) const;
  bool admits(const ElemGenerator& g) const noexcept;
  // Every generator acting on the space, in a fixed order.
  std::vector<ElemGenerator> generators() const;

  friend bool operator==(const MatrixSpace& a, const MatrixSpace& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.mode_ == b.mode_;
  }

 private:
  std::size_t n_;
  std::size_t m_;
  MatrixMode mode_;
  std::vector<std::pair<std::size_t, std::size_t>> positions_;
  Ring ring_;
  PolyMatrix generic_;
};

// Throws InvalidArgument when g does not act on B's space.
MatrixPoint elem_action(const ElemGenerator& g, const Rational& t, const MatrixPoint& b);
// The derivation on the space's ring whose flow is elem_action(g, t, .).
Derivation generator_derivation(const MatrixSpace& space, const ElemGenerator& g);
// Invariants of g listed with the elementary-subgroup lemmas; each lies in
// the kernel of generator_derivation(space, g).
std::vector<Polynomial> invariant_basis(const MatrixSpace& space, const ElemGenerator& g);

struct Signature {
  std::size_t rank = 0;
  std::optional<Rational> det;
  std::optional<Rational> pf;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const MatrixPoint& b);

// f in ker(g) with f(B) = 1 and f(Z) = 0 for every frozen Z, built as a
// product of normalized shifted basis invariants. Throws NotSeparated with
// the index of the first frozen matrix no basis invariant tells from B.
Polynomial separating_invariant(const MatrixSpace& space, const ElemGenerator& g,
                                const MatrixPoint& b, const std::vector<MatrixPoint>& frozen);

// exp(time * coeff * delta_g): moves B by elem_action(g, time * coeff(B), B).
struct ElemReplica {
  ElemGenerator generator;
  Polynomial coeff;
  Rational time;
};

MatrixPoint apply_replica(const MatrixSpace& space, const ElemReplica& r, const MatrixPoint& b);

}  // namespace flexalg
