#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flexalg/poly/poly_matrix.hpp"
#include "flexalg/poly/polynomial.hpp"
#include "flexalg/poly/qmatrix.hpp"

namespace flexalg {

// A polynomial self-map of affine space: the point x goes to (F_1(x), ..., F_n(x)).
class PolyMap {
 public:
  // Throws ArityMismatch / RingMismatch.
  PolyMap(Ring ring, std::vector<Polynomial> images);

  static PolyMap identity(const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const Polynomial& operator[](std::size_t i) const { return images_[i]; }
  std::size_t arity() const noexcept { return images_.size(); }

  std::vector<Rational> apply(std::span<const Rational> point) const;
  int total_degree() const noexcept;
  PolyMap truncated(unsigned max_degree) const;

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.ring_ == b.ring_ && a.images_ == b.images_;
  }

 private:
  Ring ring_;
  std::vector<Polynomial> images_;
};

// (F o G)(x) = F(G(x)): F's images with G's images substituted. With
// `max_degree`, terms above that degree are discarded throughout.
PolyMap compose(const PolyMap& f, const PolyMap& g,
                std::optional<unsigned> max_degree = std::nullopt);

// J[i][j] = dF_i/dx_j.
PolyMatrix jacobian(const PolyMap& f);
Polynomial jacobian_det(const PolyMap& f);
// Jacobian evaluated at p.
QMatrix linear_part_at(const PolyMap& f, std::span<const Rational> p);

}  // namespace flexalg
