#pragma once

#include <span>
#include <vector>

#include "flexalg/poly/polynomial.hpp"

namespace flexalg {

// A derivation sum_i f_i d/dx_i, stored as the images f_i = d(x_i).
class Derivation {
 public:
  // Throws ArityMismatch / RingMismatch.
  Derivation(Ring ring, std::vector<Polynomial> coeffs);

  static Derivation zero(const Ring& ring);
  // The coordinate field d/dx_i.
  static Derivation coordinate(const Ring& ring, std::size_t i);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }
  const Polynomial& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t arity() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept;

  // Velocity vector (d(x_1)(p), ..., d(x_n)(p)).
  std::vector<Rational> at(std::span<const Rational> point) const;
  // f * d without the kernel check.
  Derivation multiplied(const Polynomial& f) const;

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Ring ring_;
  std::vector<Polynomial> coeffs_;
};

// sum_i d(x_i) * df/dx_i. Throws RingMismatch.
Polynomial derive(const Derivation& d, const Polynomial& f);
bool in_kernel(const Derivation& d, const Polynomial& f);
// f * d. Throws NotInvariant unless d(f) = 0.
Derivation replica(const Derivation& d, const Polynomial& f);
// [a, b](x_i) = a(b(x_i)) - b(a(x_i)).
Derivation bracket(const Derivation& a, const Derivation& b);

}  // namespace flexalg
