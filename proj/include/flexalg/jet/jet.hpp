#pragma once

#include <vector>

#include "flexalg/lnd/aut_word.hpp"
#include "flexalg/poly/poly_map.hpp"
#include "flexalg/poly/qmatrix.hpp"

namespace flexalg {

// Order-m jet of a map at a fixed point `base`. Images are written in local
// coordinates u = x - base (reusing the ring's variable names), so they have
// no constant term and no monomial of degree > m.
class Jet {
 public:
  // Throws InvalidArgument when the images break those constraints.
  Jet(std::vector<Rational> base, unsigned order, PolyMap images);

  static Jet identity(const Ring& ring, std::vector<Rational> base, unsigned order);

  const Ring& ring() const noexcept { return images_.ring(); }
  const std::vector<Rational>& base() const noexcept { return base_; }
  unsigned order() const noexcept { return order_; }
  const PolyMap& images() const noexcept { return images_; }

  // Column-vector convention: entry (i, j) is the coefficient of u_j in image i.
  QMatrix linear_part() const;
  // True when images - u vanish in every degree <= k.
  bool is_identity_to(unsigned k) const;

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.order_ == b.order_ && a.base_ == b.base_ && a.images_ == b.images_;
  }

 private:
  std::vector<Rational> base_;
  unsigned order_;
  PolyMap images_;
};

// One homogeneous form of degree m per variable.
class HomForm {
 public:
  // Throws NotHomogeneous / ArityMismatch / RingMismatch.
  HomForm(Ring ring, unsigned degree, std::vector<Polynomial> forms);

  static HomForm zero(const Ring& ring, unsigned degree);

  const Ring& ring() const noexcept { return ring_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<Polynomial>& forms() const noexcept { return forms_; }

  friend HomForm operator+(const HomForm& a, const HomForm& b);
  friend HomForm operator*(const Rational& c, const HomForm& h);
  friend bool operator==(const HomForm& a, const HomForm& b) {
    return a.ring_ == b.ring_ && a.degree_ == b.degree_ && a.forms_ == b.forms_;
  }

 private:
  Ring ring_;
  unsigned degree_;
  std::vector<Polynomial> forms_;
};

// Jet of the word's point map at p, computed by pushing a truncated local
// expansion through the steps (last step first). Throws NotFixed when the
// word moves p, SymbolicTime for symbolic words, InvalidArgument for m = 0.
Jet jet_of(const AutWord& w, std::span<const Rational> p, unsigned m);
Jet jet_of_map(const PolyMap& f, std::span<const Rational> p, unsigned m);

// Jet of a o b. Throws InvalidArgument for mismatched bases or orders.
Jet jet_compose(const Jet& a, const Jet& b);

// Degree-m part of the jet. For m >= 2 the jet must be the identity modulo
// degree m (NotIdentityToOrder otherwise); for m = 1 the result is the linear
// part itself, stored as linear forms.
HomForm psi(const Jet& j);
// Inverse of psi: u + h for m >= 2, h itself for m = 1.
Jet jet_from_psi(const HomForm& h, std::vector<Rational> base);
// Divergence sum_i d(form_i)/dx_i, homogeneous of degree m - 1.
Polynomial kappa(const HomForm& h);
// m = 1: det of the linear part is 1. m >= 2: kappa(psi(j)) = 0, which
// requires the jet to be the identity modulo degree m.
bool is_volume_jet(const Jet& j);

}  // namespace flexalg
