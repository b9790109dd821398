#include "flexalg/lnd/derivation.hpp"

#include "flexalg/error.hpp"

namespace flexalg {

Derivation::Derivation(Ring ring, std::vector<Polynomial> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_.arity())
    throw Error(ErrorCode::ArityMismatch, "derivation needs one coefficient per ring variable, got " +
                                              std::to_string(coeffs_.size()) + " for " +
                                              std::to_string(ring_.arity()));
  for (const auto& c : coeffs_)
    if (!(c.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "derivation coefficient lives in another ring");
}

Derivation Derivation::zero(const Ring& ring) {
  return Derivation(ring, std::vector<Polynomial>(ring.arity(), Polynomial(ring)));
}

Derivation Derivation::coordinate(const Ring& ring, std::size_t i) {
  if (i >= ring.arity()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
  std::vector<Polynomial> coeffs(ring.arity(), Polynomial(ring));
  coeffs[i] = Polynomial::constant(ring, Rational(1));
  return Derivation(ring, std::move(coeffs));
}

bool Derivation::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<Rational> Derivation::at(std::span<const Rational> point) const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.evaluate(point));
  return v;
}

Derivation Derivation::multiplied(const Polynomial& f) const {
  if (!(f.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "multiplier lives in another ring");
  std::vector<Polynomial> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) coeffs.push_back(c.is_zero() ? c : f * c);
  return Derivation(ring_, std::move(coeffs));
}

Polynomial derive(const Derivation& d, const Polynomial& f) {
  if (!(d.ring() == f.ring())) throw Error(ErrorCode::RingMismatch, "derivation and polynomial live in different rings");
  Polynomial out(f.ring());
  for (std::size_t i = 0; i < d.arity(); ++i) {
    if (d[i].is_zero() || !f.involves(i)) continue;
    out += d[i] * f.partial(i);
  }
  return out;
}

bool in_kernel(const Derivation& d, const Polynomial& f) { return derive(d, f).is_zero(); }

Derivation replica(const Derivation& d, const Polynomial& f) {
  if (!in_kernel(d, f))
    throw Error(ErrorCode::NotInvariant, "'" + f.to_string() + "' is not in the kernel of the derivation");
  return d.multiplied(f);
}

Derivation bracket(const Derivation& a, const Derivation& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, "derivations live in different rings");
  std::vector<Polynomial> coeffs;
  coeffs.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) coeffs.push_back(derive(a, b[i]) - derive(b, a[i]));
  return Derivation(a.ring(), std::move(coeffs));
}

}  // namespace flexalg
