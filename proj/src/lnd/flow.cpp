#include "flexalg/lnd/flow.hpp"

#include "flexalg/error.hpp"

namespace flexalg {

PolyAutomorphism::PolyAutomorphism(PolyMap forward, PolyMap inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {
  if (!(forward_.ring() == inverse_.ring()))
    throw Error(ErrorCode::RingMismatch, "forward and inverse maps live in different rings");
  const PolyMap id = PolyMap::identity(forward_.ring());
  if (!(compose(forward_, inverse_) == id) || !(compose(inverse_, forward_) == id))
    throw Error(ErrorCode::InvalidArgument, "maps are not mutually inverse");
}

PolyAutomorphism PolyAutomorphism::trusted(PolyMap forward, PolyMap inverse) {
  return PolyAutomorphism(std::move(forward), std::move(inverse), Unchecked{});
}

FlowStep::FlowStep(Derivation d, FlowTime time, unsigned bound)
    : derivation_(std::move(d)), time_(std::move(time)) {
  certificate_ = certify_nilpotent(derivation_, bound);
  if (!certificate_.nilpotent())
    throw Error(ErrorCode::NotCertified, "derivation not certified locally nilpotent within " +
                                             std::to_string(bound) + " iterations");
  const Ring& ring = derivation_.ring();
  std::vector<std::vector<Polynomial>> series(ring.arity());
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    Polynomial g = Polynomial::variable(ring, i);
    for (unsigned j = 0; !g.is_zero(); ++j) {
      series[i].push_back(g.scaled(factorial(j).inverse()));
      g = derive(derivation_, g);
    }
  }
  series_ = std::make_shared<const std::vector<std::vector<Polynomial>>>(std::move(series));
}

const Rational& FlowStep::rational_time() const {
  if (const auto* r = std::get_if<Rational>(&time_)) return *r;
  throw Error(ErrorCode::SymbolicTime, "flow step has a symbolic time where a rational one is required");
}

FlowStep FlowStep::inverted() const {
  FlowStep copy = *this;
  if (auto* r = std::get_if<Rational>(&copy.time_)) *r = -*r;
  else std::get<SymbolicTime>(copy.time_).scale = -std::get<SymbolicTime>(copy.time_).scale;
  return copy;
}

FlowStep FlowStep::with_time(FlowTime time) const {
  FlowStep copy = *this;
  copy.time_ = std::move(time);
  return copy;
}

PolyMap FlowStep::map_at(const Rational& s) const {
  const Ring& ring = derivation_.ring();
  std::vector<Polynomial> images;
  images.reserve(ring.arity());
  for (const auto& terms : *series_) {
    Polynomial img(ring);
    Rational power(1);
    for (const auto& term : terms) {
      if (!power.is_zero()) img += term.scaled(power);
      power *= s;
    }
    images.push_back(std::move(img));
  }
  return PolyMap(ring, std::move(images));
}

std::vector<Rational> FlowStep::apply_at(const Rational& s, std::span<const Rational> point) const {
  if (point.size() != derivation_.arity())
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) +
                                              " coordinates, ring has " +
                                              std::to_string(derivation_.arity()));
  std::vector<Rational> out;
  out.reserve(point.size());
  for (const auto& terms : *series_) {
    Rational value(0);
    Rational power(1);
    for (const auto& term : terms) {
      if (power.is_zero()) break;
      value += power * term.evaluate(point);
      power *= s;
    }
    out.push_back(std::move(value));
  }
  return out;
}

std::vector<Rational> FlowStep::apply(std::span<const Rational> point) const {
  return apply_at(rational_time(), point);
}

PolyAutomorphism exp_flow(const Derivation& d, const Rational& t, unsigned bound) {
  const FlowStep step(d, t, bound);
  return PolyAutomorphism(step.map_at(t), step.map_at(-t));
}

PolyMap exp_flow_symbolic(const Derivation& d, unsigned bound) {
  const FlowStep step(d, SymbolicTime{}, bound);
  const Ring& ring = d.ring();
  const Ring ext = ring.extended(ring.fresh_name("t"));
  const Polynomial t = Polynomial::variable(ext, ring.arity());
  std::vector<Polynomial> images;
  for (const auto& terms : step.series()) {
    Polynomial img(ext);
    Polynomial power = Polynomial::constant(ext, Rational(1));
    for (const auto& term : terms) {
      img += power * term.embedded(ext);
      power *= t;
    }
    images.push_back(std::move(img));
  }
  images.push_back(t);
  return PolyMap(ext, std::move(images));
}

}  // namespace flexalg
