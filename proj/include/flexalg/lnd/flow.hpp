#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "flexalg/lnd/derivation.hpp"
#include "flexalg/lnd/nilpotency.hpp"
#include "flexalg/poly/poly_map.hpp"

namespace flexalg {

// Marks a flow whose time is left as a formal variable t; the step then acts
// as exp(scale * t * d).
struct SymbolicTime {
  Rational scale{1};
  friend bool operator==(const SymbolicTime&, const SymbolicTime&) = default;
};

using FlowTime = std::variant<Rational, SymbolicTime>;

// A pair of mutually inverse polynomial maps.
class PolyAutomorphism {
 public:
  // Throws InvalidArgument unless forward o inverse = inverse o forward = id.
  PolyAutomorphism(PolyMap forward, PolyMap inverse);
  // For maps that are inverse by construction; skips the composition check.
  static PolyAutomorphism trusted(PolyMap forward, PolyMap inverse);

  const PolyMap& forward() const noexcept { return forward_; }
  const PolyMap& inverse() const noexcept { return inverse_; }
  const Ring& ring() const noexcept { return forward_.ring(); }

 private:
  struct Unchecked {};
  PolyAutomorphism(PolyMap forward, PolyMap inverse, Unchecked)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

  PolyMap forward_;
  PolyMap inverse_;
};

// One factor exp(t d) of an automorphism word. Construction certifies the
// derivation as locally nilpotent and precomputes the series terms
// d^j(x_i) / j!.
class FlowStep {
 public:
  // Throws NotCertified when the certificate reports ExceededBound.
  FlowStep(Derivation d, FlowTime time, unsigned bound = kDefaultNilpotencyBound);

  const Derivation& derivation() const noexcept { return derivation_; }
  const FlowTime& time() const noexcept { return time_; }
  const NilpotencyCertificate& certificate() const noexcept { return certificate_; }
  const Ring& ring() const noexcept { return derivation_.ring(); }
  bool is_symbolic() const noexcept { return std::holds_alternative<SymbolicTime>(time_); }
  // Throws SymbolicTime.
  const Rational& rational_time() const;

  // Same derivation, time negated.
  FlowStep inverted() const;
  // Same derivation, another time.
  FlowStep with_time(FlowTime time) const;

  // x_i -> sum_j s^j d^j(x_i)/j! at a rational time s.
  PolyMap map_at(const Rational& s) const;
  // Image of a point under exp(s d).
  std::vector<Rational> apply_at(const Rational& s, std::span<const Rational> point) const;
  // Throws SymbolicTime for symbolic steps.
  std::vector<Rational> apply(std::span<const Rational> point) const;

  // series()[i][j] = d^j(x_i) / j!.
  const std::vector<std::vector<Polynomial>>& series() const noexcept { return *series_; }

 private:
  Derivation derivation_;
  FlowTime time_;
  NilpotencyCertificate certificate_;
  std::shared_ptr<const std::vector<std::vector<Polynomial>>> series_;
};

// exp(t d) with its inverse exp(-t d). Throws NotCertified.
PolyAutomorphism exp_flow(const Derivation& d, const Rational& t,
                          unsigned bound = kDefaultNilpotencyBound);
// exp(t d) over the ring extended by one fresh variable for t (named by
// Ring::fresh_name("t")); the result's ring carries that extra variable.
PolyMap exp_flow_symbolic(const Derivation& d, unsigned bound = kDefaultNilpotencyBound);

}  // namespace flexalg
