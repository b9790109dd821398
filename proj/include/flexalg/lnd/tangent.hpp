#pragma once

#include <span>
#include <vector>

#include "flexalg/lnd/derivation.hpp"
#include "flexalg/poly/qmatrix.hpp"

namespace flexalg {

// Linear part at p of exp(f d), for f in ker d with f(p) = 0:
// I + d(p) * grad f(p)^T. Throws NotInvariant / NotFixed / ArityMismatch.
QMatrix tangent_of_replica_flow(const Derivation& d, const Polynomial& f,
                                std::span<const Rational> p);

// Rank of the velocity vectors d_k(p). Throws ArityMismatch / RingMismatch.
std::size_t flex_rank(const std::vector<Derivation>& ds, std::span<const Rational> p);

}  // namespace flexalg
