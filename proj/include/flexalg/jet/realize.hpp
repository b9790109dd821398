#pragma once

#include <cstdint>
#include <vector>

#include "flexalg/lnd/aut_word.hpp"
#include "flexalg/poly/qmatrix.hpp"

namespace flexalg {

// The elementary matrix I + coeff * E(row, col), row != col.
struct Transvection {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational coeff;

  QMatrix matrix(std::size_t n) const;
  friend bool operator==(const Transvection&, const Transvection&) = default;
};

// Factors A in SL_n as A = T_1 T_2 ... T_q with q <= n^2 + 3n - 4.
// Throws NotSquare / DeterminantNotOne.
std::vector<Transvection> sl_factor(const QMatrix& a);

struct RealizeOptions {
  // Seed for the random linear change of coordinates used when a frozen point
  // differs from p along a single coordinate axis.
  std::uint64_t seed = 0;
};

// A word of replica flows of the coordinate fields that fixes p with linear
// part A there, and fixes every frozen point with identity jet of order M.
// The word is verified with jet_of before it is returned.
// Throws DeterminantNotOne / FrozenCoincidence / ArityMismatch / NotSquare.
AutWord realize_linear_part(const Ring& ring, const QMatrix& a, std::span<const Rational> p,
                            const std::vector<std::vector<Rational>>& frozen, unsigned order_m,
                            const RealizeOptions& options = {});

}  // namespace flexalg
