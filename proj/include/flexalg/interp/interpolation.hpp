#pragma once

#include <cstdint>
#include <vector>

#include "flexalg/lnd/aut_word.hpp"

namespace flexalg {

using Point = std::vector<Rational>;

// The flow of P d/dx_i at time 1: x_i -> x_i + P. Throws InvalidArgument
// when P involves x_i.
FlowStep shear(const Ring& ring, std::size_t i, const Polynomial& p);

// Checks arity (ArityMismatch), n >= 2 (InvalidArgument) and pairwise
// distinctness (DuplicatePoint with the later index).
void validate_point_set(const Ring& ring, const std::vector<Point>& points);

// Empty when first coordinates already differ; otherwise one shear
// x_1 -> x_1 + Q(x_2, ..., x_n) with Q the first linear form, in a fixed
// enumeration starting at x_2, that separates them. Throws BudgetExhausted
// if the enumeration runs out.
AutWord separate_first_coordinates(const Ring& ring, const std::vector<Point>& points);

struct CurveCertificate {
  // g = (inverse separation shear) o (shears x_j -> x_j + P_j(x_1)).
  AutWord word;
  // g_* (d/dx_1): coefficients (dg_i/dx_1) o g^{-1}.
  Derivation derivation;
  // times[i] is the parameter at which the curve meets points[i].
  std::vector<Rational> times;
  // Ring of the single curve parameter.
  Ring parameter_ring;
  // gamma(t) = g(t, 0, ..., 0), one polynomial per coordinate.
  std::vector<Polynomial> parameterization;
};

struct CurveOptions {
  std::uint64_t seed = 0;
  // Separation shears tried before giving up on avoidance.
  unsigned budget = 64;
};

// A G_a-orbit (the image of the x_1-axis under g) through every point, and
// missing every avoid point. Throws DuplicatePoint when an avoid point lies
// in the set, BudgetExhausted when avoidance keeps failing.
CurveCertificate ga_orbit_through(const Ring& ring, const std::vector<Point>& points,
                                  const std::vector<Point>& avoid = {}, const CurveOptions& options = {});

std::vector<Rational> evaluate_curve(const CurveCertificate& c, const Rational& t);
// True when the curve meets the point, decided by pulling it back through g.
bool curve_meets(const CurveCertificate& c, const Point& a);

// gamma(times_i) = points_i, the derivation is tangent to gamma, the word is
// volume preserving and no avoid point lies on the curve.
bool verify_curve(const CurveCertificate& c, const std::vector<Point>& points, const std::vector<Point>& avoid);

}  // namespace flexalg
