#include <doctest.h>

#include "flexalg/error.hpp"
#include "flexalg/interp/interpolation.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace flexalg;

namespace {
const Ring R2({"x", "y"});
Polynomial P(const Ring& r, std::string_view s) { return parse_polynomial(r, s); }
template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// The curve misses a iff the coordinate equations gamma_i(t) = a_i have no
// common root, i.e. their gcd is constant.
bool misses_by_gcd(const CurveCertificate& c, const Point& a) {
  oracle::Uni g;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Polynomial eq = c.parameterization[i] - Polynomial::constant(c.parameter_ring, a[i]);
    g = oracle::uni_gcd(g, oracle::to_uni(eq));
  }
  return g.size() == 1;
}
}  // namespace

TEST_CASE("shears") {
  CHECK(shear(R2, 1, P(R2, "x^2")).map_at(Rational(1)) == PolyMap(R2, {P(R2, "x"), P(R2, "y + x^2")}));
  CHECK(shear(R2, 1, Polynomial(R2)).map_at(Rational(1)) == PolyMap::identity(R2));
  CHECK(shear(R2, 0, P(R2, "y^3 - 5")).map_at(Rational(1)) == PolyMap(R2, {P(R2, "x + y^3 - 5"), P(R2, "y")}));
  CHECK(code_of([] { shear(R2, 0, P(R2, "x*y")); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("separation") {
  CHECK(separate_first_coordinates(R2, {{0, 0}, {1, 0}}).empty());
  CHECK(separate_first_coordinates(R2, {{4, 2}}).empty());
  const AutWord w = separate_first_coordinates(R2, {{0, 0}, {0, 1}});
  REQUIRE(w.size() == 1);
  CHECK(w.steps()[0].derivation()[0] == P(R2, "y"));
  CHECK(word_apply(w, std::vector<Rational>{0, 1})[0] == Rational(1));
  CHECK(code_of([] { separate_first_coordinates(R2, {{0, 0}, {0, 0}}); }) == ErrorCode::DuplicatePoint);
  CHECK(code_of([] { separate_first_coordinates(R2, {{0, 0}, {0}}); }) == ErrorCode::ArityMismatch);
  const Ring r1({"x"});
  CHECK(code_of([&] { separate_first_coordinates(r1, {{0}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("orbit curves through points") {
  const std::vector<Point> z{{0, 0}, {1, 1}, {2, 4}};
  const auto c = ga_orbit_through(R2, z);
  const Ring& t = c.parameter_ring;
  CHECK(c.parameterization == std::vector<Polynomial>{P(t, "t"), P(t, "t^2")});
  CHECK(c.times == std::vector<Rational>{0, 1, 2});
  CHECK(verify_curve(c, z, {}));
  const auto single = ga_orbit_through(R2, {{3, -2}});
  CHECK(single.parameterization == std::vector<Polynomial>{P(t, "t"), P(t, "-2")});
  const std::vector<Point> two{{0, 0}, {1, 1}};
  const std::vector<Point> avoid{{Rational(1, 2), Rational(1, 2)}};
  const auto ca = ga_orbit_through(R2, two, avoid);
  CHECK(verify_curve(ca, two, avoid));
  CHECK(misses_by_gcd(ca, avoid[0]));
  CHECK_FALSE(curve_meets(ca, avoid[0]));
  CHECK(code_of([&] { ga_orbit_through(R2, two, {{1, 1}}); }) == ErrorCode::DuplicatePoint);
}

TEST_CASE("curve meets agrees with the gcd oracle") {
  Rng rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    const Ring r = gen::ring_of(static_cast<std::size_t>(rng.range(2, 3)));
    std::vector<Point> z;
    const auto count = rng.range(1, 4);
    while (static_cast<long>(z.size()) < count) {
      auto p = gen::point(rng, r.arity(), 2, 1);
      if (std::find(z.begin(), z.end(), p) == z.end()) z.push_back(p);
    }
    const auto c = ga_orbit_through(r, z);
    CHECK(verify_curve(c, z, {}));
    for (int k = 0; k < 5; ++k) {
      // Points on the curve at random times and random points off it.
      const Point on = evaluate_curve(c, rng.rational(3, 2));
      CHECK(curve_meets(c, on));
      const Point any = gen::point(rng, r.arity(), 2, 1);
      CHECK(curve_meets(c, any) == !misses_by_gcd(c, any));
    }
  }
}
