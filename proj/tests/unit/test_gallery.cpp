#include <doctest.h>

#include <numeric>

#include "flexalg/error.hpp"
#include "flexalg/gallery/gallery.hpp"

using namespace flexalg;
using namespace flexalg::gallery;

namespace {
void require_green(const Report& r) {
  for (const auto& a : r.assertions) {
    INFO(r.name << ": " << a.name << " -> " << a.value);
    CHECK(a.pass);
  }
  CHECK(r.all_pass());
}
}  // namespace

TEST_CASE("nagata") {
  const Nagata n = nagata();
  CHECK(in_kernel(n.derivation, n.invariant));
  require_green(nagata_report());
}

TEST_CASE("conter and nonsep reports") {
  const Report c = conter_report();
  CHECK(c.assertions.size() >= 12);
  require_green(c);
  require_green(nonsep_report());
}

TEST_CASE("conter sample point against the closed-form action") {
  // t.(x,y,z,u) = (x + ty + t^2 z/2 + t^3 u/6, y + tz + t^2 u/2, z + tu, u).
  const Rational x(1), y(2), z(3), u(4);
  const Rational t = -z / u;
  const Rational ax = x + t * y + t * t * z / Rational(2) + t * t * t * u / Rational(6);
  const Rational ay = y + t * z + t * t * u / Rational(2);
  const Rational p2 = z * z - Rational(2) * y * u;
  const Rational p3 = z * z * z - Rational(3) * y * z * u + Rational(3) * x * u * u;
  CHECK(ay == -p2 / (Rational(2) * u));
  CHECK(ax == p3 / (Rational(3) * u * u));
}

TEST_CASE("sl2 example (1, 2, 1)") {
  const Sl2Lnd s = sl2_lnd(1, 2, 1);
  CHECK(s.params.k == 1);
  CHECK(s.params.a == 1);
  CHECK(s.params.b == 1);
  CHECK(s.params.c == 0);
  CHECK(s.params.d == 1);
  const Ring& r = s.derivation.ring();
  CHECK(s.derivation[3] == parse_polynomial(r, "X3"));
  CHECK(s.derivation[4] == parse_polynomial(r, "X1*X3"));
  require_green(s.report);
}

TEST_CASE("sl2 parameters match a brute-force minimal search") {
  for (long q = 2; q <= 7; ++q)
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (long m = 1; m <= 6; ++m) {
        const Sl2Params s = sl2_params(p, q, m);
        const long k = std::gcd(q - p, m), a = m / k;
        long s0 = 1;
        while ((k + s0 * p) % q != 0) ++s0;
        const long d0 = (k + s0 * p) / q;
        long r = 0;
        while ((((d0 + r * p) - (s0 + r * q)) % a + a) % a != 0) ++r;
        CHECK(s.s0 == s0);
        CHECK(s.d0 == d0);
        CHECK(s.r0 == r);
        const Sl2Lnd full = sl2_lnd(p, q, m);
        require_green(full.report);
      }
    }
}

TEST_CASE("sl2 rejects invalid parameters") {
  for (auto [p, q, m] : std::vector<std::array<long, 3>>{{2, 4, 1}, {3, 2, 1}, {0, 1, 1}, {1, 2, 0}}) {
    try {
      sl2_params(p, q, m);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
  }
}
