#include <doctest.h>

#include "flexalg/error.hpp"
#include "flexalg/poly/pfaffian.hpp"
#include "flexalg/poly/poly_map.hpp"
#include "flexalg/poly/poly_matrix.hpp"
#include "flexalg/poly/qmatrix.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace flexalg;

namespace {
const Ring R2({"x", "y"});
const Ring R3({"X", "Y", "Z"});
Polynomial P(const Ring& r, std::string_view s) { return parse_polynomial(r, s); }
}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK(Rational::parse(" -6/4 ") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational(1).operator/=(Rational(0)), Error);
}

TEST_CASE("evaluation") {
  CHECK(P(R2, "x^2 + y").evaluate(std::vector<Rational>{2, 3}) == Rational(7));
  CHECK(Polynomial(R2).evaluate(std::vector<Rational>{5, -1}) == Rational(0));
  CHECK(P(R3, "Y^2 - 2*X*Z").evaluate(std::vector<Rational>{1, 3, 2}) == Rational(5));
  CHECK_THROWS_AS(P(R2, "x").evaluate(std::vector<Rational>{1}), Error);
}

TEST_CASE("partial derivatives") {
  const Ring r({"x", "y", "z"});
  CHECK(P(r, "x^2*y").partial("x") == P(r, "2*x*y"));
  CHECK(P(r, "x^2*y").partial("z").is_zero());
  CHECK(P(R3, "Y^2 - 2*X*Z").partial("Y") == P(R3, "2*Y"));
}

TEST_CASE("canonical text round-trips through the parser") {
  const Polynomial p = P(R3, "3/2*Z + X^2 - 7 + X*Y*Z^3");
  CHECK(p.to_string() == "X*Y*Z^3 + X^2 + 3/2*Z - 7");
  CHECK(P(R3, p.to_string()) == p);
  CHECK(P(R3, "(X + Y)^2 - X^2 - 2*X*Y") == P(R3, "Y^2"));
  CHECK(P(R3, "X/2") == Polynomial::variable(R3, 0).scaled(Rational(1, 2)));
  CHECK(Polynomial(R3).to_string() == "0");
}

TEST_CASE("parser errors") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code([] { P(R2, "x + w"); }) == ErrorCode::UnknownVariable);
  CHECK(code([] { P(R2, "x +"); }) == ErrorCode::ParseError);
  CHECK(code([] { P(R2, "x / y"); }) == ErrorCode::ParseError);
  CHECK(code([] { P(R2, "x^"); }) == ErrorCode::ParseError);
  CHECK(code([] { P(R2, "(x"); }) == ErrorCode::ParseError);
}

TEST_CASE("ring mismatch and term cap") {
  CHECK_THROWS_AS(P(R2, "x") + P(R3, "X"), Error);
  const std::size_t old = term_cap();
  set_term_cap(10);
  try {
    (void)P(R2, "(x + y + 1)^6");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TermCapExceeded);
  }
  set_term_cap(old);
}

TEST_CASE("composition of maps") {
  const PolyMap g(R2, {P(R2, "x + y"), P(R2, "y^2")});
  CHECK(compose(PolyMap::identity(R2), g) == g);
  const PolyMap f(R2, {P(R2, "x"), P(R2, "y + x^2")});
  const PolyMap fi(R2, {P(R2, "x"), P(R2, "y - x^2")});
  CHECK(compose(f, fi) == PolyMap::identity(R2));
  const PolyMap s(R2, {P(R2, "x"), P(R2, "y + x")});
  CHECK(compose(s, s) == PolyMap(R2, {P(R2, "x"), P(R2, "y + 2*x")}));
  // F o G means G first.
  const PolyMap h = compose(PolyMap(R2, {P(R2, "x^2"), P(R2, "y")}), PolyMap(R2, {P(R2, "x + 1"), P(R2, "y")}));
  CHECK(h[0] == P(R2, "x^2 + 2*x + 1"));
}

TEST_CASE("jacobian determinant") {
  CHECK(jacobian_det(PolyMap::identity(R3)) == Polynomial::constant(R3, Rational(1)));
  CHECK(jacobian_det(PolyMap(R2, {P(R2, "x"), P(R2, "y + x^5 - 3*x")})) == Polynomial::constant(R2, Rational(1)));
  CHECK(jacobian_det(PolyMap(R2, {P(R2, "2*x"), P(R2, "y")})) == Polynomial::constant(R2, Rational(2)));
  const QMatrix lp = linear_part_at(PolyMap(R2, {P(R2, "x*y"), P(R2, "y")}), std::vector<Rational>{2, 3});
  CHECK(lp == QMatrix({{3, 2}, {0, 1}}));
}

TEST_CASE("pfaffian examples") {
  CHECK(pfaffian(QMatrix({{0, 5}, {-5, 0}})) == Rational(5));
  CHECK(pfaffian(QMatrix({{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}})) == Rational(0));
  // Upper-triangle entries a..f in row-major order give af - be + cd.
  const Ring r({"a", "b", "c", "d", "e", "f"});
  auto v = [&](const char* s) { return P(r, s); };
  const Polynomial z(r);
  const PolyMatrix m(r, {{z, v("a"), v("b"), v("c")},
                         {-v("a"), z, v("d"), v("e")},
                         {-v("b"), -v("d"), z, v("f")},
                         {-v("c"), -v("e"), -v("f"), z}});
  CHECK(pfaffian(m) == v("a*f - b*e + c*d"));
  CHECK(pfaffian(m) * pfaffian(m) == determinant(m));
  CHECK_THROWS_AS(pfaffian(PolyMatrix(r, {{v("a"), z}, {z, z}})), Error);
}

TEST_CASE("pfaffian and determinant agree with brute-force oracles") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 6));
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) = rng.rational(5, 3);
        a(j, i) = -a(i, j);
      }
    const Rational pf = pfaffian(a);
    const Rational ref = oracle::pfaffian_matchings<Rational>(n, [&](std::size_t i, std::size_t j) { return a(i, j); },
                                                              Rational(0));
    CHECK(pf == ref);
    CHECK(pf * pf == oracle::det_leibniz(a));
    const QMatrix g = gen::matrix(rng, n, n, 4);
    CHECK(g.det() == oracle::det_leibniz(g));
  }
}

TEST_CASE("qmatrix linear algebra") {
  const QMatrix a({{1, 2}, {3, 4}});
  CHECK(a.det() == Rational(-2));
  CHECK(a * a.inverse() == QMatrix::identity(2));
  CHECK(QMatrix({{1, 2}, {2, 4}}).rank() == 1);
  const auto ns = QMatrix({{1, 2, 3}}).nullspace();
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + Rational(2) * v[1] + Rational(3) * v[2] == Rational(0));
  CHECK_THROWS_AS(QMatrix({{1, 2}, {2, 4}}).inverse(), Error);
}
