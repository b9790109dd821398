#include <doctest.h>

#include "flexalg/error.hpp"
#include "flexalg/lnd/aut_word.hpp"
#include "flexalg/lnd/tangent.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace flexalg;

namespace {
const Ring R3({"X", "Y", "Z"});
const Ring R4({"X", "Y", "Z", "U"});
Polynomial P(const Ring& r, std::string_view s) { return parse_polynomial(r, s); }
Derivation nagata_field() { return Derivation(R3, {Polynomial(R3), P(R3, "X"), P(R3, "Y")}); }
Derivation conter_field() { return Derivation(R4, {P(R4, "Y"), P(R4, "Z"), P(R4, "U"), Polynomial(R4)}); }
template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}
}  // namespace

TEST_CASE("derive and kernel membership") {
  const Derivation d = nagata_field();
  CHECK(derive(d, P(R3, "Z")) == P(R3, "Y"));
  CHECK(derive(d, P(R3, "Y^2 - 2*X*Z")).is_zero());
  CHECK(derive(conter_field(), P(R4, "Z^2 - 2*Y*U")).is_zero());
  CHECK(in_kernel(d, P(R3, "X")));
  CHECK_FALSE(in_kernel(d, P(R3, "Y")));
  const Derivation d1(R4, {P(R4, "Y"), P(R4, "Z"), Polynomial(R4), Polynomial(R4)});
  CHECK(in_kernel(d1, P(R4, "Y^2 - 2*X*Z")));
}

TEST_CASE("nilpotency certificates") {
  const auto c = certify_nilpotent(nagata_field(), 10);
  CHECK(c.nilpotent());
  CHECK(c.orders == std::vector<unsigned>{1, 2, 3});
  const Ring r1({"x"});
  CHECK(certify_nilpotent(Derivation::coordinate(r1, 0), 10).orders == std::vector<unsigned>{2});
  const auto euler = certify_nilpotent(Derivation(r1, {P(r1, "x")}), 10);
  CHECK(euler.status == NilpotencyStatus::ExceededBound);
  CHECK(code_of([&] { certify_nilpotent(nagata_field(), 0); }) == ErrorCode::InvalidArgument);
  // Non-triangular but nilpotent: d = y d/dx on a rotated basis.
  const Ring r2({"x", "y"});
  const Derivation rot(r2, {P(r2, "x + y"), P(r2, "-x - y")});
  CHECK_FALSE(is_triangular(rot));
  const auto cr = certify_nilpotent(rot, 10);
  CHECK(cr.nilpotent());
  CHECK(cr.orders == std::vector<unsigned>{2, 2});
}

TEST_CASE("replicas") {
  const Derivation d = nagata_field();
  CHECK(replica(d, Polynomial::constant(R3, Rational(1))) == d);
  CHECK(replica(d, Polynomial(R3)).is_zero());
  const Derivation nf = replica(d, P(R3, "Y^2 - 2*X*Z"));
  CHECK(nf[1] == P(R3, "X*Y^2 - 2*X^2*Z"));
  CHECK(code_of([&] { replica(d, P(R3, "Y")); }) == ErrorCode::NotInvariant);
}

TEST_CASE("flows") {
  const Ring r1({"x"});
  CHECK(exp_flow(Derivation::coordinate(r1, 0), Rational(5)).forward()[0] == P(r1, "x + 5"));
  const PolyMap sym = exp_flow_symbolic(conter_field());
  const Ring& rt = sym.ring();
  CHECK(sym[0] == parse_polynomial(rt, "X + t*Y + 1/2*t^2*Z + 1/6*t^3*U"));
  const Polynomial f = P(R3, "Y^2 - 2*X*Z");
  const PolyAutomorphism n = exp_flow(replica(nagata_field(), f), Rational(1));
  CHECK(n.forward()[0] == P(R3, "X"));
  CHECK(n.forward()[1] == P(R3, "Y") + f * P(R3, "X"));
  CHECK(n.forward()[2] == P(R3, "Z") + f * P(R3, "Y") + (f * f * P(R3, "X")).scaled(Rational(1, 2)));
  CHECK(f.substitute(n.forward().images(), R3) == f);
  CHECK(compose(n.forward(), n.inverse()) == PolyMap::identity(R3));
  CHECK(code_of([&] { FlowStep(Derivation(r1, {P(r1, "x")}), Rational(1), 10); }) == ErrorCode::NotCertified);
}

TEST_CASE("flows match the naive exponential series") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Ring r = gen::ring_of(static_cast<std::size_t>(rng.range(1, 4)));
    const auto t = gen::triangular_lnd(rng, r);
    const Rational s = rng.rational(3, 2);
    CHECK(exp_flow(t.d, s).forward() == oracle::exp_series(t.d, s));
  }
}

TEST_CASE("words") {
  const Ring r2({"x", "y"});
  AutWord empty(r2);
  const std::vector<Rational> p{3, -1};
  CHECK(word_apply(empty, p) == p);
  const FlowStep sq(Derivation(r2, {Polynomial(r2), P(r2, "x^2")}), Rational(1));
  const FlowStep tr(Derivation::coordinate(r2, 0), Rational(1));
  // [sq, tr]: tr acts first, then sq.
  AutWord a(r2, {sq, tr});
  AutWord b(r2, {tr, sq});
  const std::vector<Rational> o{0, 0};
  CHECK(word_apply(a, o) == std::vector<Rational>{1, 1});
  CHECK(word_apply(b, o) == std::vector<Rational>{1, 0});
  CHECK(word_apply(word_compose(a, word_inverse(a)), p) == p);
  CHECK(word_to_map(a).forward() == compose(sq.map_at(Rational(1)), tr.map_at(Rational(1))));
  CHECK(volume_check(word_to_map(a)));
  CHECK_FALSE(volume_check(PolyMap(r2, {P(r2, "2*x"), P(r2, "y")})));
  CHECK(volume_check(PolyMap(r2, {P(r2, "2*x"), P(r2, "y/2")})));
  AutWord s(r2);
  s.push_back(sq.with_time(SymbolicTime{}));
  CHECK(code_of([&] { word_apply(s, o); }) == ErrorCode::SymbolicTime);
  CHECK(code_of([&] { s.push_back(tr.with_time(SymbolicTime{})); }) == ErrorCode::SymbolicCapture);
  const PolyMap sm = word_to_symbolic_map(s);
  CHECK(sm[1] == parse_polynomial(sm.ring(), "y + t*x^2"));
}

TEST_CASE("tangent of a replica flow") {
  const Ring r2({"x", "y"});
  const QMatrix t = tangent_of_replica_flow(Derivation::coordinate(r2, 1), P(r2, "x"), std::vector<Rational>{0, 0});
  CHECK(t == QMatrix({{1, 0}, {1, 1}}));
  const QMatrix id = tangent_of_replica_flow(nagata_field(), P(R3, "X^2"), std::vector<Rational>{0, 5, 2});
  CHECK(id == QMatrix::identity(3));
  const QMatrix n = tangent_of_replica_flow(nagata_field(), P(R3, "Y^2 - 2*X*Z"), std::vector<Rational>{1, 0, 0});
  QMatrix expect = QMatrix::identity(3);
  expect(1, 2) = Rational(-2);
  CHECK(n == expect);
  CHECK(code_of([&] { tangent_of_replica_flow(nagata_field(), P(R3, "X - 1"), std::vector<Rational>{0, 0, 0}); }) ==
        ErrorCode::NotFixed);
  CHECK(code_of([&] { tangent_of_replica_flow(nagata_field(), P(R3, "Y"), std::vector<Rational>{0, 0, 0}); }) ==
        ErrorCode::NotInvariant);
}

TEST_CASE("flex rank") {
  std::vector<Derivation> tr;
  for (std::size_t i = 0; i < 4; ++i) tr.push_back(Derivation::coordinate(R4, i));
  CHECK(flex_rank(tr, std::vector<Rational>{1, 2, 3, 4}) == 4);
  const Derivation d2 = Derivation::coordinate(R4, 3);
  const Derivation d1(R4, {P(R4, "Y"), P(R4, "Z"), Polynomial(R4), Polynomial(R4)});
  CHECK(flex_rank({d1, d2}, std::vector<Rational>{0, 1, 0, 0}) == 2);
  CHECK(flex_rank({}, std::vector<Rational>{0, 1, 0, 0}) == 0);
}

TEST_CASE("bracket of commuting coordinate fields vanishes") {
  const Derivation a = Derivation::coordinate(R3, 0);
  CHECK(bracket(a, Derivation::coordinate(R3, 1)).is_zero());
  CHECK(bracket(nagata_field(), Derivation::coordinate(R3, 1)) == Derivation(R3, {Polynomial(R3), Polynomial(R3), P(R3, "-1")}));
}
