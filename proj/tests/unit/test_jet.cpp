#include <doctest.h>

#include "flexalg/error.hpp"
#include "flexalg/jet/jet.hpp"
#include "flexalg/jet/realize.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace flexalg;

namespace {
const Ring R2({"x", "y"});
Polynomial P(const Ring& r, std::string_view s) { return parse_polynomial(r, s); }
const std::vector<Rational> O2{0, 0};
template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}
FlowStep shear_y_x2() { return FlowStep(Derivation(R2, {Polynomial(R2), P(R2, "x^2")}), Rational(1)); }
}  // namespace

TEST_CASE("jets of words") {
  CHECK(jet_of(AutWord(R2), std::vector<Rational>{4, 1}, 3) == Jet::identity(R2, {4, 1}, 3));
  const AutWord w(R2, {shear_y_x2()});
  CHECK(jet_of(w, O2, 1).is_identity_to(1));
  CHECK(jet_of(w, O2, 2).images() == PolyMap(R2, {P(R2, "x"), P(R2, "y + x^2")}));
  const AutWord t(R2, {FlowStep(Derivation::coordinate(R2, 0), Rational(1))});
  CHECK(code_of([&] { jet_of(t, O2, 1); }) == ErrorCode::NotFixed);
}

TEST_CASE("psi and kappa") {
  CHECK(psi(Jet::identity(R2, O2, 2)) == HomForm::zero(R2, 2));
  const Jet j1(O2, 2, PolyMap(R2, {P(R2, "x"), P(R2, "y + x^2")}));
  const Jet j2(O2, 2, PolyMap(R2, {P(R2, "x + y^2"), P(R2, "y")}));
  CHECK(psi(j1).forms() == std::vector<Polynomial>{Polynomial(R2), P(R2, "x^2")});
  CHECK(psi(jet_compose(j1, j2)).forms() == std::vector<Polynomial>{P(R2, "y^2"), P(R2, "x^2")});
  CHECK(kappa(HomForm(R2, 2, {P(R2, "x^2"), Polynomial(R2)})) == P(R2, "2*x"));
  CHECK(kappa(HomForm(R2, 2, {P(R2, "x^2"), P(R2, "-2*x*y")})).is_zero());
  CHECK(kappa(HomForm::zero(R2, 3)).is_zero());
  CHECK(code_of([&] { HomForm(R2, 2, {P(R2, "x"), Polynomial(R2)}); }) == ErrorCode::NotHomogeneous);
  const Jet lin(O2, 2, PolyMap(R2, {P(R2, "2*x"), P(R2, "y")}));
  CHECK(code_of([&] { psi(lin); }) == ErrorCode::NotIdentityToOrder);
  CHECK(jet_from_psi(psi(j1), O2) == j1);
}

TEST_CASE("volume jets") {
  CHECK(is_volume_jet(Jet(O2, 1, PolyMap(R2, {P(R2, "x + y"), P(R2, "y")}))));
  CHECK_FALSE(is_volume_jet(Jet(O2, 1, PolyMap(R2, {P(R2, "2*x"), P(R2, "y")}))));
  CHECK(is_volume_jet(Jet(O2, 2, PolyMap(R2, {P(R2, "x + x^2"), P(R2, "y - 2*x*y")}))));
  CHECK_FALSE(is_volume_jet(Jet(O2, 2, PolyMap(R2, {P(R2, "x + x^2"), P(R2, "y")}))));
}

TEST_CASE("jet_of agrees with truncating the full map") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Ring r = gen::ring_of(static_cast<std::size_t>(rng.range(2, 3)));
    const AutWord w = gen::word(rng, r, 3);
    const PolyMap f = word_to_map(w).forward();
    const auto p = gen::point(rng, r.arity());
    const auto q = f.apply(p);
    const unsigned m = static_cast<unsigned>(rng.range(1, 3));
    // Conjugate by a translation so that p is fixed.
    std::vector<Polynomial> back;
    for (std::size_t i = 0; i < r.arity(); ++i)
      back.push_back(Polynomial::variable(r, i) + Polynomial::constant(r, p[i] - q[i]));
    AutWord fixed = w;
    for (std::size_t i = 0; i < r.arity(); ++i)
      if (!(p[i] == q[i])) fixed = word_compose(AutWord(r, {FlowStep(Derivation::coordinate(r, i), p[i] - q[i])}), fixed);
    const Jet j = jet_of(fixed, p, m);
    const PolyMap full = compose(PolyMap(r, back), f);
    CHECK(j.images().images() == oracle::local_jet(full, p, m));
  }
}

TEST_CASE("sl_factor") {
  Rng rng(3);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      QMatrix a = gen::matrix(rng, n, n, 3);
      const Rational det = a.det();
      if (det.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) a(0, j) /= det;
      REQUIRE(a.det() == Rational(1));
      const auto factors = sl_factor(a);
      CHECK(factors.size() <= n * n + 3 * n - 4);
      QMatrix prod = QMatrix::identity(n);
      for (const auto& t : factors) prod = prod * t.matrix(n);
      CHECK(prod == a);
    }
  CHECK(code_of([] { sl_factor(QMatrix({{2, 0}, {0, 1}})); }) == ErrorCode::DeterminantNotOne);
  CHECK(code_of([] { sl_factor(QMatrix({{1, 0, 0}})); }) == ErrorCode::NotSquare);
}

TEST_CASE("realize_linear_part examples") {
  CHECK(jet_of(realize_linear_part(R2, QMatrix::identity(2), O2, {}, 1), O2, 1).is_identity_to(1));
  const QMatrix u({{1, 1}, {0, 1}});
  const AutWord wu = realize_linear_part(R2, u, O2, {}, 1);
  CHECK(jet_of(wu, O2, 1).linear_part() == u);
  const QMatrix rot({{0, 1}, {-1, 0}});
  const std::vector<std::vector<Rational>> frozen{{3, 0}};
  const AutWord wr = realize_linear_part(R2, rot, O2, frozen, 1);
  CHECK(wr.size() >= 3);
  CHECK(jet_of(wr, O2, 1).linear_part() == rot);
  CHECK(jet_of(wr, frozen[0], 1).is_identity_to(1));
  CHECK(code_of([&] { realize_linear_part(R2, QMatrix({{2, 0}, {0, 1}}), O2, {}, 1); }) ==
        ErrorCode::DeterminantNotOne);
  CHECK(code_of([&] { realize_linear_part(R2, u, O2, {{0, 0}}, 1); }) == ErrorCode::FrozenCoincidence);
}

TEST_CASE("realize_linear_part with higher frozen order") {
  Rng rng(8);
  const Ring r = gen::ring_of(3);
  const std::vector<Rational> p{1, 0, -1};
  const std::vector<std::vector<Rational>> frozen{{1, 2, -1}, {0, 1, 1}};
  QMatrix a({{1, 2, 0}, {0, 1, 0}, {1, 1, 1}});
  REQUIRE(a.det() == Rational(1));
  const AutWord w = realize_linear_part(r, a, p, frozen, 2, RealizeOptions{7});
  CHECK(jet_of(w, p, 1).linear_part() == a);
  for (const auto& z : frozen) CHECK(jet_of(w, z, 2).is_identity_to(2));
  CHECK(volume_check(word_to_map(w)));
}
