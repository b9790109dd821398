#include <doctest.h>

#include "flexalg/jet/jet.hpp"
#include "flexalg/lnd/tangent.hpp"
#include "flexalg/matrix/transport.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace flexalg;

TEST_CASE("property: flows form a one-parameter group") {
  Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const Ring r = gen::ring_of(static_cast<std::size_t>(rng.range(1, 4)));
    const auto t = gen::triangular_lnd(rng, r);
    const Rational s = rng.rational(3, 2), u = rng.rational(3, 2);
    const FlowStep f(t.d, Rational(1));
    CHECK(compose(f.map_at(s), f.map_at(u)) == f.map_at(s + u));
    CHECK(f.map_at(Rational(0)) == PolyMap::identity(r));
  }
}

TEST_CASE("property: replicas of triangular fields stay nilpotent and preserve invariants") {
  Rng rng(102);
  for (int trial = 0; trial < 25; ++trial) {
    const Ring r = gen::ring_of(static_cast<std::size_t>(rng.range(2, 4)));
    const auto t = gen::triangular_lnd(rng, r);
    const Polynomial f = gen::invariant_of(rng, t);
    const Derivation rf = replica(t.d, f);
    CHECK(certify_nilpotent(rf).nilpotent());
    const Polynomial h = gen::invariant_of(rng, t);
    CHECK(h.substitute(exp_flow(rf, rng.rational(2, 3)).forward().images(), r) == h);
  }
}

TEST_CASE("property: words have unit jacobian and invert exactly") {
  Rng rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const Ring r = gen::ring_of(static_cast<std::size_t>(rng.range(2, 3)));
    const AutWord w = gen::word(rng, r, 4);
    const PolyAutomorphism a = word_to_map(w);
    CHECK(jacobian_det(a.forward()) == Polynomial::constant(r, Rational(1)));
    CHECK(compose(a.forward(), a.inverse()) == PolyMap::identity(r));
    const auto p = gen::point(rng, r.arity());
    CHECK(word_apply(word_inverse(w), word_apply(w, p)) == p);
  }
}

TEST_CASE("property: psi is additive on near-identity jets") {
  Rng rng(104);
  for (int trial = 0; trial < 20; ++trial) {
    const Ring r = gen::ring_of(static_cast<std::size_t>(rng.range(2, 3)));
    const unsigned m = static_cast<unsigned>(rng.range(2, 3));
    const std::vector<Rational> base(r.arity(), Rational(0));
    auto random_form = [&] {
      std::vector<Polynomial> forms;
      std::vector<std::size_t> all(r.arity());
      std::iota(all.begin(), all.end(), 0);
      for (std::size_t i = 0; i < r.arity(); ++i) forms.push_back(gen::poly_in(rng, r, all, m).homogeneous_part(m));
      return HomForm(r, m, forms);
    };
    const HomForm a = random_form(), b = random_form();
    const Jet ja = jet_from_psi(a, base), jb = jet_from_psi(b, base);
    CHECK(psi(jet_compose(ja, jb)) == a + b);
  }
}

TEST_CASE("property: tangent formula matches the extracted linear part") {
  Rng rng(105);
  for (int trial = 0; trial < 20; ++trial) {
    const Ring r = gen::ring_of(static_cast<std::size_t>(rng.range(2, 4)));
    const auto t = gen::triangular_lnd(rng, r);
    const auto p = gen::point(rng, r.arity());
    Polynomial f = gen::invariant_of(rng, t);
    f -= Polynomial::constant(r, f.evaluate(p));
    const QMatrix lp = linear_part_at(exp_flow(replica(t.d, f), Rational(1)).forward(), p);
    CHECK(tangent_of_replica_flow(t.d, f, p) == lp);
  }
}

TEST_CASE("property: invariant bases are constant along elementary moves") {
  Rng rng(106);
  for (auto mode : {MatrixMode::Generic, MatrixMode::Symmetric, MatrixMode::Skew}) {
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rng.range(2, 4));
      const std::size_t m = mode == MatrixMode::Generic ? static_cast<std::size_t>(rng.range(2, 4)) : n;
      const MatrixSpace sp(n, m, mode);
      const auto gens = sp.generators();
      const auto g = gens[static_cast<std::size_t>(rng.range(0, static_cast<long>(gens.size()) - 1))];
      const auto b = gen::matrix_point(rng, mode, n, m, static_cast<std::size_t>(rng.range(0, std::min(n, m))));
      const auto moved = elem_action(g, rng.rational(3, 2), b);
      for (const auto& f : invariant_basis(sp, g)) CHECK(f.evaluate(sp.coordinates(b)) == f.evaluate(sp.coordinates(moved)));
    }
  }
}
