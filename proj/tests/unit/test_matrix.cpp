#include <doctest.h>

#include "flexalg/error.hpp"
#include "flexalg/matrix/normal_forms.hpp"
#include "flexalg/matrix/number_theory.hpp"
#include "flexalg/matrix/quadratic_forms.hpp"
#include "flexalg/matrix/transport.hpp"
#include "support/generators.hpp"

using namespace flexalg;

namespace {
template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

QMatrix elementary(std::size_t n, std::size_t i, std::size_t j, const Rational& t) {
  QMatrix e = QMatrix::identity(n);
  e(i, j) += t;
  return e;
}

// Reference action by explicit matrix products.
QMatrix act(const ElemGenerator& g, const Rational& t, const QMatrix& b) {
  switch (g.side) {
    case Side::Row:
      return elementary(b.rows(), g.l, g.k, t) * b;
    case Side::Col:
      return b * elementary(b.cols(), g.k, g.l, t);
    case Side::Congruence: {
      const QMatrix p = elementary(b.rows(), g.k, g.l, t);
      return p * b * p.transpose();
    }
  }
  return b;
}

ElemGenerator random_generator(Rng& rng, const MatrixSpace& s) {
  const auto gens = s.generators();
  return gens[static_cast<std::size_t>(rng.range(0, static_cast<long>(gens.size()) - 1))];
}
}  // namespace

TEST_CASE("elementary actions") {
  const MatrixPoint b(QMatrix({{1, 2}, {3, 4}}), MatrixMode::Generic);
  CHECK(elem_action({Side::Col, 0, 1}, Rational(1), b).entries() == QMatrix({{1, 3}, {3, 7}}));
  CHECK(elem_action({Side::Row, 0, 1}, Rational(0), b) == b);
  const MatrixPoint s(QMatrix({{2, 5}, {5, 7}}), MatrixMode::Symmetric);
  const Rational t(3);
  CHECK(elem_action({Side::Congruence, 0, 1}, t, s)(0, 0) == Rational(2) + Rational(2) * t * 5 + t * t * 7);
  CHECK(code_of([&] { elem_action({Side::Congruence, 0, 1}, t, b); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { elem_action({Side::Row, 0, 1}, t, s); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("elementary actions match matrix products and derivation flows") {
  Rng rng(17);
  for (auto mode : {MatrixMode::Generic, MatrixMode::Symmetric, MatrixMode::Skew}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rng.range(2, 4));
      const std::size_t m = mode == MatrixMode::Generic ? static_cast<std::size_t>(rng.range(2, 4)) : n;
      const MatrixSpace space(n, m, mode);
      const auto b = gen::matrix_point(rng, mode, n, m, static_cast<std::size_t>(rng.range(0, std::min(n, m))));
      const auto g = random_generator(rng, space);
      const Rational t = rng.rational(3, 2);
      const MatrixPoint moved = elem_action(g, t, b);
      CHECK(moved.entries() == act(g, t, b.entries()));
      const PolyAutomorphism flow = exp_flow(generator_derivation(space, g), t);
      CHECK(flow.forward().apply(space.coordinates(b)) == space.coordinates(moved));
    }
  }
}

TEST_CASE("invariant bases") {
  const MatrixSpace g22(2, 2, MatrixMode::Generic);
  const Ring& r = g22.ring();
  const auto basis = invariant_basis(g22, {Side::Col, 0, 1});
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == parse_polynomial(r, "b11"));
  CHECK(basis[1] == parse_polynomial(r, "b21"));
  CHECK(basis[2] == parse_polynomial(r, "b11*b22 - b21*b12"));
  const MatrixSpace s3(3, 3, MatrixMode::Symmetric);
  const auto sb = invariant_basis(s3, {Side::Congruence, 0, 1});
  const Polynomial minor = parse_polynomial(s3.ring(), "b11*b22 - b12^2");
  CHECK(std::find(sb.begin(), sb.end(), minor) != sb.end());
  for (auto mode : {MatrixMode::Generic, MatrixMode::Symmetric, MatrixMode::Skew}) {
    const MatrixSpace sp(3, 3, mode);
    for (const auto& gen : sp.generators())
      for (const auto& f : invariant_basis(sp, gen)) CHECK(in_kernel(generator_derivation(sp, gen), f));
  }
}

TEST_CASE("signatures") {
  const auto id = signature(MatrixPoint(QMatrix::identity(3), MatrixMode::Generic));
  CHECK(id.rank == 3);
  CHECK(id.det == Rational(1));
  CHECK(signature(MatrixPoint(QMatrix(2, 3), MatrixMode::Generic)).rank == 0);
  const auto sk = signature(MatrixPoint(QMatrix({{0, 2}, {-2, 0}}), MatrixMode::Skew));
  CHECK(sk.rank == 2);
  CHECK(sk.pf == Rational(2));
  CHECK(code_of([] { MatrixPoint(QMatrix({{1, 2}, {3, 4}}), MatrixMode::Symmetric); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { MatrixPoint(QMatrix({{0, 2}, {2, 0}}), MatrixMode::Skew); }) == ErrorCode::NotSkewSymmetric);
  CHECK(code_of([] { MatrixPoint(QMatrix({{0, 2, 1}}), MatrixMode::Skew); }) == ErrorCode::NotSquare);
}

TEST_CASE("separating invariants") {
  const MatrixSpace sp(2, 2, MatrixMode::Generic);
  const ElemGenerator g{Side::Col, 0, 1};
  const MatrixPoint b(QMatrix({{1, 0}, {0, 1}}), MatrixMode::Generic);
  CHECK(separating_invariant(sp, g, b, {}) == Polynomial::constant(sp.ring(), Rational(1)));
  const MatrixPoint z(QMatrix({{0, 0}, {0, 1}}), MatrixMode::Generic);
  CHECK(separating_invariant(sp, g, b, {z}) == parse_polynomial(sp.ring(), "b11"));
  const MatrixPoint same = elem_action(g, Rational(5), b);
  try {
    separating_invariant(sp, g, b, {z, same});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSeparated);
    CHECK(e.index() == std::optional<std::size_t>(1));
  }
}

TEST_CASE("number theory helpers") {
  CHECK(nt::factor(mpz_class(360)) == std::vector<mpz_class>{2, 2, 2, 3, 3, 5});
  CHECK(nt::factor(mpz_class("1000000016000000063")) == std::vector<mpz_class>{mpz_class(1000000007), mpz_class(1000000009)});
  CHECK(nt::squarefree_part(mpz_class(-72)) == -2);
  for (long p : {3L, 5L, 13L, 17L, 10007L}) {
    for (long a = 1; a < 20; ++a) {
      const auto r = nt::sqrt_mod_prime(mpz_class(a), mpz_class(p));
      bool is_square = false;
      for (long x = 0; x < std::min(p, 20000L); ++x)
        if ((x * x - a) % p == 0) is_square = true;
      CHECK(r.has_value() == is_square);
      if (r) CHECK((*r * *r - a) % p == 0);
    }
  }
  CHECK(nt::rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(nt::rational_sqrt(Rational(2)).has_value());
}

TEST_CASE("rational representation by diagonal forms") {
  CHECK(qf::legendre_solve(mpz_class(2), mpz_class(7)).has_value());
  CHECK_FALSE(qf::legendre_solve(mpz_class(-1), mpz_class(-1)).has_value());
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{5, 41}, {-3, 7}, {2, 7}, {13, 17}, {-7, 11}}) {
    const auto s = qf::legendre_solve(mpz_class(a), mpz_class(b));
    if (s) CHECK((*s)[2] * (*s)[2] == a * (*s)[0] * (*s)[0] + b * (*s)[1] * (*s)[1]);
  }
  // Solutions stay near the Holzer size z^2 <= |ab|.
  Rng pairs(3);
  int solved = 0;
  for (int i = 0; i < 400; ++i) {
    const mpz_class a = nt::squarefree_part(mpz_class(pairs.nonzero_rational(2000000).numerator()));
    const mpz_class b = nt::squarefree_part(mpz_class(pairs.nonzero_rational(2000000).numerator()));
    const auto s = qf::legendre_solve(a, b);
    if (!s) continue;
    ++solved;
    const auto& [x, y, z] = *s;
    CHECK(z * z == a * x * x + b * y * y);
    CHECK(z * z <= 2 * abs(a * b));
  }
  CHECK(solved > 10);
  const auto xy = qf::represent_binary(Rational(1), Rational(1), Rational(5));
  REQUIRE(xy.has_value());
  CHECK(xy->first * xy->first + xy->second * xy->second == Rational(5));
  CHECK_FALSE(qf::represent_binary(Rational(1), Rational(1), Rational(3)).has_value());
  CHECK_FALSE(qf::represent_binary(Rational(1), Rational(1), Rational(-1)).has_value());
  Rng rng(4);
  const std::vector<Rational> d{1, 2, -3};
  const auto x = qf::represent(d, Rational(7, 5), rng);
  REQUIRE(x.has_value());
  CHECK(d[0] * (*x)[0] * (*x)[0] + d[1] * (*x)[1] * (*x)[1] + d[2] * (*x)[2] * (*x)[2] == Rational(7, 5));
}

TEST_CASE("diagonal isometries") {
  Rng rng(9);
  const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> cases{
      {{1, 1}, {2, 2}}, {{1, 2}, {3, 6}}, {{1, -1}, {5, -5}}, {{1, 1, 1}, {2, 2, 1}}, {{2, 3, -1}, {1, -6, 1}},
      // Diagonalized round-trip pairs whose naive Witt recursion exhausts the factoring budget.
      {{-5, Rational(24, 5), Rational(-51, 2), Rational(-243, 17)},
       {112, Rational(-1905, 7), Rational(-34923, 1270), Rational(-243, 23282)}},
      {{-6, Rational(41, 3), Rational(-518, 41), Rational(3456, 259)},
       {-2020146, Rational(24157157, 1010073), Rational(-297269078, 24157157), Rational(3456, 148634539)}}};
  for (const auto& [from, to] : cases) {
    const auto g = qf::diagonal_isometry(from, to, rng);
    REQUIRE(g.has_value());
    QMatrix df(from.size(), from.size()), dt(to.size(), to.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
      df(i, i) = from[i];
      dt(i, i) = to[i];
    }
    CHECK(*g * df * g->transpose() == dt);
  }
  // x^2 + y^2 and 3x^2 + 3y^2 are not rationally equivalent.
  CHECK_FALSE(qf::diagonal_isometry({1, 1}, {3, 3}, rng).has_value());
  // Same rank and square class of det, but the Hasse invariant at 3 differs.
  CHECK_FALSE(qf::diagonal_isometry({1, 1, 1}, {3, 1, 3}, rng).has_value());
}

TEST_CASE("normal forms") {
  Rng rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.range(2, 4));
    const std::size_t m = static_cast<std::size_t>(rng.range(2, 4));
    const std::size_t r = static_cast<std::size_t>(rng.range(0, std::min(n, m)));
    const auto b = gen::matrix_point(rng, MatrixMode::Generic, n, m, r);
    const QMatrix nf = run_steps(generic_normal_form(b), b).entries();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Rational expect = (i == j && i < r) ? Rational(1) : Rational(0);
        if (n == m && r == n && i == n - 1 && j == n - 1) expect = b.entries().det();
        CHECK(nf(i, j) == expect);
      }
    const auto s = gen::matrix_point(rng, MatrixMode::Skew, n, n, 2 * static_cast<std::size_t>(rng.range(0, n / 2)));
    const QMatrix sk = run_steps(skew_normal_form(s), s).entries();
    CHECK(signature(MatrixPoint(sk, MatrixMode::Skew)) == signature(s));
    const auto q = gen::matrix_point(rng, MatrixMode::Symmetric, n, n, static_cast<std::size_t>(rng.range(0, n)));
    const QMatrix dq = run_steps(symmetric_diagonal_form(q), q).entries();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(dq(i, j).is_zero());
  }
}

TEST_CASE("transport examples") {
  const MatrixPoint a(QMatrix({{1, 0}, {0, 0}}), MatrixMode::Generic);
  const MatrixPoint b(QMatrix({{0, 1}, {2, 0}}), MatrixMode::Generic);
  const auto same = transport({a, b}, {a, b});
  CHECK(same.word.empty());
  CHECK(verify(same));
  try {
    transport({a, b}, {a, a});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicatePoint);
  }
  const MatrixPoint c(QMatrix({{1, 1}, {1, 1}}), MatrixMode::Generic);
  try {
    transport({a, b}, {c, MatrixPoint(QMatrix({{0, 3}, {0, 0}}), MatrixMode::Generic)});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SignatureMismatch);
    CHECK(e.index() == std::optional<std::size_t>(1));
  }
  const MatrixPoint s1(QMatrix({{1, 0}, {0, 0}}), MatrixMode::Symmetric);
  const MatrixPoint s2(QMatrix({{4, 2}, {2, 1}}), MatrixMode::Symmetric);
  CHECK(code_of([&] { transport({s1}, {s2}); }) == ErrorCode::UnsupportedStratum);
}

TEST_CASE("transport past a normal form on a placed target's orbit line") {
  // Every planned path for the second matrix passes a point sharing the
  // invariants of its next step with the first target.
  const auto k = [](std::vector<std::vector<Rational>> rows) { return MatrixPoint(QMatrix(rows), MatrixMode::Skew); };
  const std::vector<MatrixPoint> src{k({{0, 2, -2}, {-2, 0, -1}, {2, 1, 0}}), k({{0, 3, -2}, {-3, 0, -2}, {2, 2, 0}})};
  const std::vector<MatrixPoint> dst{k({{0, 3, 0}, {-3, 0, -1}, {0, 1, 0}}), k({{0, 5, 6}, {-5, 0, -2}, {-6, 2, 0}})};
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto cert = transport(src, dst, TransportOptions{seed});
    CHECK(verify(cert));
  }
}

TEST_CASE("transport round trip and tampering") {
  Rng rng(33);
  const MatrixSpace sp(3, 3, MatrixMode::Generic);
  std::vector<MatrixPoint> src, dst;
  for (std::size_t i = 0; i < 3; ++i) src.push_back(gen::matrix_point(rng, MatrixMode::Generic, 3, 3, 3 - i));
  dst = src;
  for (int step = 0; step < 6; ++step) {
    const auto g = random_generator(rng, sp);
    const Rational t = rng.nonzero_rational(2, 2);
    for (auto& d : dst) d = elem_action(g, t, d);
  }
  auto cert = transport(src, dst, TransportOptions{5});
  REQUIRE(cert.verified);
  CHECK(verify(cert));
  const AutWord w = to_aut_word(cert);
  for (std::size_t i = 0; i < src.size(); ++i) CHECK(word_apply(w, sp.coordinates(src[i])) == sp.coordinates(dst[i]));
  REQUIRE_FALSE(cert.word.empty());
  auto bad_time = cert;
  bad_time.word.back().time += Rational(1);
  CHECK_FALSE(verify(bad_time));
  auto bad_coeff = cert;
  const ElemGenerator g = bad_coeff.word.front().generator;
  // A variable that the generator moves is not invariant.
  const std::size_t moved_row = g.side == Side::Row ? g.l : 0;
  const std::size_t moved_col = g.side == Side::Col ? g.l : 0;
  bad_coeff.word.front().coeff = parse_polynomial(sp.ring(), "b" + std::to_string(moved_row + 1) + std::to_string(moved_col + 1));
  CHECK_FALSE(verify(bad_coeff));
}
