#include "flexalg/jet/realize.hpp"

#include "flexalg/error.hpp"
#include "flexalg/jet/jet.hpp"
#include "flexalg/random.hpp"

namespace flexalg {

QMatrix Transvection::matrix(std::size_t n) const {
  QMatrix m = QMatrix::identity(n);
  m(row, col) += coeff;
  return m;
}

std::vector<Transvection> sl_factor(const QMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "matrix is not square");
  if (!(a.det() == Rational(1)))
    throw Error(ErrorCode::DeterminantNotOne, "determinant is " + a.det().to_string() + ", not 1");
  const std::size_t n = a.rows();
  QMatrix u = a;
  // Row operations L with L_k ... L_1 A = I; each is row i += c * row j.
  std::vector<Transvection> ops;
  auto row_op = [&](std::size_t i, std::size_t j, const Rational& c) {
    if (c.is_zero()) return;
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
    ops.push_back({i, j, c});
  };

  // Upper triangular form.
  for (std::size_t col = 0; col + 1 < n; ++col) {
    if (u(col, col).is_zero()) {
      std::size_t r = col + 1;
      while (r < n && u(r, col).is_zero()) ++r;
      if (r == n) throw Error(ErrorCode::Internal, "singular column during elementary factorization");
      row_op(col, r, Rational(1));
    }
    for (std::size_t r = col + 1; r < n; ++r) row_op(r, col, -(u(r, col) / u(col, col)));
  }
  // Push each diagonal entry into the next one, leaving 1 behind.
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const Rational d = u(p, p);
    if (d == Rational(1)) continue;
    row_op(p + 1, p, d.inverse());
    row_op(p, p + 1, Rational(1) - d);
    row_op(p + 1, p, Rational(-1));
  }
  // Clear above the diagonal.
  for (std::size_t col = n; col-- > 1;)
    for (std::size_t r = 0; r < col; ++r) row_op(r, col, -u(r, col));
  if (!(u == QMatrix::identity(n)))
    throw Error(ErrorCode::Internal, "elementary factorization did not reach the identity");

  std::vector<Transvection> factors;
  factors.reserve(ops.size());
  for (const auto& op : ops) factors.push_back({op.row, op.col, -op.coeff});
  return factors;
}

namespace {

std::size_t nonzero_count(const std::vector<Rational>& v) {
  std::size_t c = 0;
  for (const auto& x : v) c += x.is_zero() ? 0 : 1;
  return c;
}

std::vector<Rational> difference(std::span<const Rational> a, std::span<const Rational> b) {
  std::vector<Rational> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Direct construction; needs every z - p to have a nonzero coordinate off
// each factor's row.
AutWord realize_direct(const Ring& ring, const std::vector<Transvection>& factors,
                       std::span<const Rational> p,
                       const std::vector<std::vector<Rational>>& frozen, unsigned order_m) {
  AutWord word(ring);
  for (const auto& t : factors) {
    const std::size_t mu = t.row;
    Polynomial f = Polynomial::variable(ring, t.col) - Polynomial::constant(ring, p[t.col]);
    f = f.scaled(t.coeff);
    for (const auto& z : frozen) {
      std::size_t i = 0;
      while (i < ring.arity() && (i == mu || p[i] == z[i])) ++i;
      if (i == ring.arity()) throw Error(ErrorCode::Internal, "frozen point not separable off the flow axis");
      const Polynomial h = (Polynomial::variable(ring, i) - Polynomial::constant(ring, z[i]))
                               .scaled((p[i] - z[i]).inverse());
      f *= h.pow(order_m + 1);
    }
    std::vector<Polynomial> coeffs(ring.arity(), Polynomial(ring));
    coeffs[mu] = std::move(f);
    word.push_back(FlowStep(Derivation(ring, std::move(coeffs)), Rational(1)));
  }
  return word;
}

}  // namespace

AutWord realize_linear_part(const Ring& ring, const QMatrix& a, std::span<const Rational> p,
                            const std::vector<std::vector<Rational>>& frozen, unsigned order_m,
                            const RealizeOptions& options) {
  const std::size_t n = ring.arity();
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "matrix is not square");
  if (a.rows() != n) throw Error(ErrorCode::ArityMismatch, "matrix size does not match the ring");
  if (p.size() != n) throw Error(ErrorCode::ArityMismatch, "base point has the wrong number of coordinates");
  for (std::size_t k = 0; k < frozen.size(); ++k) {
    if (frozen[k].size() != n)
      throw Error(ErrorCode::ArityMismatch, "frozen point has the wrong number of coordinates", k);
    if (std::equal(frozen[k].begin(), frozen[k].end(), p.begin()))
      throw Error(ErrorCode::FrozenCoincidence, "frozen point coincides with the base point", k);
  }
  const auto factors = sl_factor(a);

  bool axis_aligned = false;
  for (const auto& z : frozen) axis_aligned = axis_aligned || nonzero_count(difference(z, p)) == 1;

  AutWord word(ring);
  if (!axis_aligned) {
    word = realize_direct(ring, factors, p, frozen, order_m);
  } else {
    // Work in coordinates phi(x) = p + C(x - p) where no frozen point sits on
    // a coordinate axis through p, then push the flows forward through phi.
    Rng rng(options.seed);
    std::optional<QMatrix> conj;
    for (int attempt = 0; attempt < 256 && !conj; ++attempt) {
      QMatrix c = QMatrix::identity(n);
      for (std::size_t k = 0; k < 2 * n; ++k) {
        const auto i = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        c = c * Transvection{i, j, rng.nonzero_rational(3)}.matrix(n);
      }
      const QMatrix ci = c.inverse();
      bool ok = true;
      for (const auto& z : frozen) ok = ok && nonzero_count(ci * difference(z, p)) >= 2;
      if (ok) conj = c;
    }
    if (!conj) throw Error(ErrorCode::Internal, "no coordinate change moves frozen points off the axes");
    const QMatrix& c = *conj;
    const QMatrix ci = c.inverse();
    std::vector<std::vector<Rational>> local_frozen;
    for (const auto& z : frozen) {
      auto v = ci * difference(z, p);
      for (std::size_t i = 0; i < n; ++i) v[i] += p[i];
      local_frozen.push_back(std::move(v));
    }
    const AutWord local = realize_direct(ring, sl_factor(ci * a * c), p, local_frozen, order_m);
    // phi^{-1}(x) = p + C^{-1}(x - p)
    std::vector<Polynomial> phi_inv;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial img = Polynomial::constant(ring, p[i]);
      for (std::size_t j = 0; j < n; ++j)
        if (!ci(i, j).is_zero())
          img += (Polynomial::variable(ring, j) - Polynomial::constant(ring, p[j])).scaled(ci(i, j));
      phi_inv.push_back(std::move(img));
    }
    for (const auto& step : local.steps()) {
      const Derivation& d = step.derivation();
      std::size_t mu = 0;
      while (d[mu].is_zero()) ++mu;
      const Polynomial g = d[mu].substitute(phi_inv, ring);
      std::vector<Polynomial> coeffs;
      for (std::size_t i = 0; i < n; ++i) coeffs.push_back(g.scaled(c(i, mu)));
      word.push_back(FlowStep(Derivation(ring, std::move(coeffs)), step.rational_time()));
    }
  }

  if (!(jet_of(word, p, 1).linear_part() == a))
    throw Error(ErrorCode::Internal, "realized word has the wrong linear part");
  for (std::size_t k = 0; k < frozen.size(); ++k) {
    const auto& z = frozen[k];
    if (order_m == 0) {
      if (word_apply(word, z) != z) throw Error(ErrorCode::Internal, "realized word moves a frozen point", k);
    } else if (!jet_of(word, z, order_m).is_identity_to(order_m)) {
      throw Error(ErrorCode::Internal, "realized word has a nontrivial jet at a frozen point", k);
    }
  }
  return word;
}

}  // namespace flexalg
