#include "flexalg/interp/interpolation.hpp"

#include <set>

#include "flexalg/error.hpp"
#include "flexalg/random.hpp"

namespace flexalg {

FlowStep shear(const Ring& ring, std::size_t i, const Polynomial& p) {
  if (i >= ring.arity()) throw Error(ErrorCode::UnknownVariable, "shear variable index out of range");
  if (!(p.ring() == ring)) throw Error(ErrorCode::RingMismatch, "shear polynomial lives in another ring");
  if (p.involves(i))
    throw Error(ErrorCode::InvalidArgument, "shear polynomial involves its own variable " + ring.name(i));
  std::vector<Polynomial> coeffs(ring.arity(), Polynomial(ring));
  coeffs[i] = p;
  return FlowStep(Derivation(ring, std::move(coeffs)), Rational(1));
}

void validate_point_set(const Ring& ring, const std::vector<Point>& points) {
  if (ring.arity() < 2) throw Error(ErrorCode::InvalidArgument, "interpolation needs at least two variables");
  std::set<Point> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != ring.arity())
      throw Error(ErrorCode::ArityMismatch, "point has the wrong number of coordinates", i);
    if (!seen.insert(points[i]).second) throw Error(ErrorCode::DuplicatePoint, "repeated point", i);
  }
}

namespace {

bool first_coordinates_distinct(const std::vector<Point>& points) {
  std::set<Rational> firsts;
  for (const auto& p : points)
    if (!firsts.insert(p[0]).second) return false;
  return true;
}

Polynomial linear_form(const Ring& ring, const std::vector<Rational>& c) {
  Polynomial q(ring);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!c[j].is_zero()) q += Polynomial::variable(ring, j + 1).scaled(c[j]);
  return q;
}

bool separates(const Polynomial& q, const std::vector<Point>& points) {
  std::set<Rational> firsts;
  for (const auto& p : points)
    if (!firsts.insert(p[0] + q.evaluate(p)).second) return false;
  return true;
}

// Lagrange interpolant through (xs[i], ys[i]) in the variable x_1.
Polynomial lagrange(const Ring& ring, const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const Polynomial x = Polynomial::variable(ring, 0);
  Polynomial out(ring);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i].is_zero()) continue;
    Polynomial basis = Polynomial::constant(ring, ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) basis *= (x - Polynomial::constant(ring, xs[j])).scaled((xs[i] - xs[j]).inverse());
    out += basis;
  }
  return out;
}

CurveCertificate build_curve(const Ring& ring, const std::vector<Point>& points, const Polynomial& q) {
  const std::size_t n = ring.arity();
  AutWord word(ring);
  std::vector<Point> moved = points;
  if (!q.is_zero()) {
    const FlowStep sep = shear(ring, 0, q);
    for (auto& p : moved) p = sep.apply(p);
    word.push_back(sep.inverted());
  }
  std::vector<Rational> times;
  for (const auto& p : moved) times.push_back(p[0]);
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<Rational> ys;
    for (const auto& p : moved) ys.push_back(p[j]);
    const Polynomial pj = lagrange(ring, times, ys);
    if (!pj.is_zero()) word.push_back(shear(ring, j, pj));
  }
  const PolyAutomorphism g = word_to_map(word);
  std::vector<Polynomial> coeffs;
  for (const auto& gi : g.forward().images())
    coeffs.push_back(gi.partial(0).substitute(g.inverse().images(), ring));
  const Ring param({"t"});
  std::vector<Polynomial> axis(n, Polynomial(param));
  axis[0] = Polynomial::variable(param, 0);
  std::vector<Polynomial> gamma;
  for (const auto& gi : g.forward().images()) gamma.push_back(gi.substitute(axis, param));
  return CurveCertificate{std::move(word), Derivation(ring, std::move(coeffs)), std::move(times), param,
                          std::move(gamma)};
}

bool avoids(const CurveCertificate& c, const std::vector<Point>& avoid) {
  for (const auto& a : avoid)
    if (curve_meets(c, a)) return false;
  return true;
}

}  // namespace

AutWord separate_first_coordinates(const Ring& ring, const std::vector<Point>& points) {
  validate_point_set(ring, points);
  AutWord word(ring);
  if (first_coordinates_distinct(points)) return word;
  const std::size_t k = ring.arity() - 1;
  for (long s = 1; s <= 8; ++s) {
    // Coefficient vectors with max |c_j| = s, fewest nonzero entries first,
    // positive before negative; the first candidate is x_2.
    for (std::size_t support = 1; support <= k; ++support) {
      std::vector<long> c(k, 0);
      auto visit = [&](auto&& self, std::size_t pos, std::size_t used, bool hit_max) -> std::optional<Polynomial> {
        if (pos == k) {
          if (used != support || !hit_max) return std::nullopt;
          std::vector<Rational> rc(c.begin(), c.end());
          Polynomial q = linear_form(ring, rc);
          if (separates(q, points)) return q;
          return std::nullopt;
        }
        if (k - pos > support - used)
          if (auto r = self(self, pos + 1, used, hit_max)) return r;
        if (used < support)
          for (long mag = 1; mag <= s; ++mag)
            for (long sign : {1L, -1L}) {
              c[pos] = sign * mag;
              auto r = self(self, pos + 1, used + 1, hit_max || mag == s);
              c[pos] = 0;
              if (r) return r;
            }
        return std::nullopt;
      };
      if (auto q = visit(visit, 0, 0, false)) {
        word.push_back(shear(ring, 0, *q));
        return word;
      }
    }
  }
  throw Error(ErrorCode::BudgetExhausted, "no separating shear found among small linear forms");
}

CurveCertificate ga_orbit_through(const Ring& ring, const std::vector<Point>& points, const std::vector<Point>& avoid,
                                  const CurveOptions& options) {
  validate_point_set(ring, points);
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "no points to interpolate");
  const std::set<Point> in_set(points.begin(), points.end());
  for (std::size_t i = 0; i < avoid.size(); ++i) {
    if (avoid[i].size() != ring.arity())
      throw Error(ErrorCode::ArityMismatch, "avoid point has the wrong number of coordinates", i);
    if (in_set.count(avoid[i])) throw Error(ErrorCode::DuplicatePoint, "avoid point lies in the point set", i);
  }
  const AutWord sep = separate_first_coordinates(ring, points);
  Polynomial q = sep.empty() ? Polynomial(ring) : sep.steps().front().derivation()[0];
  CurveCertificate c = build_curve(ring, points, q);
  if (avoids(c, avoid)) return c;
  Rng rng(options.seed);
  for (unsigned attempt = 0; attempt < options.budget; ++attempt) {
    // Quadratic terms are needed: with a linear Q two points always give
    // the same straight line.
    const long range = 2 + attempt / 8;
    q = Polynomial(ring);
    for (std::size_t j = 1; j < ring.arity(); ++j) {
      const Polynomial xj = Polynomial::variable(ring, j);
      q += xj.scaled(Rational(rng.range(-range, range)));
      for (std::size_t k = j; k < ring.arity(); ++k)
        q += (xj * Polynomial::variable(ring, k)).scaled(Rational(rng.range(-range, range)));
    }
    if (!separates(q, points)) continue;
    c = build_curve(ring, points, q);
    if (avoids(c, avoid)) return c;
  }
  throw Error(ErrorCode::BudgetExhausted,
              "curve still meets an avoid point after " + std::to_string(options.budget) + " separating shears");
}

std::vector<Rational> evaluate_curve(const CurveCertificate& c, const Rational& t) {
  const std::vector<Rational> at{t};
  std::vector<Rational> out;
  for (const auto& g : c.parameterization) out.push_back(g.evaluate(at));
  return out;
}

bool curve_meets(const CurveCertificate& c, const Point& a) {
  // gamma(t) = a  iff  g^{-1}(a) = (t, 0, ..., 0).
  const auto back = word_apply(word_inverse(c.word), a);
  for (std::size_t j = 1; j < back.size(); ++j)
    if (!back[j].is_zero()) return false;
  return true;
}

bool verify_curve(const CurveCertificate& c, const std::vector<Point>& points, const std::vector<Point>& avoid) {
  if (c.times.size() != points.size()) return false;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (evaluate_curve(c, c.times[i]) != points[i]) return false;
  // Tangency: derivation(gamma(t)) = gamma'(t) as polynomials in t.
  for (std::size_t i = 0; i < c.parameterization.size(); ++i) {
    const Polynomial lhs = c.derivation[i].substitute(c.parameterization, c.parameter_ring);
    if (!(lhs == c.parameterization[i].partial(0))) return false;
  }
  if (!volume_check(word_to_map(c.word))) return false;
  return avoids(c, avoid);
}

}  // namespace flexalg
