#include "flexalg/jet/jet.hpp"

#include "flexalg/error.hpp"

namespace flexalg {

Jet::Jet(std::vector<Rational> base, unsigned order, PolyMap images)
    : base_(std::move(base)), order_(order), images_(std::move(images)) {
  if (order_ == 0) throw Error(ErrorCode::InvalidArgument, "jet order must be at least 1");
  if (base_.size() != images_.arity())
    throw Error(ErrorCode::ArityMismatch, "jet base point has the wrong number of coordinates");
  for (const auto& p : images_.images()) {
    if (!p.constant_term().is_zero()) throw Error(ErrorCode::InvalidArgument, "jet image has a constant term");
    if (p.total_degree() > static_cast<int>(order_))
      throw Error(ErrorCode::InvalidArgument, "jet image exceeds the jet order");
  }
}

Jet Jet::identity(const Ring& ring, std::vector<Rational> base, unsigned order) {
  return Jet(std::move(base), order, PolyMap::identity(ring));
}

QMatrix Jet::linear_part() const {
  const std::size_t n = images_.arity();
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[j] = 1;
      a(i, j) = images_[i].coefficient(e);
    }
  return a;
}

bool Jet::is_identity_to(unsigned k) const {
  const Ring& r = ring();
  for (std::size_t i = 0; i < images_.arity(); ++i) {
    const Polynomial diff = images_[i] - Polynomial::variable(r, i);
    if (!diff.is_zero() && diff.lowest_degree() <= static_cast<int>(k)) return false;
  }
  return true;
}

HomForm::HomForm(Ring ring, unsigned degree, std::vector<Polynomial> forms)
    : ring_(std::move(ring)), degree_(degree), forms_(std::move(forms)) {
  if (forms_.size() != ring_.arity())
    throw Error(ErrorCode::ArityMismatch, "one form per ring variable is required");
  for (const auto& f : forms_) {
    if (!(f.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "form lives in another ring");
    if (!f.is_homogeneous(degree_))
      throw Error(ErrorCode::NotHomogeneous,
                  "'" + f.to_string() + "' is not homogeneous of degree " + std::to_string(degree_));
  }
}

HomForm HomForm::zero(const Ring& ring, unsigned degree) {
  return HomForm(ring, degree, std::vector<Polynomial>(ring.arity(), Polynomial(ring)));
}

HomForm operator+(const HomForm& a, const HomForm& b) {
  if (!(a.ring_ == b.ring_) || a.degree_ != b.degree_)
    throw Error(ErrorCode::InvalidArgument, "forms of different shape");
  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i < a.forms_.size(); ++i) forms.push_back(a.forms_[i] + b.forms_[i]);
  return HomForm(a.ring_, a.degree_, std::move(forms));
}

HomForm operator*(const Rational& c, const HomForm& h) {
  std::vector<Polynomial> forms;
  for (const auto& f : h.forms_) forms.push_back(f.scaled(c));
  return HomForm(h.ring_, h.degree_, std::move(forms));
}

namespace {

// Absolute-coordinate expansion x = p + u, to be pushed through the steps.
PolyMap translated_identity(const Ring& ring, std::span<const Rational> p) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring.arity(); ++i)
    images.push_back(Polynomial::variable(ring, i) + Polynomial::constant(ring, p[i]));
  return PolyMap(ring, std::move(images));
}

Jet finish(const PolyMap& phi, std::span<const Rational> p, unsigned m) {
  const Ring& ring = phi.ring();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (!(phi[i].constant_term() == p[i]))
      throw Error(ErrorCode::NotFixed, "the point is not fixed by the map");
    images.push_back(phi[i] - Polynomial::constant(ring, p[i]));
  }
  return Jet(std::vector<Rational>(p.begin(), p.end()), m, PolyMap(ring, std::move(images)));
}

void check_jet_args(const Ring& ring, std::span<const Rational> p, unsigned m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "jet order must be at least 1");
  if (p.size() != ring.arity())
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(p.size()) +
                                              " coordinates, ring has " + std::to_string(ring.arity()));
}

}  // namespace

Jet jet_of(const AutWord& w, std::span<const Rational> p, unsigned m) {
  check_jet_args(w.ring(), p, m);
  const auto image = word_apply(w, p);
  if (!std::equal(image.begin(), image.end(), p.begin()))
    throw Error(ErrorCode::NotFixed, "the word does not fix the point");
  PolyMap phi = translated_identity(w.ring(), p);
  for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it)
    phi = compose(it->map_at(it->rational_time()), phi, m);
  return finish(phi, p, m);
}

Jet jet_of_map(const PolyMap& f, std::span<const Rational> p, unsigned m) {
  check_jet_args(f.ring(), p, m);
  return finish(compose(f, translated_identity(f.ring(), p), m), p, m);
}

Jet jet_compose(const Jet& a, const Jet& b) {
  if (a.order() != b.order() || a.base() != b.base() || !(a.ring() == b.ring()))
    throw Error(ErrorCode::InvalidArgument, "jets differ in base point, order or ring");
  return Jet(a.base(), a.order(), compose(a.images(), b.images(), a.order()));
}

HomForm psi(const Jet& j) {
  const unsigned m = j.order();
  if (m >= 2 && !j.is_identity_to(m - 1))
    throw Error(ErrorCode::NotIdentityToOrder,
                "jet is not the identity modulo degree " + std::to_string(m));
  std::vector<Polynomial> forms;
  for (const auto& img : j.images().images()) forms.push_back(img.homogeneous_part(m));
  return HomForm(j.ring(), m, std::move(forms));
}

Jet jet_from_psi(const HomForm& h, std::vector<Rational> base) {
  if (h.degree() == 0) throw Error(ErrorCode::InvalidArgument, "form degree must be at least 1");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < h.forms().size(); ++i) {
    if (h.degree() == 1) images.push_back(h.forms()[i]);
    else images.push_back(Polynomial::variable(h.ring(), i) + h.forms()[i]);
  }
  return Jet(std::move(base), h.degree(), PolyMap(h.ring(), std::move(images)));
}

Polynomial kappa(const HomForm& h) {
  if (h.degree() == 0) throw Error(ErrorCode::InvalidArgument, "form degree must be at least 1");
  Polynomial div(h.ring());
  for (std::size_t i = 0; i < h.forms().size(); ++i) div += h.forms()[i].partial(i);
  return div;
}

bool is_volume_jet(const Jet& j) {
  if (j.order() == 1) return j.linear_part().det() == Rational(1);
  return kappa(psi(j)).is_zero();
}

}  // namespace flexalg
