#include "flexalg/poly/poly_map.hpp"

#include <algorithm>

#include "flexalg/error.hpp"

namespace flexalg {

PolyMap::PolyMap(Ring ring, std::vector<Polynomial> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_.arity())
    throw Error(ErrorCode::ArityMismatch, "map needs one image per ring variable, got " +
                                              std::to_string(images_.size()) + " for " +
                                              std::to_string(ring_.arity()));
  for (const auto& p : images_)
    if (!(p.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "map image lives in another ring");
}

PolyMap PolyMap::identity(const Ring& ring) {
  std::vector<Polynomial> images;
  images.reserve(ring.arity());
  for (std::size_t i = 0; i < ring.arity(); ++i) images.push_back(Polynomial::variable(ring, i));
  return PolyMap(ring, std::move(images));
}

std::vector<Rational> PolyMap::apply(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(images_.size());
  for (const auto& p : images_) out.push_back(p.evaluate(point));
  return out;
}

int PolyMap::total_degree() const noexcept {
  int d = -1;
  for (const auto& p : images_) d = std::max(d, p.total_degree());
  return d;
}

PolyMap PolyMap::truncated(unsigned max_degree) const {
  std::vector<Polynomial> images;
  images.reserve(images_.size());
  for (const auto& p : images_) images.push_back(p.truncated(max_degree));
  return PolyMap(ring_, std::move(images));
}

PolyMap compose(const PolyMap& f, const PolyMap& g, std::optional<unsigned> max_degree) {
  if (!(f.ring() == g.ring())) throw Error(ErrorCode::RingMismatch, "cannot compose maps over different rings");
  std::vector<Polynomial> images;
  images.reserve(f.arity());
  for (const auto& p : f.images()) images.push_back(p.substitute(g.images(), g.ring(), max_degree));
  return PolyMap(f.ring(), std::move(images));
}

PolyMatrix jacobian(const PolyMap& f) {
  const std::size_t n = f.arity();
  PolyMatrix j(f.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) j(i, k) = f[i].partial(k);
  return j;
}

Polynomial jacobian_det(const PolyMap& f) { return determinant(jacobian(f)); }

QMatrix linear_part_at(const PolyMap& f, std::span<const Rational> p) {
  return jacobian(f).evaluate(p);
}

}  // namespace flexalg
