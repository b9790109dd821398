#include "flexalg/lnd/tangent.hpp"

#include "flexalg/error.hpp"

namespace flexalg {

QMatrix tangent_of_replica_flow(const Derivation& d, const Polynomial& f, std::span<const Rational> p) {
  const std::size_t n = d.arity();
  if (p.size() != n)
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(p.size()) +
                                              " coordinates, ring has " + std::to_string(n));
  if (!in_kernel(d, f))
    throw Error(ErrorCode::NotInvariant, "'" + f.to_string() + "' is not in the kernel of the derivation");
  if (!f.evaluate(p).is_zero()) throw Error(ErrorCode::NotFixed, "f does not vanish at the point");
  const std::vector<Rational> v = d.at(p);
  QMatrix out = QMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational g = f.partial(j).evaluate(p);
    if (g.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) out(i, j) += v[i] * g;
  }
  return out;
}

std::size_t flex_rank(const std::vector<Derivation>& ds, std::span<const Rational> p) {
  if (ds.empty()) return 0;
  const Ring& ring = ds.front().ring();
  if (p.size() != ring.arity())
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(p.size()) +
                                              " coordinates, ring has " + std::to_string(ring.arity()));
  QMatrix rows(ds.size(), ring.arity());
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (!(ds[k].ring() == ring))
      throw Error(ErrorCode::RingMismatch, "derivations live in different rings", k);
    const auto v = ds[k].at(p);
    for (std::size_t j = 0; j < v.size(); ++j) rows(k, j) = v[j];
  }
  return rows.rank();
}

}  // namespace flexalg
