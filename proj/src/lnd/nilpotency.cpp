#include "flexalg/lnd/nilpotency.hpp"

#include <algorithm>

#include "flexalg/error.hpp"

namespace flexalg {

bool is_triangular(const Derivation& d) {
  const std::size_t n = d.arity();
  // 0 = unvisited, 1 = on the DFS stack, 2 = finished
  std::vector<int> state(n, 0);
  auto cyclic = [&](auto&& self, std::size_t v) -> bool {
    state[v] = 1;
    for (std::size_t w = 0; w < n; ++w) {
      if (!d[v].involves(w)) continue;
      if (state[w] == 1) return true;
      if (state[w] == 0 && self(self, w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (state[v] == 0 && cyclic(cyclic, v)) return false;
  return true;
}

NilpotencyCertificate certify_nilpotent(const Derivation& d, unsigned bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "nilpotency bound must be at least 1");
  NilpotencyCertificate cert;
  cert.triangular = is_triangular(d);
  cert.bound = bound;
  const Ring& ring = d.ring();
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    Polynomial g = Polynomial::variable(ring, i);
    unsigned order = 0;
    while (!g.is_zero()) {
      if (!cert.triangular && order >= bound) {
        cert.status = NilpotencyStatus::ExceededBound;
        cert.orders.clear();
        return cert;
      }
      g = derive(d, g);
      ++order;
    }
    cert.orders.push_back(order);
  }
  cert.status = NilpotencyStatus::Nilpotent;
  if (!cert.orders.empty())
    cert.bound = std::max(bound, *std::max_element(cert.orders.begin(), cert.orders.end()));
  return cert;
}

}  // namespace flexalg
