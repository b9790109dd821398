#pragma once

#include <string>
#include <vector>

#include "flexalg/lnd/flow.hpp"

namespace flexalg::gallery {

struct Assertion {
  std::string name;
  bool pass = false;
  // The exact value that was computed, as text.
  std::string value;
};

struct Report {
  std::string name;
  std::vector<Assertion> assertions;
  bool all_pass() const noexcept;
  void check(std::string assertion, bool pass, std::string value);
};

// On k[X, Y, Z]: d = X d/dY + Y d/dZ, f = Y^2 - 2XZ and exp(f d).
struct Nagata {
  Derivation derivation;
  Polynomial invariant;
  PolyAutomorphism automorphism;
};

Nagata nagata();
Report nagata_report();

// H_1-invariants p_1..p_4 on k[X, Y, Z, U] and the two section formulas.
Report conter_report();

// The two kernels on k[X, Y, Z, U] and the orbits {Y = 1, Z = 0}, {Y = -1, Z = 0}.
Report nonsep_report();

struct Sl2Params {
  long p = 0, q = 0, m = 0;
  long k = 0, a = 0, b = 0, c = 0, d = 0;
  long r0 = 0, d0 = 0, s0 = 0;
};

// Throws InvalidArgument unless 0 < p < q, gcd(p, q) = 1 and m >= 1.
// (d0, s0) has the least s0 >= 1 with d0 q - s0 p = k; r0 is the least
// nonnegative solution of the reduced congruence.
Sl2Params sl2_params(long p, long q, long m);

struct Sl2Lnd {
  Sl2Params params;
  // On k[X1, X2, X3, X4, Y].
  Derivation derivation;
  Report report;
};

Sl2Lnd sl2_lnd(long p, long q, long m);

}  // namespace flexalg::gallery
