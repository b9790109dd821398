#pragma once

#include <cstdint>
#include <random>

#include "flexalg/poly/rational.hpp"

namespace flexalg {

// Seeded generator with platform-independent output: draws come straight
// from mt19937_64 reduced by modulo, never from std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform-ish integer in [lo, hi].
  long range(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }
  bool coin() { return (engine_() & 1u) != 0; }
  // num/den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(long max_num, long max_den = 1) {
    return Rational(range(-max_num, max_num), range(1, max_den));
  }
  Rational nonzero_rational(long max_num, long max_den = 1) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace flexalg
