#pragma once

#include <vector>

#include "flexalg/lnd/derivation.hpp"

namespace flexalg {

inline constexpr unsigned kDefaultNilpotencyBound = 64;

enum class NilpotencyStatus { Nilpotent, ExceededBound };

struct NilpotencyCertificate {
  NilpotencyStatus status = NilpotencyStatus::ExceededBound;
  // orders[i] = smallest n with d^n(x_i) = 0; empty unless Nilpotent.
  std::vector<unsigned> orders;
  // Iteration cap actually used. For structurally triangular derivations the
  // orders are exact regardless of the requested cap, and `bound` is raised
  // to the largest order so that orders <= bound always holds.
  unsigned bound = 0;
  // True when nilpotency follows from an acyclic variable dependency graph.
  bool triangular = false;

  bool nilpotent() const noexcept { return status == NilpotencyStatus::Nilpotent; }
};

// True when some ordering of the variables makes each d(x_i) depend only on
// variables strictly before x_i.
bool is_triangular(const Derivation& d);

// Semi-decision: ExceededBound does not prove that d is not locally nilpotent.
// Throws InvalidArgument for bound 0 and TermCapExceeded on blow-up.
NilpotencyCertificate certify_nilpotent(const Derivation& d,
                                        unsigned bound = kDefaultNilpotencyBound);

}  // namespace flexalg
