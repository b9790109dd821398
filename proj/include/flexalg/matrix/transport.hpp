#pragma once

#include <cstdint>
#include <vector>

#include "flexalg/lnd/aut_word.hpp"
#include "flexalg/matrix/matrix_space.hpp"

namespace flexalg {

struct TransportOptions {
  std::uint64_t seed = 0;
  // Random separating pre-moves allowed per target before giving up.
  unsigned retry_budget = 32;
  // Largest number of replicas in a certificate word.
  std::size_t word_cap = 10000;
};

struct TransportProblem {
  MatrixMode mode = MatrixMode::Generic;
  std::vector<MatrixPoint> sources;
  std::vector<MatrixPoint> targets;
};

// `word` is listed in application order: word[0] acts first. (AutWord uses
// the opposite convention; to_aut_word converts.)
struct TransportCertificate {
  TransportProblem problem;
  std::vector<ElemReplica> word;
  bool verified = false;
};

// Moves every source onto its paired target with one word of elementary
// replicas. Targets are placed one at a time; each elementary move of the
// current matrix is realized by a replica whose coefficient vanishes on the
// targets already placed.
// Errors, in the order checked: InvalidArgument (lengths, shapes, modes),
// DuplicatePoint, SignatureMismatch, UnsupportedStratum (symmetric rank < 2),
// then SeparationFailure / BudgetExhausted from the search.
TransportCertificate transport(const std::vector<MatrixPoint>& sources, const std::vector<MatrixPoint>& targets,
                               const TransportOptions& options = {});

// Re-applies the word to every source with exact arithmetic; true iff every
// image equals its target and every coefficient lies in its generator's kernel.
bool verify(const TransportCertificate& c);

// The certificate word as flows on the coordinate ring of the matrix space.
AutWord to_aut_word(const TransportCertificate& c);

}  // namespace flexalg
