#pragma once

#include <vector>

#include "flexalg/matrix/matrix_space.hpp"
#include "flexalg/random.hpp"

namespace flexalg {

// One elementary move: B -> elem_action(generator, t, B).
struct ElemStep {
  ElemGenerator generator;
  Rational t;
};

MatrixPoint run_steps(const std::vector<ElemStep>& steps, MatrixPoint b);
// Steps undoing `steps`: reversed order, negated times.
std::vector<ElemStep> inverse_steps(const std::vector<ElemStep>& steps);

// Steps bringing a generic matrix to diag(1, ..., 1, 0, ...), or to
// diag(1, ..., 1, det) when it is square of full rank. Pivots are taken in
// row-major order.
std::vector<ElemStep> generic_normal_form(const MatrixPoint& b);
// Congruence steps bringing a skew matrix to a direct sum of blocks
// [[0, 1], [-1, 0]] and zeros; at full rank the last block carries Pf(B).
std::vector<ElemStep> skew_normal_form(const MatrixPoint& b);
// Congruence steps bringing a symmetric matrix to a diagonal matrix whose
// nonzero entries come first.
std::vector<ElemStep> symmetric_diagonal_form(const MatrixPoint& b);

// Steps carrying `from` onto `to`, which must share a signature. Throws
// SeparationFailure when no rational congruence is found (symmetric mode).
std::vector<ElemStep> plan_path(const MatrixPoint& from, const MatrixPoint& to, Rng& rng);

}  // namespace flexalg
