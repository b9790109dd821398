#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "flexalg/jet/realize.hpp"
#include "flexalg/poly/qmatrix.hpp"
#include "flexalg/random.hpp"

namespace flexalg::qf {

// Nontrivial integer (X, Y, Z) with Z^2 = a X^2 + b Y^2, for squarefree
// nonzero a, b; nullopt when none exists. Throws BudgetExhausted when a
// modulus is too hard to factor.
std::optional<std::array<mpz_class, 3>> legendre_solve(const mpz_class& a, const mpz_class& b);

// Rational (x, y) with s1 x^2 + s2 y^2 = c, for s1, s2, c nonzero. Throws
// BudgetExhausted like legendre_solve.
std::optional<std::pair<Rational, Rational>> represent_binary(const Rational& s1, const Rational& s2,
                                                              const Rational& c);

// Rational x with sum_i d_i x_i^2 = c, for nonzero d_i and c.
std::optional<std::vector<Rational>> represent(const std::vector<Rational>& d, const Rational& c, Rng& rng);

// Congruence steps S <- P S P^T with P = I + coeff E(row, col), in the order
// applied, that bring the symmetric matrix S to diagonal form with the
// nonzero diagonal entries first. S is updated in place.
std::vector<Transvection> congruence_diagonalize(QMatrix& s);

// P in SL_n with P S P^T diagonal (S symmetric); returns P and the diagonal.
std::pair<QMatrix, std::vector<Rational>> diagonalize(const QMatrix& s);

// G in GL_r with G diag(from) G^T = diag(to), for nonzero entries; nullopt
// when no rational isometry is found.
std::optional<QMatrix> diagonal_isometry(const std::vector<Rational>& from,
                                         const std::vector<Rational>& to, Rng& rng);

}  // namespace flexalg::qf
