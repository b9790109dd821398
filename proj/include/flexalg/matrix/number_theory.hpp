#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "flexalg/poly/rational.hpp"

namespace flexalg::nt {

// Prime factors of |n| with multiplicity, ascending. n != 0. Throws
// BudgetExhausted when a cofactor resists Pollard rho within its budget.
std::vector<mpz_class> factor(const mpz_class& n);
// Squarefree integer s with n = s * k^2, same sign as n. n != 0.
mpz_class squarefree_part(const mpz_class& n);
// x with x^2 = a (mod p) for an odd prime or p = 2.
std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a, const mpz_class& p);
// x with x^2 = a (mod m) for squarefree m >= 1, reduced into (-m/2, m/2].
std::optional<mpz_class> sqrt_mod_squarefree(const mpz_class& a, const mpz_class& m);
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace flexalg::nt
