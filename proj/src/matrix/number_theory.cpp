#include "flexalg/matrix/number_theory.hpp"

#include <algorithm>

#include "flexalg/error.hpp"

namespace flexalg::nt {

namespace {

bool is_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Cycle length cap per polynomial and number of polynomials tried; together
// they bound the work to a few million modular squarings.
constexpr unsigned long kRhoMaxCycle = 1ul << 18;
constexpr unsigned long kRhoPolynomials = 4;

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c <= kRhoPolynomials; ++c) {
    mpz_class y = 2, x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && r <= kRhoMaxCycle);
    if (g == 1) continue;
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  throw Error(ErrorCode::BudgetExhausted, "integer factorization exceeded its iteration budget");
}

void factor_into(mpz_class n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

std::vector<mpz_class> factor(const mpz_class& n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor zero");
  mpz_class rest = abs(n);
  std::vector<mpz_class> out;
  for (unsigned long p = 2; p < 5000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      out.emplace_back(p);
      rest /= p;
    }
  }
  factor_into(rest, out);
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class squarefree_part(const mpz_class& n) {
  const auto primes = factor(n);
  mpz_class s = 1;
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    if ((j - i) % 2 == 1) s *= primes[i];
    i = j;
  }
  return n < 0 ? mpz_class(-s) : s;
}

std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a_in, const mpz_class& p) {
  const mpz_class a = mod(a_in, p);
  if (p == 2 || a == 0) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  // Tonelli-Shanks.
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  auto powm = [&](const mpz_class& b, const mpz_class& e) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  mpz_class c = powm(z, q);
  mpz_class x = powm(a, (q + 1) / 2);
  mpz_class t = powm(a, q);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
    x = (x * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    m = i;
  }
  return x;
}

std::optional<mpz_class> sqrt_mod_squarefree(const mpz_class& a, const mpz_class& m) {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  mpz_class x = 0;
  mpz_class modulus = 1;
  if (m > 1) {
    for (const auto& p : factor(m)) {
      const auto r = sqrt_mod_prime(a, p);
      if (!r) return std::nullopt;
      // Combine x (mod modulus) with r (mod p).
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
      const mpz_class k = mod((*r - x) * inv, p);
      x += k * modulus;
      modulus *= p;
    }
  }
  x = mod(x, m);
  if (2 * x > m) x -= m;
  return x;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

}  // namespace flexalg::nt
