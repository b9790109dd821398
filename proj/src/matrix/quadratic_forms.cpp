#include "flexalg/matrix/quadratic_forms.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "flexalg/error.hpp"
#include "flexalg/matrix/number_theory.hpp"

namespace flexalg::qf {

namespace {

using Vec3 = std::array<mpz_class, 3>;

mpz_class modp(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Square root of -u / v modulo |m|, 0 for |m| = 1.
std::optional<mpz_class> ratio_root(const mpz_class& u, const mpz_class& v, const mpz_class& m) {
  const mpz_class am = abs(m);
  if (am == 1) return mpz_class(0);
  mpz_class inv;
  mpz_class vm = modp(v, am);
  if (mpz_invert(inv.get_mpz_t(), vm.get_mpz_t(), am.get_mpz_t()) == 0) return std::nullopt;
  return nt::sqrt_mod_squarefree(modp(-u * inv, am), am);
}

// Integer vector congruent to a mod |ma|, b mod |mb|, c mod |mc| (coprime moduli).
Vec3 crt3(const std::array<std::pair<Vec3, mpz_class>, 3>& parts) {
  Vec3 out{0, 0, 0};
  mpz_class modulus = 1;
  for (const auto& [v, m0] : parts) {
    const mpz_class m = abs(m0);
    if (m == 1) continue;
    mpz_class inv;
    const mpz_class mm = modp(modulus, m);
    mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), m.get_mpz_t());
    for (std::size_t i = 0; i < 3; ++i) out[i] += modp((v[i] - out[i]) * inv, m) * modulus;
    modulus *= m;
  }
  return out;
}

// Basis of the lattice spanned by the rows, by integer row reduction.
std::array<Vec3, 3> lattice_basis(std::vector<Vec3> rows) {
  std::array<Vec3, 3> basis;
  for (std::size_t col = 0; col < 3; ++col) {
    for (;;) {
      std::size_t piv = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col]))) piv = i;
      bool done = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == piv || rows[i][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[piv][col].get_mpz_t());
        for (std::size_t k = 0; k < 3; ++k) rows[i][k] -= q * rows[piv][k];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        basis[col] = rows[piv];
        rows.erase(rows.begin() + static_cast<long>(piv));
        break;
      }
    }
  }
  return basis;
}

// LLL reduction (delta 3/4) for the inner product with diagonal weights w.
void lll(std::array<Vec3, 3>& b, const Vec3& w) {
  std::size_t k = 1;
  for (int guard = 0; k < 3 && guard < 10000; ++guard) {
    // Gram-Schmidt from scratch; three vectors keep this cheap.
    std::array<std::array<mpq_class, 3>, 3> mu;
    std::array<mpq_class, 3> bstar_norm;
    std::array<std::array<mpq_class, 3>, 3> bstar;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t c = 0; c < 3; ++c) bstar[i][c] = b[i][c];
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class num = 0;
        for (std::size_t c = 0; c < 3; ++c) num += mpq_class(w[c]) * mpq_class(b[i][c]) * bstar[j][c];
        mu[i][j] = num / bstar_norm[j];
        for (std::size_t c = 0; c < 3; ++c) bstar[i][c] -= mu[i][j] * bstar[j][c];
      }
      bstar_norm[i] = 0;
      for (std::size_t c = 0; c < 3; ++c) bstar_norm[i] += mpq_class(w[c]) * bstar[i][c] * bstar[i][c];
    }
    bool reduced = false;
    for (std::size_t j = k; j-- > 0;) {
      // q = round(mu[k][j])
      mpz_class q;
      mpz_class n2 = 2 * mu[k][j].get_num() + mu[k][j].get_den();
      mpz_class d2 = 2 * mu[k][j].get_den();
      mpz_fdiv_q(q.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
      if (q != 0) {
        for (std::size_t c = 0; c < 3; ++c) b[k][c] -= q * b[j][c];
        reduced = true;
        break;
      }
    }
    if (reduced) continue;
    const mpq_class lhs = bstar_norm[k];
    const mpq_class rhs = (mpq_class(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * bstar_norm[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

// Solution of A x^2 + B y^2 + C z^2 = 0 with A, B, C pairwise coprime and
// squarefree, from a reduced basis of the lattice of vectors on which the
// form vanishes modulo ABC. Its short vectors are small solutions.
std::optional<Vec3> legendre_lattice(const mpz_class& A, const mpz_class& B, const mpz_class& C) {
  const auto lambda = ratio_root(B, A, C);  // x = lambda y mod C
  const auto mu = ratio_root(C, B, A);      // y = mu z mod A
  const auto nu = ratio_root(A, C, B);      // z = nu x mod B
  if (!lambda || !mu || !nu) return std::nullopt;
  const mpz_class m = abs(A * B * C);
  const Vec3 u1 = crt3({std::pair{Vec3{*lambda, 1, 0}, C}, std::pair{Vec3{1, 0, 0}, A}, std::pair{Vec3{1, 0, *nu}, B}});
  const Vec3 u2 = crt3({std::pair{Vec3{0, 0, 1}, C}, std::pair{Vec3{0, *mu, 1}, A}, std::pair{Vec3{0, 1, 0}, B}});
  auto basis = lattice_basis({u1, u2, Vec3{m, 0, 0}, Vec3{0, m, 0}, Vec3{0, 0, m}});
  const Vec3 w{abs(A), abs(B), abs(C)};
  lll(basis, w);
  std::optional<Vec3> best;
  mpz_class best_norm;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j)
      for (int k = -3; k <= 3; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        Vec3 v;
        for (std::size_t c = 0; c < 3; ++c) v[c] = i * basis[0][c] + j * basis[1][c] + k * basis[2][c];
        if (A * v[0] * v[0] + B * v[1] * v[1] + C * v[2] * v[2] != 0) continue;
        const mpz_class norm = w[0] * v[0] * v[0] + w[1] * v[1] * v[1] + w[2] * v[2] * v[2];
        if (!best || norm < best_norm) {
          best = v;
          best_norm = norm;
        }
      }
  if (best) {
    mpz_class g = gcd(gcd((*best)[0], (*best)[1]), (*best)[2]);
    for (auto& v : *best) v /= g;
  }
  return best;
}

}  // namespace

std::optional<std::array<mpz_class, 3>> legendre_solve(const mpz_class& a, const mpz_class& b) {
  if (a == 1) return std::array<mpz_class, 3>{1, 0, 1};
  if (b == 1) return std::array<mpz_class, 3>{0, 1, 1};
  if (a < 0 && b < 0) return std::nullopt;
  {
    // g a' x^2 + g b' y^2 = z^2 forces z = g z', leaving a' x^2 + b' y^2 - g z'^2 = 0.
    const mpz_class g = gcd(a, b);
    if (const auto v = legendre_lattice(a / g, b / g, -g)) return std::array<mpz_class, 3>{(*v)[0], (*v)[1], g * (*v)[2]};
  }
  if (abs(a) > abs(b)) {
    auto r = legendre_solve(b, a);
    if (r) std::swap((*r)[0], (*r)[1]);
    return r;
  }
  const mpz_class mb = abs(b);
  const auto t = nt::sqrt_mod_squarefree(a, mb);
  if (!t) return std::nullopt;
  const mpz_class k = (*t * *t - a) / b;
  if (k == 0) return std::array<mpz_class, 3>{1, 0, *t};
  const mpz_class kp = nt::squarefree_part(k);
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), mpz_class(k / kp).get_mpz_t());
  const auto r = legendre_solve(a, kp);
  if (!r) return std::nullopt;
  const auto& [x, y, z] = *r;
  std::array<mpz_class, 3> out{z + *t * x, kp * s * y, *t * z + a * x};
  mpz_class g = gcd(gcd(out[0], out[1]), out[2]);
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

namespace {

// r = a * u^2 with a a squarefree integer.
std::pair<mpz_class, Rational> split_square(const Rational& r) {
  const mpz_class a = nt::squarefree_part(mpz_class(r.numerator() * r.denominator()));
  const auto u = nt::rational_sqrt(r / Rational(a, mpz_class(1)));
  if (!u) throw Error(ErrorCode::Internal, "squarefree decomposition failed");
  return {a, *u};
}

}  // namespace

std::optional<std::pair<Rational, Rational>> represent_binary(const Rational& s1, const Rational& s2,
                                                              const Rational& c) {
  if (s1.is_zero() || s2.is_zero() || c.is_zero())
    throw Error(ErrorCode::InvalidArgument, "binary representation needs nonzero data");
  const Rational alpha = s1 / c;
  const Rational beta = s2 / c;
  const auto [a, u] = split_square(alpha);
  const auto [b, v] = split_square(beta);
  const auto sol = legendre_solve(a, b);
  if (!sol) return std::nullopt;
  const Rational x0((*sol)[0], mpz_class(1));
  const Rational y0((*sol)[1], mpz_class(1));
  const Rational z0((*sol)[2], mpz_class(1));
  if (!z0.is_zero()) return std::pair{x0 / (u * z0), y0 / (v * z0)};
  // (x0/u, y0/v) is isotropic for alpha x^2 + beta y^2, which is then a
  // hyperbolic plane and represents 1 along w + lambda e.
  const Rational w1 = x0 / u;
  const Rational w2 = y0 / v;
  const bool first = !(alpha * w1).is_zero();
  const Rational e1 = first ? Rational(1) : Rational(0);
  const Rational e2 = first ? Rational(0) : Rational(1);
  const Rational bilinear = alpha * w1 * e1 + beta * w2 * e2;
  const Rational qe = alpha * e1 * e1 + beta * e2 * e2;
  const Rational lambda = (Rational(1) - qe) / (Rational(2) * bilinear);
  return std::pair{lambda * w1 + e1, lambda * w2 + e2};
}

namespace {

// Integer in the square class of a nonzero rational.
mpz_class class_integer(const Rational& r) { return r.numerator() * r.denominator(); }

// Hilbert symbol (a, b)_p for nonzero integers; p = 0 is the real place.
int hilbert(mpz_class a, mpz_class b, const mpz_class& p) {
  if (p == 0) return a < 0 && b < 0 ? -1 : 1;
  const unsigned long alpha = mpz_remove(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  const unsigned long beta = mpz_remove(b.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
  if (p == 2) {
    const auto mod8 = [](const mpz_class& u) { return mpz_fdiv_ui(u.get_mpz_t(), 8); };
    const auto eps = [&](const mpz_class& u) { return ((mod8(u) - 1) / 2) & 1ul; };
    const auto omega = [&](const mpz_class& u) { return ((mod8(u) * mod8(u) - 1) / 8) & 1ul; };
    const unsigned long e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
    return e % 2 == 1 ? -1 : 1;
  }
  int sign = 1;
  if ((alpha & 1) && (beta & 1) && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) sign = -sign;
  if (beta & 1) sign *= mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
  if (alpha & 1) sign *= mpz_legendre(b.get_mpz_t(), p.get_mpz_t());
  return sign;
}

mpz_class non_residue(const mpz_class& p) {
  mpz_class n = 2;
  while (mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) != -1) ++n;
  return n;
}

// Representatives of Q_p^* / Q_p^*2; p = 0 is the real place.
std::vector<mpz_class> square_classes(const mpz_class& p) {
  if (p == 0) return {1, -1};
  if (p == 2) return {1, 3, 5, 7, 2, 6, 10, 14};
  const mpz_class n = non_residue(p);
  return {1, n, p, n * p};
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return inv;
}

// Rational (x, y, z) with a x^2 + b y^2 + e z^2 = c, all data nonzero.
// The form represents c iff <a, b> and <c, -e> represent a common t. Such a t
// is assembled from a local square class at each bad place times one
// auxiliary prime q; the product formula settles the condition at q.
std::optional<std::array<Rational, 3>> represent_ternary(const Rational& a, const Rational& b, const Rational& e,
                                                         const Rational& c, Rng& rng, bool randomize) {
  const mpz_class A = class_integer(a), B = class_integer(b), E = class_integer(e), C = class_integer(c);
  std::vector<mpz_class> bad{2};
  for (const auto* v : {&A, &B, &E, &C})
    for (const auto& p : nt::factor(*v))
      if (std::find(bad.begin(), bad.end(), p) == bad.end()) bad.push_back(p);
  std::vector<mpz_class> places = bad;
  places.emplace_back(0);
  std::vector<mpz_class> chosen;
  for (const auto& v : places) {
    std::vector<mpz_class> ok;
    for (const auto& u : square_classes(v))
      if (hilbert(A * u, B * u, v) == 1 && hilbert(C * u, -E * u, v) == 1) ok.push_back(u);
    if (ok.empty()) return std::nullopt;
    chosen.push_back(randomize ? ok[static_cast<std::size_t>(rng.range(0, static_cast<long>(ok.size()) - 1))]
                               : ok.front());
  }
  // t = sign * prod p^{e_p} * q with q prime to every bad p.
  mpz_class base = chosen.back();
  std::vector<unsigned long> expo(bad.size());
  std::vector<mpz_class> unit(bad.size());
  for (std::size_t i = 0; i < bad.size(); ++i) {
    unit[i] = chosen[i];
    expo[i] = mpz_remove(unit[i].get_mpz_t(), unit[i].get_mpz_t(), bad[i].get_mpz_t());
    if (expo[i] == 1) base *= bad[i];
  }
  mpz_class residue = 0;
  mpz_class modulus = 1;
  for (std::size_t i = 0; i < bad.size(); ++i) {
    const mpz_class& p = bad[i];
    mpz_class others = base;
    if (expo[i] == 1) others /= p;
    mpz_class want;
    const mpz_class m = p == 2 ? mpz_class(8) : p;
    if (p == 2) {
      mpz_class inv = mod_inverse(others, m);
      want = (unit[i] * inv) % m;
      if (want < 0) want += m;
    } else {
      const int need = mpz_legendre(unit[i].get_mpz_t(), p.get_mpz_t()) * mpz_legendre(others.get_mpz_t(), p.get_mpz_t());
      want = need == 1 ? mpz_class(1) : non_residue(p);
    }
    // CRT: residue (mod modulus) combined with want (mod m).
    const mpz_class k = ((want - residue) * mod_inverse(modulus, m)) % m;
    residue += (k < 0 ? k + m : k) * modulus;
    modulus *= m;
  }
  std::size_t skip = randomize ? static_cast<std::size_t>(rng.range(0, 7)) : 0;
  mpz_class q = residue == 0 ? modulus : residue;
  for (int step = 0;; ++step, q += modulus) {
    if (step > 200000) throw Error(ErrorCode::BudgetExhausted, "no auxiliary prime found");
    if (q != 1 && mpz_probab_prime_p(q.get_mpz_t(), 30) == 0) continue;
    if (skip > 0) {
      --skip;
      continue;
    }
    break;
  }
  const Rational t(base * q, mpz_class(1));
  const auto xy = represent_binary(a, b, t);
  const auto wz = represent_binary(c, -e, t);
  if (!xy || !wz) return std::nullopt;
  const auto [x, y] = *xy;
  const auto [w, z] = *wz;
  if (!w.is_zero()) return std::array<Rational, 3>{x / w, y / w, z / w};
  // (x, y, z) is isotropic, so the form is universal: move along it from a
  // basis vector that pairs with it nontrivially.
  const std::array<Rational, 3> iso{x, y, z};
  const std::array<Rational, 3> d{a, b, e};
  for (std::size_t i = 0; i < 3; ++i) {
    if (iso[i].is_zero()) continue;
    const Rational lambda = (c - d[i]) / (Rational(2) * d[i] * iso[i]);
    std::array<Rational, 3> out{lambda * iso[0], lambda * iso[1], lambda * iso[2]};
    out[i] += Rational(1);
    return out;
  }
  return std::nullopt;
}

__extension__ using Wide = __int128;

// Searches integer solutions of sum d_i x_i^2 = c w^2 with |x_i| <= box and
// 1 <= w <= box, solving for the last coordinate, and returns up to `count`
// vectors x / w. Coefficients too large for 128-bit arithmetic skip the search.
std::vector<std::vector<Rational>> small_solutions(const std::vector<Rational>& d, const Rational& c,
                                                   std::size_t count) {
  std::vector<std::vector<Rational>> found;
  const std::size_t r = d.size();
  mpz_class lcm = c.denominator();
  for (const auto& v : d) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
  const mpz_class limit = mpz_class(1) << 40;
  std::vector<Wide> coef(r);
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class v = d[i].numerator() * (lcm / d[i].denominator());
    if (abs(v) >= limit) return found;
    coef[i] = v.get_si();
  }
  const mpz_class cz = c.numerator() * (lcm / c.denominator());
  if (abs(cz) >= limit) return found;
  const Wide target = cz.get_si();
  // About 1e6 candidates in total.
  long box = 1;
  while (std::pow(2.0 * (box + 1) + 1, static_cast<double>(r - 1)) * (box + 1) <= 1e6) ++box;
  std::vector<long> x(r - 1);
  const Wide last = coef[r - 1];
  for (long w = 1; w <= box; ++w) {
    std::fill(x.begin(), x.end(), -box);
    for (;;) {
      Wide s = target * w * w;
      for (std::size_t i = 0; i + 1 < r; ++i) s -= coef[i] * x[i] * x[i];
      if (s % last == 0 && s / last >= 0) {
        const Wide q = s / last;
        auto y = static_cast<Wide>(std::sqrt(static_cast<long double>(q)));
        while (y * y > q) --y;
        while ((y + 1) * (y + 1) <= q) ++y;
        if (y * y == q) {
          std::vector<Rational> sol(r);
          for (std::size_t i = 0; i + 1 < r; ++i) sol[i] = Rational(x[i], w);
          sol[r - 1] = Rational(static_cast<long>(y), w);
          found.push_back(std::move(sol));
          if (found.size() >= count) return found;
        }
      }
      std::size_t k = 0;
      while (k < x.size() && x[k] == box) x[k++] = -box;
      if (k == x.size()) break;
      ++x[k];
    }
  }
  return found;
}

// With `randomize`, different calls yield different representations.
std::optional<std::vector<Rational>> represent_impl(const std::vector<Rational>& d, const Rational& c, Rng& rng,
                                                    bool randomize) {
  const std::size_t r = d.size();
  if (r == 0 || c.is_zero()) return std::nullopt;
  if (r == 1) {
    const auto x = nt::rational_sqrt(c / d[0]);
    if (!x) return std::nullopt;
    return std::vector<Rational>{*x};
  }
  if (auto xs = small_solutions(d, c, randomize ? 8 : 1); !xs.empty())
    return xs[randomize ? static_cast<std::size_t>(rng.range(0, static_cast<long>(xs.size()) - 1)) : 0];
  if (r == 2) {
    const auto xy = represent_binary(d[0], d[1], c);
    if (!xy) return std::nullopt;
    return std::vector<Rational>{xy->first, xy->second};
  }
  // Small random coordinates beyond the second leave a binary problem on
  // small numbers; the valid choices form a p-adically open set.
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> x(r);
    Rational rest = c;
    for (std::size_t i = 2; i < r; ++i) {
      x[i] = rng.rational(1 + attempt / 8, 1 + attempt / 16);
      rest -= d[i] * x[i] * x[i];
    }
    if (rest.is_zero()) continue;
    try {
      if (const auto xy = represent_binary(d[0], d[1], rest)) {
        x[0] = xy->first;
        x[1] = xy->second;
        return x;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExhausted) throw;
    }
  }
  // Extra coordinates beyond the third are drawn at random; the ternary part
  // is then solved exactly, and fails only on finitely many local classes.
  const int attempts = r == 3 ? 4 : 200;
  for (int attempt = randomize ? 1 : 0; attempt < attempts; ++attempt) {
    std::vector<Rational> x(r);
    Rational rest = c;
    bool extra = false;
    if (attempt > 0) {
      const long range = 1 + attempt / 20;
      const long den = 1 + attempt / 10;
      for (std::size_t i = 3; i < r; ++i) {
        x[i] = rng.rational(range, den);
        rest -= d[i] * x[i] * x[i];
        extra = extra || !x[i].is_zero();
      }
    }
    if (rest.is_zero()) {
      if (extra) return x;
      continue;
    }
    try {
      if (const auto xyz = represent_ternary(d[0], d[1], d[2], rest, rng, randomize || attempt > 0)) {
        for (std::size_t i = 0; i < 3; ++i) x[i] = (*xyz)[i];
        return x;
      }
    } catch (const Error& e) {
      // A value too hard to factor; another draw gives another value.
      if (e.code() != ErrorCode::BudgetExhausted) throw;
    }
  }
  return std::nullopt;
}

// Strips square factors of primes below 1000 from a nonzero integer.
mpz_class strip_small_squares(mpz_class n, mpz_class& root) {
  root = 1;
  for (unsigned long p = 2; p < 1000; ++p) {
    const unsigned long pp = p * p;
    while (mpz_divisible_ui_p(n.get_mpz_t(), pp)) {
      n /= pp;
      root *= p;
    }
  }
  return n;
}

}  // namespace

std::optional<std::vector<Rational>> represent(const std::vector<Rational>& d, const Rational& c, Rng& rng) {
  return represent_impl(d, c, rng, false);
}

std::vector<Transvection> congruence_diagonalize(QMatrix& s) {
  const std::size_t n = s.rows();
  std::vector<Transvection> ops;
  auto cong = [&](std::size_t k, std::size_t l, const Rational& t) {
    if (t.is_zero()) return;
    QMatrix p = QMatrix::identity(n);
    p(k, l) = t;
    s = p * s * p.transpose();
    ops.push_back({k, l, t});
  };
  const auto height = [](const Rational& v) {
    return mpz_sizeinbase(v.numerator().get_mpz_t(), 2) + mpz_sizeinbase(v.denominator().get_mpz_t(), 2);
  };
  for (std::size_t p = 0; p < n; ++p) {
    // Pivot on the nonzero diagonal entry of least height.
    std::size_t i = n;
    for (std::size_t k = p; k < n; ++k)
      if (!s(k, k).is_zero() && (i == n || height(s(k, k)) < height(s(i, i)))) i = k;
    if (i != n && i != p) {
      // Signed swap of p and i.
      cong(p, i, Rational(1));
      cong(i, p, Rational(-1));
      cong(p, i, Rational(1));
      i = p;
    }
    if (i == n) {
      // No usable diagonal entry: make one from an off-diagonal entry.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t a = p; a < n && !off; ++a)
        for (std::size_t b = a + 1; b < n && !off; ++b)
          if (!s(a, b).is_zero()) off = std::pair{a, b};
      if (!off) break;
      cong(off->first, off->second, Rational(1));
      i = off->first;
    }
    if (i != p) {
      for (long t = 1; t <= 3; ++t) {
        const Rational tt(t);
        if (!(s(p, p) + Rational(2) * tt * s(p, i) + tt * tt * s(i, i)).is_zero()) {
          cong(p, i, tt);
          break;
        }
      }
    }
    if (s(p, p).is_zero()) throw Error(ErrorCode::Internal, "congruence pivot vanished");
    for (std::size_t k = p + 1; k < n; ++k) cong(k, p, -(s(k, p) / s(p, p)));
  }
  return ops;
}

std::pair<QMatrix, std::vector<Rational>> diagonalize(const QMatrix& s) {
  QMatrix d = s;
  const auto ops = congruence_diagonalize(d);
  QMatrix p = QMatrix::identity(s.rows());
  for (const auto& op : ops) p = op.matrix(s.rows()) * p;
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < d.rows(); ++i) diag.push_back(d(i, i));
  return {p, diag};
}

namespace {

// Reduced integer kernel k of a nonzero rational v, with v = k u^2.
std::pair<Rational, Rational> square_kernel(const Rational& v) {
  mpz_class root;
  const mpz_class k = strip_small_squares(v.numerator() * v.denominator(), root);
  return {Rational(k, mpz_class(1)), Rational(root, v.denominator())};
}

std::vector<mpz_class> primitive(const std::vector<Rational>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& x : v) {
    out.push_back(x.numerator() * (l / x.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

// Integer basis of the complement of x under diag(f), pairwise reduced
// against the positive form sum |f_i| y_i^2.
std::vector<std::vector<mpz_class>> reduced_complement(const std::vector<Rational>& f,
                                                       const std::vector<Rational>& x) {
  const std::size_t r = f.size();
  QMatrix row(1, r);
  for (std::size_t i = 0; i < r; ++i) row(0, i) = f[i] * x[i];
  std::vector<std::vector<mpz_class>> basis;
  for (const auto& y : row.nullspace()) basis.push_back(primitive(y));
  std::vector<mpz_class> weight;
  for (const auto& v : f) weight.push_back(abs(v.numerator()));
  const auto inner = [&](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < r; ++i) s += weight[i] * a[i] * b[i];
    return s;
  };
  bool changed = true;
  for (int round = 0; changed && round < 200; ++round) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const mpz_class num = inner(basis[i], basis[j]);
        const mpz_class den = inner(basis[j], basis[j]);
        mpz_class q;
        mpz_class twice = 2 * num + den;
        const mpz_class twice_den = 2 * den;
        mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
        if (q == 0) continue;
        std::vector<mpz_class> next = basis[i];
        for (std::size_t k = 0; k < r; ++k) next[k] -= q * basis[j][k];
        if (inner(next, next) < inner(basis[i], basis[i])) {
          basis[i] = std::move(next);
          changed = true;
        }
      }
  }
  std::sort(basis.begin(), basis.end(),
            [&](const auto& a, const auto& b) { return inner(a, a) < inner(b, b); });
  return basis;
}

// One Witt step: x represents t[target], m has x then the complement basis,
// and p diagonalizes the complement to the integer kernels `rest`.
struct WittStep {
  std::size_t target;
  QMatrix m;
  QMatrix p;
  std::vector<Rational> rest;
  std::size_t height;
};

std::optional<WittStep> witt_step(const std::vector<Rational>& f, const std::vector<Rational>& x,
                                  std::size_t target) {
  const std::size_t r = f.size();
  const auto basis = reduced_complement(f, x);
  QMatrix m(r, r);
  for (std::size_t j = 0; j < r; ++j) m(0, j) = x[j];
  for (std::size_t i = 0; i + 1 < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i + 1, j) = Rational(basis[i][j], mpz_class(1));
  QMatrix gram(r - 1, r - 1);
  for (std::size_t i = 0; i + 1 < r; ++i)
    for (std::size_t j = 0; j + 1 < r; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < r; ++k) s += f[k] * m(i + 1, k) * m(j + 1, k);
      gram(i, j) = s;
    }
  auto [p, sdiag] = diagonalize(gram);
  std::size_t height = 0;
  for (std::size_t i = 0; i < sdiag.size(); ++i) {
    if (sdiag[i].is_zero()) return std::nullopt;
    const auto [k, u] = square_kernel(sdiag[i]);
    for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) /= u;
    sdiag[i] = k;
    height += mpz_sizeinbase(k.numerator().get_mpz_t(), 2);
  }
  return WittStep{target, std::move(m), std::move(p), std::move(sdiag), height};
}

constexpr std::size_t kSmallPerTarget = 6;
constexpr std::size_t kBranches = 3;

// Isometry between diagonal forms with integer kernel entries. Small
// representations are tried first, ordered by the size of the complement.
// Without `fallback` the number theoretic solver is used only for binary
// forms.
std::optional<QMatrix> isometry_core(const std::vector<Rational>& f, const std::vector<Rational>& t, Rng& rng,
                                     bool fallback) {
  const std::size_t r = f.size();
  if (r == 1) {
    const auto x = nt::rational_sqrt(t[0] / f[0]);
    if (!x) return std::nullopt;
    return QMatrix({{*x}});
  }
  std::vector<WittStep> steps;
  for (std::size_t j = 0; j < r; ++j) {
    if (std::any_of(t.begin(), t.begin() + static_cast<long>(j), [&](const Rational& v) { return v == t[j]; }))
      continue;
    for (const auto& x : small_solutions(f, t[j], kSmallPerTarget))
      if (auto s = witt_step(f, x, j))
        if (std::none_of(steps.begin(), steps.end(),
                         [&](const WittStep& o) { return o.target == s->target && o.rest == s->rest; }))
          steps.push_back(std::move(*s));
  }
  std::sort(steps.begin(), steps.end(), [](const auto& a, const auto& b) { return a.height < b.height; });
  if (steps.size() > kBranches) steps.resize(kBranches);
  const int attempts = !fallback && r > 2 ? 0 : r > 2 ? 4 : 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    try {
      if (const auto x = represent_impl(f, t[0], rng, attempt > 0))
        if (auto s = witt_step(f, *x, 0)) steps.push_back(std::move(*s));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExhausted) throw;
    }
  }
  for (const auto& step : steps) {
    std::vector<Rational> others;
    for (std::size_t j = 0; j < r; ++j)
      if (j != step.target) others.push_back(t[j]);
    std::optional<QMatrix> sub;
    try {
      sub = isometry_core(step.rest, others, rng, fallback);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExhausted) throw;
    }
    if (!sub) continue;
    const QMatrix inner = *sub * step.p;
    QMatrix lift = QMatrix::identity(r);
    for (std::size_t i = 0; i + 1 < r; ++i)
      for (std::size_t j = 0; j + 1 < r; ++j) lift(i + 1, j + 1) = inner(i, j);
    const QMatrix g = lift * step.m;
    // Row 0 of g carries t[target]; the others keep their order.
    QMatrix out(r, r);
    for (std::size_t i = 0, k = 1; i < r; ++i) {
      const std::size_t src = i == step.target ? 0 : k++;
      for (std::size_t j = 0; j < r; ++j) out(i, j) = g(src, j);
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<QMatrix> diagonal_isometry(const std::vector<Rational>& from, const std::vector<Rational>& to,
                                         Rng& rng) {
  const std::size_t r = from.size();
  if (to.size() != r) return std::nullopt;
  if (r == 0) return QMatrix(0, 0);
  // Entries are written as k u^2 with k an integer free of small square
  // factors; an isometry of the k-forms lifts by the diagonal u scalings.
  std::vector<Rational> kfrom, kto, ufrom, uto;
  for (std::size_t i = 0; i < r; ++i) {
    if (from[i].is_zero() || to[i].is_zero()) return std::nullopt;
    const auto [kf, uf] = square_kernel(from[i]);
    const auto [kt, ut] = square_kernel(to[i]);
    kfrom.push_back(kf);
    ufrom.push_back(uf);
    kto.push_back(kt);
    uto.push_back(ut);
  }
  auto g = isometry_core(kfrom, kto, rng, false);
  if (!g) g = isometry_core(kfrom, kto, rng, true);
  if (!g) return std::nullopt;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) (*g)(i, j) *= uto[i] / ufrom[j];
  QMatrix dfrom(r, r);
  QMatrix dto(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    dfrom(i, i) = from[i];
    dto(i, i) = to[i];
  }
  if (!(*g * dfrom * g->transpose() == dto)) throw Error(ErrorCode::Internal, "diagonal isometry check failed");
  return g;
}

}  // namespace flexalg::qf
