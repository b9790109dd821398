#pragma once

// Independent reference computations used to check library results.

#include <vector>

#include "flexalg/lnd/derivation.hpp"
#include "flexalg/poly/poly_map.hpp"
#include "flexalg/poly/qmatrix.hpp"

namespace oracle {

using namespace flexalg;

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Pfaffian as the signed sum over all perfect matchings of {0..n-1}.
template <class T, class Entry>
T pfaffian_matchings(std::size_t n, Entry entry, T zero) {
  if (n % 2 == 1) return zero;
  T total = zero;
  std::vector<std::size_t> seq;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      T term = zero + T(1);
      for (std::size_t k = 0; k < seq.size(); k += 2) term = term * entry(seq[k], seq[k + 1]);
      total = permutation_sign(seq) > 0 ? total + term : total - term;
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      seq.push_back(i);
      seq.push_back(j);
      self(self);
      seq.pop_back();
      seq.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec);
  return total;
}

// Leibniz expansion.
inline Rational det_leibniz(const QMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  Rational total(0);
  do {
    Rational term(permutation_sign(p));
    for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Dense univariate polynomial, coefficient of t^i at index i.
using Uni = std::vector<Rational>;

inline void trim(Uni& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

inline Uni uni_mod(Uni a, const Uni& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

inline Uni uni_gcd(Uni a, Uni b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Uni r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Coefficients of a polynomial in a one-variable ring.
inline Uni to_uni(const Polynomial& p) {
  Uni u(static_cast<std::size_t>(std::max(0, p.total_degree())) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) u[e[0]] = c;
  trim(u);
  return u;
}

// exp(t d)(x_i) by summing t^k d^k(x_i) / k! until the iterate vanishes.
inline PolyMap exp_series(const Derivation& d, const Rational& t, unsigned cap = 200) {
  const Ring& r = d.ring();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < d.arity(); ++i) {
    Polynomial term = Polynomial::variable(r, i);
    Polynomial sum = term;
    for (unsigned k = 1; k <= cap && !term.is_zero(); ++k) {
      term = derive(d, term).scaled(t / Rational(k));
      sum += term;
    }
    images.push_back(sum);
  }
  return PolyMap(r, images);
}

// Local expansion of f at p truncated to degree m: images of u -> f(p+u) - f(p).
inline std::vector<Polynomial> local_jet(const PolyMap& f, const std::vector<Rational>& p, unsigned m) {
  const Ring& r = f.ring();
  std::vector<Polynomial> shift;
  for (std::size_t i = 0; i < p.size(); ++i) shift.push_back(Polynomial::variable(r, i) + Polynomial::constant(r, p[i]));
  std::vector<Polynomial> out;
  for (const auto& g : f.images()) {
    const Polynomial local = g.substitute(shift, r);
    out.push_back((local - Polynomial::constant(r, local.constant_term())).truncated(m));
  }
  return out;
}

}  // namespace oracle
