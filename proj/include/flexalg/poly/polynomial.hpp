#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flexalg/poly/rational.hpp"
#include "flexalg/poly/ring.hpp"

namespace flexalg {

using Exponents = std::vector<std::uint32_t>;

unsigned total_degree(const Exponents& e) noexcept;

// Graded lexicographic order, x1 > x2 > ... > xn. The comparator sorts in
// *descending* order so that term maps iterate leading term first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

// Largest number of terms a single polynomial may hold. Exceeding it is a
// hard TermCapExceeded error. Default 200000.
std::size_t term_cap() noexcept;
void set_term_cap(std::size_t cap) noexcept;

// Multivariate polynomial with exact rational coefficients. No zero
// coefficient is ever stored; exponent vectors always have the ring's arity.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit Polynomial(Ring ring);
  Polynomial(Ring ring, TermMap terms);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial variable(const Ring& ring, std::string_view name);
  static Polynomial monomial(Ring ring, Exponents exponents, const Rational& c);

  const Ring& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant term (zero when absent).
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;
  // -1 for the zero polynomial.
  int total_degree() const noexcept;
  // Smallest total degree of a term; -1 for the zero polynomial.
  int lowest_degree() const noexcept;
  bool is_homogeneous(unsigned degree) const noexcept;
  bool involves(std::size_t var) const noexcept;
  unsigned degree_in(std::size_t var) const noexcept;

  Rational evaluate(std::span<const Rational> point) const;
  Polynomial partial(std::size_t var) const;
  Polynomial partial(std::string_view var) const;
  Polynomial homogeneous_part(unsigned degree) const;
  // Drops every term of total degree > max_degree.
  Polynomial truncated(unsigned max_degree) const;
  // Same polynomial viewed in a ring whose variable list extends this one.
  Polynomial embedded(const Ring& bigger) const;

  // Substitutes values[i] for variable i. All values must live in `target`.
  // With `max_degree`, terms above that total degree are discarded during the
  // computation.
  Polynomial substitute(std::span<const Polynomial> values, const Ring& target,
                        std::optional<unsigned> max_degree = std::nullopt) const;

  Polynomial pow(unsigned exponent) const;
  Polynomial scaled(const Rational& c) const;

  // Canonical text: graded-lex descending, e.g. "x^2 - 3/2*y + 5".
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return p.scaled(c); }
  Polynomial operator-() const { return scaled(Rational(-1)); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void check_cap() const;
  void check_same_ring(const Polynomial& o) const;

  Ring ring_;
  TermMap terms_;
};

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b,
                              std::optional<unsigned> max_degree);

// Parses the textual format produced by Polynomial::to_string; any term order,
// parentheses and integer powers are accepted.
Polynomial parse_polynomial(const Ring& ring, std::string_view text);

}  // namespace flexalg
