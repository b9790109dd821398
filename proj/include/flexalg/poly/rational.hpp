#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace flexalg {

// Exact rational number, always kept in lowest terms with a positive
// denominator (GMP canonical form).
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT
  template <std::unsigned_integral I>
  Rational(I value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class value);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "a", "-a", "a/b" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;

  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

Rational pow(const Rational& base, unsigned exponent);
Rational factorial(unsigned n);

}  // namespace flexalg
