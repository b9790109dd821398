#include "flexalg/poly/rational.hpp"

#include <cctype>

#include "flexalg/error.hpp"

namespace flexalg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::TermCapExceeded: return "TermCapExceeded";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotCertified: return "NotCertified";
    case ErrorCode::SymbolicTime: return "SymbolicTime";
    case ErrorCode::SymbolicCapture: return "SymbolicCapture";
    case ErrorCode::NotFixed: return "NotFixed";
    case ErrorCode::NotIdentityToOrder: return "NotIdentityToOrder";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DeterminantNotOne: return "DeterminantNotOne";
    case ErrorCode::FrozenCoincidence: return "FrozenCoincidence";
    case ErrorCode::NotSeparated: return "NotSeparated";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::UnsupportedStratum: return "UnsupportedStratum";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::SeparationFailure: return "SeparationFailure";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? "1" : trim(text.substr(slash + 1));
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f, mpz_class(1));
}

}  // namespace flexalg
