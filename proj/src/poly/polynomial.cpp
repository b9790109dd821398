#include "flexalg/poly/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "flexalg/error.hpp"

namespace flexalg {

namespace {

std::atomic<std::size_t> g_term_cap{200000};

void add_term(Polynomial::TermMap& terms, const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

unsigned total_degree(const Exponents& e) noexcept {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t term_cap() noexcept { return g_term_cap.load(std::memory_order_relaxed); }
void set_term_cap(std::size_t cap) noexcept { g_term_cap.store(cap, std::memory_order_relaxed); }

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(Ring ring, TermMap terms) : ring_(std::move(ring)) {
  for (auto& [e, c] : terms) {
    if (e.size() != ring_.arity())
      throw Error(ErrorCode::ArityMismatch, "exponent vector length does not match ring arity");
    if (!c.is_zero()) terms_.emplace(e, c);
  }
  check_cap();
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.ring_.arity(), 0), c);
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring.arity()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
  Exponents e(ring.arity(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), Rational(1));
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
  return variable(ring, ring.index_of(name));
}

Polynomial Polynomial::monomial(Ring ring, Exponents exponents, const Rational& c) {
  if (exponents.size() != ring.arity())
    throw Error(ErrorCode::ArityMismatch, "exponent vector length does not match ring arity");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(std::move(exponents), c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && flexalg::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(ring_.arity(), 0)); }

Rational Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(flexalg::total_degree(terms_.begin()->first));
}

int Polynomial::lowest_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(flexalg::total_degree(terms_.rbegin()->first));
}

bool Polynomial::is_homogeneous(unsigned degree) const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return flexalg::total_degree(t.first) == degree; });
}

bool Polynomial::involves(std::size_t var) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] != 0; });
}

unsigned Polynomial::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_.arity())
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) +
                                              " coordinates, ring has " +
                                              std::to_string(ring_.arity()) + " variables");
  // powers[i][k] = point[i]^k, filled on demand
  std::vector<std::vector<Rational>> powers(point.size());
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rational(1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
      term *= pw[e[i]];
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::partial(std::size_t var) const {
  if (var >= ring_.arity()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
  Polynomial out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.terms_.emplace(std::move(d), c * Rational(e[var]));
  }
  return out;
}

Polynomial Polynomial::partial(std::string_view var) const { return partial(ring_.index_of(var)); }

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
  Polynomial out(ring_);
  for (const auto& [e, c] : terms_)
    if (flexalg::total_degree(e) == degree) out.terms_.emplace(e, c);
  return out;
}

Polynomial Polynomial::truncated(unsigned max_degree) const {
  Polynomial out(ring_);
  for (const auto& [e, c] : terms_)
    if (flexalg::total_degree(e) <= max_degree) out.terms_.emplace(e, c);
  return out;
}

Polynomial Polynomial::embedded(const Ring& bigger) const {
  if (!ring_.is_prefix_of(bigger))
    throw Error(ErrorCode::RingMismatch, "target ring does not extend the source ring");
  Polynomial out(bigger);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f.resize(bigger.arity(), 0);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values, const Ring& target,
                                  std::optional<unsigned> max_degree) const {
  if (values.size() != ring_.arity())
    throw Error(ErrorCode::ArityMismatch, "substitution needs one value per variable");
  for (const auto& v : values)
    if (!(v.ring() == target)) throw Error(ErrorCode::RingMismatch, "substituted values live in different rings");
  std::vector<std::vector<Polynomial>> powers(values.size());
  Polynomial sum(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, Rational(1)));
      while (pw.size() <= e[i]) pw.push_back(multiply_truncated(pw.back(), values[i], max_degree));
      term = multiply_truncated(term, pw[e[i]], max_degree);
      if (term.is_zero()) break;
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool is_const = flexalg::total_degree(e) == 0;
    if (is_const) {
      os << mag.to_string();
      continue;
    }
    bool need_star = false;
    if (!(mag == Rational(1))) {
      os << mag.to_string();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << ring_.name(i);
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

void Polynomial::check_cap() const {
  if (terms_.size() > term_cap())
    throw Error(ErrorCode::TermCapExceeded,
                "polynomial exceeds the term cap of " + std::to_string(term_cap()) + " terms");
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (!(ring_ == o.ring_)) throw Error(ErrorCode::RingMismatch, "polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  check_cap();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, -c);
  check_cap();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return multiply_truncated(a, b, std::nullopt);
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b,
                              std::optional<unsigned> max_degree) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, "polynomials live in different rings");
  Polynomial::TermMap out;
  const std::size_t n = a.ring().arity();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms()) {
    const unsigned da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (max_degree && da + total_degree(eb) > *max_degree) continue;
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
    if (out.size() > term_cap())
      throw Error(ErrorCode::TermCapExceeded,
                  "polynomial exceeds the term cap of " + std::to_string(term_cap()) + " terms");
  }
  return Polynomial(a.ring(), std::move(out));
}

}  // namespace flexalg
