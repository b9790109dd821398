#include "flexalg/gallery/gallery.hpp"

#include <numeric>

#include "flexalg/error.hpp"
#include "flexalg/lnd/aut_word.hpp"

namespace flexalg::gallery {

bool Report::all_pass() const noexcept {
  for (const auto& a : assertions)
    if (!a.pass) return false;
  return true;
}

void Report::check(std::string assertion, bool pass, std::string value) {
  assertions.push_back(Assertion{std::move(assertion), pass, std::move(value)});
}

namespace {

Polynomial P(const Ring& r, std::string_view text) { return parse_polynomial(r, text); }

std::string join(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

long mod(long x, long n) { return ((x % n) + n) % n; }

// Inverse of x modulo n for gcd(x, n) = 1, n >= 1.
long inverse_mod(long x, long n) {
  long r0 = n, r1 = mod(x, n), t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long qt = r0 / r1;
    r0 -= qt * r1;
    std::swap(r0, r1);
    t0 -= qt * t1;
    std::swap(t0, t1);
  }
  return mod(t0, n);
}

}  // namespace

Nagata nagata() {
  const Ring r({"X", "Y", "Z"});
  const Derivation d(r, {Polynomial(r), P(r, "X"), P(r, "Y")});
  const Polynomial f = P(r, "Y^2 - 2*X*Z");
  return Nagata{d, f, exp_flow(replica(d, f), Rational(1))};
}

Report nagata_report() {
  Report rep{"nagata", {}};
  const Nagata n = nagata();
  const Ring& r = n.derivation.ring();
  const Polynomial df = derive(n.derivation, n.invariant);
  rep.check("d(f) = 0", df.is_zero(), df.to_string());
  const PolyMap& fwd = n.automorphism.forward();
  rep.check("automorphism fixes X", fwd[0] == P(r, "X"), fwd[0].to_string());
  const Polynomial pulled = n.invariant.substitute(fwd.images(), r);
  rep.check("f o forward = f", pulled == n.invariant, pulled.to_string());
  const Polynomial jd = jacobian_det(fwd);
  rep.check("jacobian determinant is 1", jd == Polynomial::constant(r, Rational(1)), jd.to_string());
  const PolyAutomorphism back = exp_flow(replica(n.derivation, n.invariant), Rational(-1));
  rep.check("inverse is exp(-f d)", back.forward() == n.automorphism.inverse(), "");
  const PolyMap round = compose(fwd, n.automorphism.inverse());
  rep.check("forward o inverse = id", round == PolyMap::identity(r), "");
  for (std::size_t i = 0; i < 3; ++i)
    rep.check("forward[" + r.name(i) + "]", true, fwd[i].to_string());
  return rep;
}

Report conter_report() {
  Report rep{"conter", {}};
  const Ring r({"X", "Y", "Z", "U"});
  const Derivation d1(r, {P(r, "Y"), P(r, "Z"), P(r, "U"), Polynomial(r)});
  const std::vector<Polynomial> p{P(r, "U"), P(r, "Z^2 - 2*Y*U"), P(r, "Z^3 - 3*Y*Z*U + 3*X*U^2"),
                                  P(r, "9*X^2*U^2 - 18*X*Y*Z*U + 6*X*Z^3 - 3*Y^2*Z^2 + 8*Y^3*U")};
  for (std::size_t i = 0; i < 4; ++i) {
    const Polynomial v = derive(d1, p[i]);
    rep.check("d1(p" + std::to_string(i + 1) + ") = 0", v.is_zero(), v.to_string());
  }
  const Polynomial lhs = p[0] * p[0] * p[3];
  // With p4 in expanded form the quotient carries the opposite sign.
  const Polynomial rhs = p[2] * p[2] - p[1].pow(3);
  rep.check("p1^2 p4 = p3^2 - p2^3", lhs == rhs, (lhs - rhs).to_string());
  const Ring rx({"X1", "X2", "X3", "X4"});
  const Polynomial hyper = P(rx, "X1^2*X4 + X2^3 - X3^2");
  const Polynomial on_image = hyper.substitute(p, r);
  rep.check("image lies on X1^2 X4 + X2^3 - X3^2 = 0", on_image.is_zero(), on_image.to_string());

  const FlowStep flow(d1, Rational(1));
  auto values = [&](const std::vector<Rational>& pt) {
    std::vector<Rational> v;
    for (const auto& pi : p) v.push_back(pi.evaluate(pt));
    return v;
  };
  // Sections on u != 0: move to A = (x, y, 0, u) on the orbit.
  for (const std::vector<Rational>& pt : std::vector<std::vector<Rational>>{
           {1, 2, 3, 4}, {Rational(-1, 2), 3, 5, -2}, {0, Rational(7, 3), -1, Rational(1, 3)}}) {
    const Rational u = pt[3];
    const auto a = flow.apply_at(-pt[2] / u, pt);
    const auto pv = values(pt);
    const Rational y = -pv[1] / (Rational(2) * u);
    const Rational x = pv[2] / (Rational(3) * u * u);
    rep.check("co1 at " + join(pt), a[2].is_zero() && a[1] == y && a[0] == x,
              "A = " + join(a) + ", recovered (x, y) = (" + x.to_string() + ", " + y.to_string() + ")");
  }
  // Sections on u = 0, z != 0: move to A = (x, 0, z, 0).
  for (const std::vector<Rational>& pt : std::vector<std::vector<Rational>>{
           {1, 2, 1, 0}, {Rational(2, 5), -3, Rational(-4, 3), 0}, {-7, 0, 2, 0}}) {
    const auto a = flow.apply_at(-pt[1] / pt[2], pt);
    const auto pv = values(pt);
    const Rational z = pv[2] / pv[1];
    const Rational x = pv[3] / (Rational(6) * z * z * z);
    rep.check("co2 at " + join(pt), a[1].is_zero() && a[2] == z && a[0] == x,
              "A = " + join(a) + ", recovered (x, z) = (" + x.to_string() + ", " + z.to_string() + ")");
  }
  return rep;
}

Report nonsep_report() {
  Report rep{"nonsep", {}};
  const Ring r({"X", "Y", "Z", "U"});
  const Derivation d1(r, {P(r, "Y"), P(r, "Z"), Polynomial(r), Polynomial(r)});
  const Derivation d2 = Derivation::coordinate(r, 3);
  const std::vector<Polynomial> k1{P(r, "Z"), P(r, "Y^2 - 2*X*Z"), P(r, "U")};
  const std::vector<Polynomial> k2{P(r, "X"), P(r, "Y"), P(r, "Z")};
  for (const auto& g : k1) rep.check("d1(" + g.to_string() + ") = 0", in_kernel(d1, g), derive(d1, g).to_string());
  for (const auto& g : k2) rep.check("d2(" + g.to_string() + ") = 0", in_kernel(d2, g), derive(d2, g).to_string());
  const std::vector<std::pair<Rational, Rational>> samples{
      {0, 0}, {1, 2}, {Rational(-3, 2), Rational(5, 7)}, {4, -1}, {Rational(1, 3), Rational(-2, 9)}};
  for (const auto& [x, u] : samples) {
    const std::vector<Rational> plus{x, 1, 0, u};
    const std::vector<Rational> minus{-x, -1, 0, u};
    for (const auto& g : k1) {
      const Rational a = g.evaluate(plus), b = g.evaluate(minus);
      rep.check(g.to_string() + " at " + join(plus) + " and " + join(minus), a == b,
                a.to_string() + " = " + b.to_string());
    }
  }
  return rep;
}

Sl2Params sl2_params(long p, long q, long m) {
  if (p <= 0 || q <= p || m < 1 || std::gcd(p, q) != 1)
    throw Error(ErrorCode::InvalidArgument, "sl2 parameters need 0 < p < q, gcd(p, q) = 1 and m >= 1");
  Sl2Params s;
  s.p = p;
  s.q = q;
  s.m = m;
  s.k = std::gcd(q - p, m);
  s.a = m / s.k;
  s.b = (q - p) / s.k;
  // d0 q - s0 p = k  <=>  s0 p = -k (mod q).
  s.s0 = q == 1 ? 1 : mod(-s.k * inverse_mod(p, q), q);
  if (s.s0 == 0) s.s0 = q;
  s.d0 = (s.k + s.s0 * p) / q;
  const long l = std::gcd(s.a, q - p);
  const long modulus = s.a / l;
  s.r0 = modulus == 1 ? 0 : mod(((s.d0 - s.s0) / l) * inverse_mod((q - p) / l, modulus), modulus);
  s.c = s.s0 + s.r0 * q - 1;
  s.d = s.d0 + s.r0 * p;
  return s;
}

Sl2Lnd sl2_lnd(long p, long q, long m) {
  const Sl2Params s = sl2_params(p, q, m);
  const Ring r({"X1", "X2", "X3", "X4", "Y"});
  const auto var = [&](std::size_t i) { return Polynomial::variable(r, i); };
  const Polynomial mono = var(1).pow(static_cast<unsigned>(s.c)) * var(2).pow(static_cast<unsigned>(s.d));
  std::vector<Polynomial> coeffs(5, Polynomial(r));
  coeffs[3] = mono.scaled(Rational(s.b)) * var(4).pow(static_cast<unsigned>(s.b - 1));
  coeffs[4] = var(0) * mono;
  Sl2Lnd out{s, Derivation(r, std::move(coeffs)), Report{"sl2", {}}};
  Report& rep = out.report;
  const auto str = [](long v) { return std::to_string(v); };
  rep.check("k = gcd(q - p, m)", s.k == std::gcd(q - p, m), str(s.k));
  rep.check("a k = m and b k = q - p", s.a * s.k == m && s.b * s.k == q - p, str(s.a) + ", " + str(s.b));
  rep.check("d0 q - s0 p = k", s.d0 * q - s.s0 * p == s.k && s.d0 >= 0 && s.s0 >= 1,
            str(s.d0) + ", " + str(s.s0));
  rep.check("k | s0 - d0", (s.s0 - s.d0) % s.k == 0, str(s.s0 - s.d0));
  rep.check("-p - c p + d q = k", -p - s.c * p + s.d * q == s.k, str(-p - s.c * p + s.d * q));
  rep.check("k (b - 1) - c p + d q = q", s.k * (s.b - 1) - s.c * p + s.d * q == q,
            str(s.k * (s.b - 1) - s.c * p + s.d * q));
  rep.check("-1 - c + d = 0 mod a", mod(-1 - s.c + s.d, s.a) == 0, str(mod(-1 - s.c + s.d, s.a)));
  rep.check("-c + d = 1 mod a", mod(-s.c + s.d, s.a) == mod(1, s.a), str(mod(-s.c + s.d, s.a)));
  rep.check("c, d >= 0", s.c >= 0 && s.d >= 0, str(s.c) + ", " + str(s.d));
  const Polynomial h = var(4).pow(static_cast<unsigned>(s.b)) - var(0) * var(3) + var(1) * var(2);
  const Polynomial dh = derive(out.derivation, h);
  rep.check("d(Y^b - X1 X4 + X2 X3) = 0", dh.is_zero(), dh.to_string());
  const bool fixed = out.derivation[0].is_zero() && out.derivation[1].is_zero() && out.derivation[2].is_zero();
  rep.check("d(X1) = d(X2) = d(X3) = 0", fixed, "");
  const NilpotencyCertificate cert = certify_nilpotent(out.derivation);
  std::string orders;
  for (auto o : cert.orders) orders += (orders.empty() ? "" : ",") + std::to_string(o);
  rep.check("certified nilpotent", cert.nilpotent(), orders);
  rep.check("d(Y) != 0", !out.derivation[4].is_zero(), out.derivation[4].to_string());
  return out;
}

}  // namespace flexalg::gallery
