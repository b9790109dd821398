#include "flexalg/lnd/aut_word.hpp"

#include <algorithm>

#include "flexalg/error.hpp"

namespace flexalg {

AutWord::AutWord(Ring ring) : ring_(std::move(ring)) {}

AutWord::AutWord(Ring ring, std::vector<FlowStep> steps) : ring_(std::move(ring)) {
  for (auto& s : steps) push_back(std::move(s));
}

bool AutWord::has_symbolic_step() const noexcept {
  return std::any_of(steps_.begin(), steps_.end(), [](const FlowStep& s) { return s.is_symbolic(); });
}

void AutWord::push_back(FlowStep step) {
  if (!(step.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "flow step lives in another ring");
  if (step.is_symbolic() && has_symbolic_step())
    throw Error(ErrorCode::SymbolicCapture, "a word may hold at most one symbolic-time step");
  steps_.push_back(std::move(step));
}

std::vector<Rational> word_apply(const AutWord& w, std::span<const Rational> point) {
  if (point.size() != w.ring().arity())
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) +
                                              " coordinates, ring has " +
                                              std::to_string(w.ring().arity()));
  std::vector<Rational> p(point.begin(), point.end());
  for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it) p = it->apply(p);
  return p;
}

AutWord word_compose(const AutWord& w1, const AutWord& w2) {
  if (!(w1.ring() == w2.ring())) throw Error(ErrorCode::RingMismatch, "words live in different rings");
  AutWord out = w1;
  for (const auto& s : w2.steps()) out.push_back(s);
  return out;
}

AutWord word_inverse(const AutWord& w) {
  AutWord out(w.ring());
  for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it) out.push_back(it->inverted());
  return out;
}

PolyAutomorphism word_to_map(const AutWord& w) {
  PolyMap forward = PolyMap::identity(w.ring());
  PolyMap inverse = forward;
  for (const auto& s : w.steps()) {
    const Rational& t = s.rational_time();
    forward = compose(forward, s.map_at(t));
    inverse = compose(s.map_at(-t), inverse);
  }
  // Each factor is an exact inverse pair, so the products are too.
  return PolyAutomorphism::trusted(std::move(forward), std::move(inverse));
}

PolyMap word_to_symbolic_map(const AutWord& w) {
  if (!w.has_symbolic_step()) return word_to_map(w).forward();
  const Ring& ring = w.ring();
  const Ring ext = ring.extended(ring.fresh_name("t"));
  const std::size_t n = ring.arity();
  const Polynomial t = Polynomial::variable(ext, n);
  PolyMap acc = PolyMap::identity(ext);
  for (const auto& s : w.steps()) {
    std::vector<Polynomial> images;
    images.reserve(n + 1);
    Polynomial scaled_t = t;
    std::optional<Rational> fixed;
    if (s.is_symbolic()) scaled_t = t.scaled(std::get<SymbolicTime>(s.time()).scale);
    else fixed = s.rational_time();
    for (const auto& terms : s.series()) {
      Polynomial img(ext);
      Polynomial power = Polynomial::constant(ext, Rational(1));
      Rational rpower(1);
      for (const auto& term : terms) {
        if (fixed) {
          if (!rpower.is_zero()) img += term.embedded(ext).scaled(rpower);
          rpower *= *fixed;
        } else {
          img += power * term.embedded(ext);
          power *= scaled_t;
        }
      }
      images.push_back(std::move(img));
    }
    images.push_back(t);
    acc = compose(acc, PolyMap(ext, std::move(images)));
  }
  return acc;
}

bool volume_check(const PolyMap& f) {
  return jacobian_det(f) == Polynomial::constant(f.ring(), Rational(1));
}

bool volume_check(const PolyAutomorphism& a) { return volume_check(a.forward()); }

}  // namespace flexalg
