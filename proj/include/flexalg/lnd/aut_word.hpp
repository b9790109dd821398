#pragma once

#include <vector>

#include "flexalg/lnd/flow.hpp"

namespace flexalg {

// A product S_1 S_2 ... S_k of flows. Acting on points, the LAST step acts
// first: word_apply(w, p) = S_1(S_2(...S_k(p))). At most one step may carry a
// symbolic time.
class AutWord {
 public:
  explicit AutWord(Ring ring);
  // Throws RingMismatch / SymbolicCapture.
  AutWord(Ring ring, std::vector<FlowStep> steps);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<FlowStep>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  bool has_symbolic_step() const noexcept;

  // Appends a step that acts before all current ones.
  void push_back(FlowStep step);

 private:
  Ring ring_;
  std::vector<FlowStep> steps_;
};

// Throws SymbolicTime when the word has a symbolic step.
std::vector<Rational> word_apply(const AutWord& w, std::span<const Rational> point);
// The word acting as w1 after w2 (concatenation of steps).
AutWord word_compose(const AutWord& w1, const AutWord& w2);
// Reversed steps with negated times.
AutWord word_inverse(const AutWord& w);
// Throws SymbolicTime.
PolyAutomorphism word_to_map(const AutWord& w);
// Point map over the ring extended by the symbolic time variable (or the
// plain ring when every time is rational).
PolyMap word_to_symbolic_map(const AutWord& w);

// Jacobian determinant of the forward map is exactly 1.
bool volume_check(const PolyAutomorphism& a);
bool volume_check(const PolyMap& f);

}  // namespace flexalg
