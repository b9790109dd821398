#include "flexalg/matrix/normal_forms.hpp"

#include "flexalg/error.hpp"
#include "flexalg/jet/realize.hpp"
#include "flexalg/matrix/quadratic_forms.hpp"

namespace flexalg {

namespace {

// Applies moves to a running matrix and records the nontrivial ones.
class Walker {
 public:
  explicit Walker(MatrixPoint b) : b_(std::move(b)) {}

  void move(Side side, std::size_t k, std::size_t l, const Rational& t) {
    if (t.is_zero()) return;
    const ElemGenerator g{side, k, l};
    b_ = elem_action(g, t, b_);
    steps_.push_back({g, t});
  }
  void row(std::size_t k, std::size_t l, const Rational& t) { move(Side::Row, k, l, t); }
  void col(std::size_t k, std::size_t l, const Rational& t) { move(Side::Col, k, l, t); }
  void cong(std::size_t k, std::size_t l, const Rational& t) { move(Side::Congruence, k, l, t); }

  const Rational& at(std::size_t i, std::size_t j) const { return b_(i, j); }
  const MatrixPoint& matrix() const noexcept { return b_; }
  std::vector<ElemStep> take() { return std::move(steps_); }

 private:
  MatrixPoint b_;
  std::vector<ElemStep> steps_;
};

// Congruence steps with P = diag(1/alpha, alpha) on the basis vectors (r1, r2).
void shift_scale(Walker& w, std::size_t r1, std::size_t r2, const Rational alpha) {
  if (alpha == Rational(1)) return;
  w.cong(r2, r1, alpha.inverse());
  w.cong(r1, r2, Rational(1) - alpha);
  w.cong(r2, r1, Rational(-1));
  w.cong(r1, r2, -((Rational(1) - alpha) / alpha));
}

std::vector<ElemStep> simplify(const std::vector<ElemStep>& steps) {
  std::vector<ElemStep> out;
  for (const auto& s : steps) {
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().t += s.t;
      if (out.back().t.is_zero()) out.pop_back();
    } else if (!s.t.is_zero()) {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

MatrixPoint run_steps(const std::vector<ElemStep>& steps, MatrixPoint b) {
  for (const auto& s : steps) b = elem_action(s.generator, s.t, b);
  return b;
}

std::vector<ElemStep> inverse_steps(const std::vector<ElemStep>& steps) {
  std::vector<ElemStep> out;
  out.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back({it->generator, -it->t});
  return out;
}

std::vector<ElemStep> generic_normal_form(const MatrixPoint& b) {
  const std::size_t n = b.rows();
  const std::size_t m = b.cols();
  Walker w(b);
  std::size_t p = 0;
  for (; p < std::min(n, m); ++p) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = p; i < n && !pivot; ++i)
      for (std::size_t j = p; j < m && !pivot; ++j)
        if (!w.at(i, j).is_zero()) pivot = std::pair{i, j};
    if (!pivot) break;
    const auto [i, j] = *pivot;
    if (j != p) w.col(j, p, Rational(1));
    if (i != p) w.row(i, p, Rational(1));
    const Rational piv = w.at(p, p);
    for (std::size_t r = p + 1; r < n; ++r) w.row(p, r, -(w.at(r, p) / piv));
    for (std::size_t c = p + 1; c < m; ++c) w.col(p, c, -(w.at(p, c) / piv));
  }
  const std::size_t rank = p;
  for (std::size_t q = 0; q + 1 < rank; ++q) {
    const Rational a = w.at(q, q);
    if (a == Rational(1)) continue;
    w.row(q, q + 1, a.inverse());
    w.row(q + 1, q, Rational(1) - a);
    w.row(q, q + 1, Rational(-1));
    w.row(q + 1, q, -((Rational(1) - a) / a));
  }
  if (rank > 0) {
    const Rational d = w.at(rank - 1, rank - 1);
    if (!(d == Rational(1))) {
      if (rank < n) {
        w.row(rank - 1, rank, (Rational(1) - d) / d);
        w.row(rank, rank - 1, Rational(1));
        w.row(rank - 1, rank, -(Rational(1) - d));
      } else if (rank < m) {
        w.col(rank - 1, rank, (Rational(1) - d) / d);
        w.col(rank, rank - 1, Rational(1));
        w.col(rank - 1, rank, -(Rational(1) - d));
      }
    }
  }
  return w.take();
}

std::vector<ElemStep> skew_normal_form(const MatrixPoint& b) {
  const std::size_t n = b.rows();
  Walker w(b);
  std::size_t a = 0;
  for (; a + 1 < n; a += 2) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = a; i < n && !pivot; ++i)
      for (std::size_t j = i + 1; j < n && !pivot; ++j)
        if (!w.at(i, j).is_zero()) pivot = std::pair{i, j};
    if (!pivot) break;
    const auto [i, j] = *pivot;
    if (i != a) w.cong(a, i, Rational(1));
    if (w.at(a, a + 1).is_zero()) w.cong(a + 1, j, Rational(1));
    const Rational omega = w.at(a, a + 1);
    for (std::size_t k = a + 2; k < n; ++k) {
      w.cong(k, a, -(w.at(k, a + 1) / omega));
      w.cong(k, a + 1, w.at(k, a) / omega);
    }
  }
  const std::size_t blocks = a / 2;
  for (std::size_t s = 0; s + 1 < blocks; ++s) shift_scale(w, 2 * s, 2 * s + 2, w.at(2 * s, 2 * s + 1));
  if (blocks > 0 && 2 * blocks < n) {
    const std::size_t last = 2 * blocks - 2;
    shift_scale(w, last, 2 * blocks, w.at(last, last + 1));
  }
  return w.take();
}

std::vector<ElemStep> symmetric_diagonal_form(const MatrixPoint& b) {
  QMatrix s = b.entries();
  std::vector<ElemStep> steps;
  for (const auto& op : qf::congruence_diagonalize(s)) steps.push_back({{Side::Congruence, op.row, op.col}, op.coeff});
  return steps;
}

namespace {

std::vector<ElemStep> symmetric_middle(const MatrixPoint& dfrom, const MatrixPoint& dto, Rng& rng) {
  const std::size_t n = dfrom.rows();
  std::vector<Rational> from;
  std::vector<Rational> to;
  for (std::size_t i = 0; i < n && !dfrom(i, i).is_zero(); ++i) from.push_back(dfrom(i, i));
  for (std::size_t i = 0; i < n && !dto(i, i).is_zero(); ++i) to.push_back(dto(i, i));
  if (from.size() != to.size()) throw Error(ErrorCode::Internal, "diagonal forms of different rank");
  const std::size_t r = from.size();
  const auto g = qf::diagonal_isometry(from, to, rng);
  if (!g)
    throw Error(ErrorCode::SeparationFailure,
                "no rational congruence found between the symmetric matrices (their quadratic forms are "
                "not shown to be equivalent over the rationals)");
  QMatrix a = QMatrix::identity(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = (*g)(i, j);
  const Rational det = g->det();
  if (r < n) {
    a(n - 1, n - 1) = det.inverse();
  } else if (det == Rational(-1)) {
    for (std::size_t i = 0; i < n; ++i) a(i, 0) = -a(i, 0);
  } else if (!(det == Rational(1))) {
    throw Error(ErrorCode::Internal, "isometry of full rank forms has determinant " + det.to_string());
  }
  const auto factors = sl_factor(a);
  std::vector<ElemStep> steps;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    steps.push_back({{Side::Congruence, it->row, it->col}, it->coeff});
  return steps;
}

}  // namespace

std::vector<ElemStep> plan_path(const MatrixPoint& from, const MatrixPoint& to, Rng& rng) {
  if (from.mode() != to.mode() || from.rows() != to.rows() || from.cols() != to.cols())
    throw Error(ErrorCode::InvalidArgument, "matrices live in different spaces");
  std::vector<ElemStep> path;
  switch (from.mode()) {
    case MatrixMode::Generic:
    case MatrixMode::Skew: {
      const bool skew = from.mode() == MatrixMode::Skew;
      auto a = skew ? skew_normal_form(from) : generic_normal_form(from);
      const auto b = skew ? skew_normal_form(to) : generic_normal_form(to);
      if (!(run_steps(a, from) == run_steps(b, to)))
        throw Error(ErrorCode::Internal, "normal forms differ for matrices with one signature");
      path = std::move(a);
      for (auto& s : inverse_steps(b)) path.push_back(std::move(s));
      break;
    }
    case MatrixMode::Symmetric: {
      path = symmetric_diagonal_form(from);
      const auto back = symmetric_diagonal_form(to);
      for (auto& s : symmetric_middle(run_steps(path, from), run_steps(back, to), rng)) path.push_back(std::move(s));
      for (auto& s : inverse_steps(back)) path.push_back(std::move(s));
      break;
    }
  }
  path = simplify(path);
  if (!(run_steps(path, from) == to)) throw Error(ErrorCode::Internal, "planned path misses its target");
  return path;
}

}  // namespace flexalg
