#include "flexalg/matrix/matrix_space.hpp"

#include "flexalg/error.hpp"

namespace flexalg {

std::string_view to_string(MatrixMode mode) noexcept {
  switch (mode) {
    case MatrixMode::Generic: return "generic";
    case MatrixMode::Symmetric: return "symmetric";
    case MatrixMode::Skew: return "skew";
  }
  return "generic";
}

MatrixMode parse_mode(std::string_view text) {
  if (text == "generic") return MatrixMode::Generic;
  if (text == "symmetric") return MatrixMode::Symmetric;
  if (text == "skew") return MatrixMode::Skew;
  throw Error(ErrorCode::InvalidArgument, "unknown matrix mode '" + std::string(text) + "'");
}

std::string_view to_string(Side side) noexcept {
  switch (side) {
    case Side::Row: return "row";
    case Side::Col: return "col";
    case Side::Congruence: return "congruence";
  }
  return "row";
}

Side parse_side(std::string_view text) {
  if (text == "row") return Side::Row;
  if (text == "col") return Side::Col;
  if (text == "congruence") return Side::Congruence;
  throw Error(ErrorCode::InvalidArgument, "unknown generator side '" + std::string(text) + "'");
}

MatrixPoint::MatrixPoint(QMatrix entries, MatrixMode mode) : entries_(std::move(entries)), mode_(mode) {
  if (entries_.rows() == 0 || entries_.cols() == 0)
    throw Error(ErrorCode::InvalidArgument, "matrix must have at least one row and one column");
  if (mode_ == MatrixMode::Generic) return;
  if (!entries_.is_square()) throw Error(ErrorCode::NotSquare, "symmetric and skew matrices must be square");
  if (mode_ == MatrixMode::Symmetric && !entries_.is_symmetric())
    throw Error(ErrorCode::InvalidArgument, "matrix is not symmetric");
  if (mode_ == MatrixMode::Skew && !entries_.is_skew())
    throw Error(ErrorCode::NotSkewSymmetric, "matrix is not skew-symmetric with zero diagonal");
}

namespace {

std::vector<std::string> space_variables(std::size_t n, std::size_t m, MatrixMode mode,
                                         std::vector<std::pair<std::size_t, std::size_t>>& positions) {
  const bool wide = n >= 10 || m >= 10;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (mode == MatrixMode::Symmetric && j < i) continue;
      if (mode == MatrixMode::Skew && j <= i) continue;
      names.push_back("b" + std::to_string(i + 1) + (wide ? "_" : "") + std::to_string(j + 1));
      positions.emplace_back(i, j);
    }
  return names;
}

PolyMatrix elementary(const Ring& ring, std::size_t size, std::size_t i, std::size_t j) {
  PolyMatrix e(ring, size, size);
  e(i, j) = Polynomial::constant(ring, Rational(1));
  return e;
}

void check_generator(const MatrixSpace& space, const ElemGenerator& g) {
  if (!space.admits(g))
    throw Error(ErrorCode::InvalidArgument,
                std::string(to_string(g.side)) + "(" + std::to_string(g.k + 1) + "," +
                    std::to_string(g.l + 1) + ") does not act on " + std::string(to_string(space.mode())) +
                    " " + std::to_string(space.rows()) + "x" + std::to_string(space.cols()) + " matrices");
}

}  // namespace

MatrixSpace::MatrixSpace(std::size_t n, std::size_t m, MatrixMode mode)
    : n_(n), m_(m), mode_(mode), positions_(), ring_(space_variables(n, m, mode, positions_)),
      generic_(ring_, n, m) {
  if (n == 0 || m == 0) throw Error(ErrorCode::InvalidArgument, "matrix space must be nonempty");
  if (mode != MatrixMode::Generic && n != m)
    throw Error(ErrorCode::NotSquare, "symmetric and skew spaces must be square");
  for (std::size_t v = 0; v < positions_.size(); ++v) {
    const auto [i, j] = positions_[v];
    const Polynomial x = Polynomial::variable(ring_, v);
    generic_(i, j) = x;
    if (mode == MatrixMode::Symmetric) generic_(j, i) = x;
    if (mode == MatrixMode::Skew) generic_(j, i) = -x;
  }
}

std::vector<Rational> MatrixSpace::coordinates(const MatrixPoint& b) const {
  if (b.rows() != n_ || b.cols() != m_ || b.mode() != mode_)
    throw Error(ErrorCode::InvalidArgument, "matrix does not belong to this space");
  std::vector<Rational> c;
  c.reserve(positions_.size());
  for (const auto& [i, j] : positions_) c.push_back(b(i, j));
  return c;
}

bool MatrixSpace::admits(const ElemGenerator& g) const noexcept {
  if (g.k == g.l) return false;
  switch (g.side) {
    case Side::Row: return mode_ == MatrixMode::Generic && g.k < n_ && g.l < n_;
    case Side::Col: return mode_ == MatrixMode::Generic && g.k < m_ && g.l < m_;
    case Side::Congruence: return mode_ != MatrixMode::Generic && g.k < n_ && g.l < n_;
  }
  return false;
}

std::vector<ElemGenerator> MatrixSpace::generators() const {
  std::vector<ElemGenerator> out;
  auto add = [&](Side side, std::size_t size) {
    for (std::size_t k = 0; k < size; ++k)
      for (std::size_t l = 0; l < size; ++l)
        if (k != l) out.push_back({side, k, l});
  };
  if (mode_ == MatrixMode::Generic) {
    add(Side::Row, n_);
    add(Side::Col, m_);
  } else {
    add(Side::Congruence, n_);
  }
  return out;
}

MatrixPoint elem_action(const ElemGenerator& g, const Rational& t, const MatrixPoint& b) {
  check_generator(MatrixSpace::of(b), g);
  if (t.is_zero()) return b;
  QMatrix e = b.entries();
  switch (g.side) {
    case Side::Row:
      for (std::size_t j = 0; j < b.cols(); ++j) e(g.l, j) += t * b(g.k, j);
      break;
    case Side::Col:
      for (std::size_t i = 0; i < b.rows(); ++i) e(i, g.l) += t * b(i, g.k);
      break;
    case Side::Congruence: {
      QMatrix p = QMatrix::identity(b.rows());
      p(g.k, g.l) = t;
      e = p * b.entries() * p.transpose();
      break;
    }
  }
  return MatrixPoint(std::move(e), b.mode());
}

Derivation generator_derivation(const MatrixSpace& space, const ElemGenerator& g) {
  check_generator(space, g);
  const Ring& ring = space.ring();
  const PolyMatrix& b = space.generic_matrix();
  PolyMatrix velocity(ring, space.rows(), space.cols());
  switch (g.side) {
    case Side::Row: velocity = elementary(ring, space.rows(), g.l, g.k) * b; break;
    case Side::Col: velocity = b * elementary(ring, space.cols(), g.k, g.l); break;
    case Side::Congruence:
      velocity = elementary(ring, space.rows(), g.k, g.l) * b + b * elementary(ring, space.rows(), g.l, g.k);
      break;
  }
  std::vector<Polynomial> coeffs;
  for (const auto& [i, j] : space.positions()) coeffs.push_back(velocity(i, j));
  return Derivation(ring, std::move(coeffs));
}

std::vector<Polynomial> invariant_basis(const MatrixSpace& space, const ElemGenerator& g) {
  check_generator(space, g);
  const PolyMatrix& b = space.generic_matrix();
  const std::size_t n = space.rows();
  const std::size_t m = space.cols();
  const std::size_t k = g.k;
  const std::size_t l = g.l;
  std::vector<Polynomial> out;
  switch (g.side) {
    case Side::Col:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (j != l) out.push_back(b(i, j));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(b(i, k) * b(j, l) - b(j, k) * b(i, l));
      break;
    case Side::Row:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (i != l) out.push_back(b(i, j));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) out.push_back(b(k, i) * b(l, j) - b(k, j) * b(l, i));
      break;
    case Side::Congruence: {
      const bool skew = space.mode() == MatrixMode::Skew;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = skew ? i + 1 : i; j < n; ++j)
          if (i != k && j != k) out.push_back(b(i, j));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (i != k && j != k) out.push_back(b(i, k) * b(j, l) - b(j, k) * b(i, l));
      if (skew) out.push_back(b(k, l));
      else out.push_back(b(k, k) * b(l, l) - b(k, l) * b(k, l));
      break;
    }
  }
  return out;
}

Signature signature(const MatrixPoint& b) {
  Signature s;
  s.rank = b.entries().rank();
  if (b.mode() == MatrixMode::Skew) s.pf = pfaffian(b.entries());
  else if (b.entries().is_square()) s.det = b.entries().det();
  return s;
}

Polynomial separating_invariant(const MatrixSpace& space, const ElemGenerator& g, const MatrixPoint& b,
                                const std::vector<MatrixPoint>& frozen) {
  const auto basis = invariant_basis(space, g);
  const auto bc = space.coordinates(b);
  std::vector<Rational> at_b;
  for (const auto& h : basis) at_b.push_back(h.evaluate(bc));
  Polynomial f = Polynomial::constant(space.ring(), Rational(1));
  for (std::size_t z = 0; z < frozen.size(); ++z) {
    const auto zc = space.coordinates(frozen[z]);
    bool found = false;
    for (std::size_t h = 0; h < basis.size() && !found; ++h) {
      const Rational hz = basis[h].evaluate(zc);
      if (hz == at_b[h]) continue;
      f *= (basis[h] - Polynomial::constant(space.ring(), hz)).scaled((at_b[h] - hz).inverse());
      found = true;
    }
    if (!found)
      throw Error(ErrorCode::NotSeparated, "no invariant of " + std::string(to_string(g.side)) + "(" +
                                               std::to_string(g.k + 1) + "," + std::to_string(g.l + 1) +
                                               ") separates the matrix from frozen matrix " +
                                               std::to_string(z),
                  z);
  }
  return f;
}

MatrixPoint apply_replica(const MatrixSpace& space, const ElemReplica& r, const MatrixPoint& b) {
  const Rational speed = r.coeff.evaluate(space.coordinates(b));
  return elem_action(r.generator, r.time * speed, b);
}

}  // namespace flexalg
