#include "flexalg/matrix/transport.hpp"

#include <optional>

#include "flexalg/error.hpp"
#include "flexalg/matrix/normal_forms.hpp"

namespace flexalg {

namespace {

void validate(const std::vector<MatrixPoint>& sources, const std::vector<MatrixPoint>& targets) {
  if (sources.size() != targets.size())
    throw Error(ErrorCode::InvalidArgument, "got " + std::to_string(sources.size()) + " sources and " +
                                                std::to_string(targets.size()) + " targets");
  if (sources.empty()) return;
  const auto& first = sources.front();
  for (std::size_t i = 0; i < sources.size(); ++i)
    for (const auto* b : {&sources[i], &targets[i]})
      if (b->rows() != first.rows() || b->cols() != first.cols())
        throw Error(ErrorCode::InvalidArgument, "matrix shapes differ", i);
  for (std::size_t i = 0; i < sources.size(); ++i)
    if (sources[i].mode() != first.mode() || targets[i].mode() != first.mode())
      throw Error(ErrorCode::InvalidArgument, "matrix modes differ", i);
  for (const auto* list : {&sources, &targets})
    for (std::size_t i = 0; i < list->size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*list)[i] == (*list)[j])
          throw Error(ErrorCode::DuplicatePoint,
                      std::string(list == &sources ? "sources " : "targets ") + std::to_string(j) + " and " +
                          std::to_string(i) + " coincide",
                      i);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const Signature s = signature(sources[i]);
    const Signature t = signature(targets[i]);
    if (!(s == t)) throw Error(ErrorCode::SignatureMismatch, "source and target signatures differ", i);
  }
  if (first.mode() == MatrixMode::Symmetric)
    for (std::size_t i = 0; i < sources.size(); ++i)
      if (signature(sources[i]).rank < 2)
        throw Error(ErrorCode::UnsupportedStratum, "symmetric transport needs rank at least 2", i);
}

}  // namespace

namespace {

constexpr int kConjugations = 6;

// Places each source on its target in turn and returns the replica word.
std::vector<ElemReplica> place(const MatrixSpace& space, const std::vector<MatrixPoint>& sources,
                               const std::vector<MatrixPoint>& targets, const TransportOptions& options,
                               std::size_t prefix, Rng& rng) {
  const auto generators = space.generators();
  std::vector<MatrixPoint> current = sources;
  std::vector<ElemReplica> word;

  auto apply_all = [&](ElemReplica r) {
    if (prefix + word.size() >= options.word_cap)
      throw Error(ErrorCode::BudgetExhausted,
                  "certificate word exceeds the cap of " + std::to_string(options.word_cap) + " replicas");
    for (auto& b : current) b = apply_replica(space, r, b);
    word.push_back(std::move(r));
  };

  // Coefficient vanishing on the placed targets. It also vanishes on the
  // matrices still waiting when they can be separated too; untouched waiting
  // matrices keep their small entries.
  auto coefficient = [&](const ElemGenerator& g, std::size_t i,
                         const std::vector<MatrixPoint>& frozen) -> std::optional<Polynomial> {
    if (i + 1 < current.size()) {
      std::vector<MatrixPoint> wider = frozen;
      wider.insert(wider.end(), current.begin() + static_cast<std::ptrdiff_t>(i + 1), current.end());
      try {
        return separating_invariant(space, g, current[i], wider);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSeparated) throw;
      }
    }
    try {
      return separating_invariant(space, g, current[i], frozen);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSeparated) throw;
    }
    return std::nullopt;
  };
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const std::vector<MatrixPoint> frozen(targets.begin(), targets.begin() + static_cast<std::ptrdiff_t>(i));
    unsigned retries = 0;
    while (!(current[i] == targets[i])) {
      std::vector<ElemStep> path;
      try {
        path = plan_path(current[i], targets[i], rng);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::SeparationFailure) throw Error(e.code(), e.what(), i);
        throw;
      }
      bool blocked = false;
      for (const auto& step : path) {
        // A step fixing the moving matrix needs no replica, and its fixed
        // point may be inseparable from a placed target.
        if (elem_action(step.generator, step.t, current[i]) == current[i]) continue;
        auto f = coefficient(step.generator, i, frozen);
        if (!f) {
          blocked = true;
          break;
        }
        apply_all({step.generator, std::move(*f), step.t});
      }
      if (!blocked) {
        if (!(current[i] == targets[i])) throw Error(ErrorCode::Internal, "path execution missed its target", i);
        break;
      }
      if (++retries > options.retry_budget)
        throw Error(ErrorCode::SeparationFailure,
                    "moving matrix stays unseparated from placed targets after " +
                        std::to_string(options.retry_budget) + " random pre-moves",
                    i);
      // Random pre-moves fixing every placed target. A single move can be
      // undone by the next plan, so their number cycles through 1, 2, 3.
      for (unsigned k = 0; k < 1 + (retries - 1) % 3; ++k) {
        bool moved = false;
        for (int attempt = 0; attempt < 256 && !moved; ++attempt) {
          const auto& g = generators[static_cast<std::size_t>(rng.range(0, static_cast<long>(generators.size()) - 1))];
          const Rational tau = rng.nonzero_rational(3, 2);
          if (elem_action(g, tau, current[i]) == current[i]) continue;
          if (auto f = coefficient(g, i, frozen)) {
            apply_all({g, std::move(*f), tau});
            moved = true;
          }
        }
        if (!moved) throw Error(ErrorCode::SeparationFailure, "no separating pre-move available", i);
      }
    }
  }
  return word;
}

}  // namespace

TransportCertificate transport(const std::vector<MatrixPoint>& sources, const std::vector<MatrixPoint>& targets,
                               const TransportOptions& options) {
  validate(sources, targets);
  TransportCertificate cert;
  cert.problem.sources = sources;
  cert.problem.targets = targets;
  if (sources.empty()) {
    cert.verified = true;
    return cert;
  }
  cert.problem.mode = sources.front().mode();
  const MatrixSpace space = MatrixSpace::of(sources.front());
  Rng rng(options.seed);
  try {
    cert.word = place(space, sources, targets, options, 0, rng);
  } catch (const Error& first) {
    if (first.code() != ErrorCode::SeparationFailure) throw;
    // The planned paths run through fixed normal forms, which may sit on a
    // placed target's orbit line. A random linear change of coordinates g,
    // applied by replicas with coefficient 1, moves every matrix alike:
    // the word is g, then the transport of g(sources) to g(targets), then g^-1.
    const auto generators = space.generators();
    const Polynomial one = Polynomial::constant(space.ring(), Rational(1));
    bool done = false;
    for (int attempt = 0; attempt < kConjugations && !done; ++attempt) {
      std::vector<ElemStep> g;
      for (std::size_t k = 0; k < 2 * space.rows(); ++k)
        g.push_back({generators[static_cast<std::size_t>(rng.range(0, static_cast<long>(generators.size()) - 1))],
                     rng.nonzero_rational(3, 2)});
      std::vector<MatrixPoint> gs, gt;
      for (const auto& b : sources) gs.push_back(run_steps(g, b));
      for (const auto& b : targets) gt.push_back(run_steps(g, b));
      try {
        auto inner = place(space, gs, gt, options, 2 * g.size(), rng);
        cert.word.clear();
        for (const auto& st : g) cert.word.push_back({st.generator, one, st.t});
        for (auto& r : inner) cert.word.push_back(std::move(r));
        for (const auto& st : inverse_steps(g)) cert.word.push_back({st.generator, one, st.t});
        done = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SeparationFailure) throw;
      }
    }
    if (!done) throw;
  }
  cert.verified = verify(cert);
  if (!cert.verified) throw Error(ErrorCode::Internal, "transport certificate failed verification");
  return cert;
}

bool verify(const TransportCertificate& c) {
  const auto& sources = c.problem.sources;
  const auto& targets = c.problem.targets;
  if (sources.size() != targets.size()) return false;
  if (sources.empty()) return c.word.empty();
  try {
    const MatrixSpace space = MatrixSpace::of(sources.front());
    std::vector<std::pair<ElemGenerator, Derivation>> derivations;
    auto derivation_of = [&](const ElemGenerator& g) -> const Derivation& {
      for (const auto& [h, d] : derivations)
        if (h == g) return d;
      derivations.emplace_back(g, generator_derivation(space, g));
      return derivations.back().second;
    };
    std::vector<MatrixPoint> images = sources;
    for (const auto& r : c.word) {
      if (!space.admits(r.generator) || !(r.coeff.ring() == space.ring())) return false;
      if (!in_kernel(derivation_of(r.generator), r.coeff)) return false;
      for (auto& b : images) b = apply_replica(space, r, b);
    }
    return images == targets;
  } catch (const Error&) {
    return false;
  }
}

AutWord to_aut_word(const TransportCertificate& c) {
  if (c.problem.sources.empty()) return AutWord(Ring());
  const MatrixSpace space = MatrixSpace::of(c.problem.sources.front());
  AutWord w(space.ring());
  for (auto it = c.word.rbegin(); it != c.word.rend(); ++it)
    w.push_back(FlowStep(generator_derivation(space, it->generator).multiplied(it->coeff), it->time));
  return w;
}

}  // namespace flexalg
