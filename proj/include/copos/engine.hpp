#pragma once

#include <copos/error.hpp>
#include <copos/polytope.hpp>
#include <copos/rational.hpp>
#include <copos/simplex.hpp>
#include <copos/symmetric_matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace copos {

enum class VerdictKind { Copositive, NotCopositive, StrictlyCopositive, NotStrictlyCopositive };

inline std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Copositive: return "copositive";
    case VerdictKind::NotCopositive: return "not copositive";
    case VerdictKind::StrictlyCopositive: return "strictly copositive";
    case VerdictKind::NotStrictlyCopositive: return "not strictly copositive";
  }
  return "unknown";
}

enum class Mode { Copositive, Strict };

struct WorkStats {
  std::uint64_t matricesProcessed = 0;  // frontier members examined, root included
  std::uint64_t maxFrontierSize = 0;
  std::uint64_t maxDepth = 0;           // root is depth 0
  BigInt worstCaseBound = 0;
  std::uint64_t duplicatesSkipped = 0;  // only nonzero with dedup enabled
  std::map<std::size_t, std::uint64_t> maxSimplicesByOrder;  // order of the projected matrix -> max simplices
};

struct Verdict {
  VerdictKind kind = VerdictKind::Copositive;
  std::optional<RationalVector> witness;
  WorkStats stats;

  bool isNegative() const { return witness.has_value(); }
};

struct EngineOptions {
  std::optional<std::uint64_t> maxWork;  // cap on matricesProcessed
  bool dedup = false;
  bool parallel = false;
};

/// One projection step: the parent's normalized data plus the branch taken.
/// An empty `simplex` marks the D·A₂·D branch.
struct LineageStep {
  std::shared_ptr<const NormalizedForm> parent;
  std::optional<SimplexVertexMatrix> simplex;
  std::shared_ptr<const LineageStep> previous;
  std::size_t depth = 1;
};

/// A frontier matrix together with the chain of steps that produced it from
/// the root. Steps are shared between siblings.
class TracedMatrix {
 public:
  explicit TracedMatrix(SymmetricMatrix m) : matrix_(std::move(m)) {}
  TracedMatrix(SymmetricMatrix m, std::shared_ptr<const LineageStep> last)
      : matrix_(std::move(m)), last_(std::move(last)) {}

  const SymmetricMatrix& matrix() const noexcept { return matrix_; }
  const std::shared_ptr<const LineageStep>& lastStep() const noexcept { return last_; }
  std::size_t depth() const noexcept { return last_ ? last_->depth : 0; }

  /// Steps ordered from the root outward.
  std::vector<const LineageStep*> lineage() const {
    std::vector<const LineageStep*> out;
    for (const LineageStep* s = last_.get(); s != nullptr; s = s->previous.get()) out.push_back(s);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  SymmetricMatrix matrix_;
  std::shared_ptr<const LineageStep> last_;
};

/// 2^((n−2)(n−3)/2 + 1).
inline BigInt workBound(std::int64_t n) {
  if (n < 3) throw Error(ErrorCode::OutOfRange, "work bound is defined for n >= 3");
  const auto exponent = static_cast<unsigned>((n - 2) * (n - 3) / 2 + 1);
  BigInt b = 1;
  b <<= exponent;
  return b;
}

/// The order-(n−1) matrices whose joint copositivity (given a nonnegative
/// (1,1) entry) is equivalent to that of k.
inline std::vector<TracedMatrix> proj(const TracedMatrix& k) {
  if (k.matrix().order() < 2) throw Error(ErrorCode::OrderTooSmall, "proj needs order >= 2");
  auto nf = std::make_shared<const NormalizedForm>(normalize(k.matrix()));
  const std::size_t depth = k.depth() + 1;

  std::vector<TracedMatrix> out;
  out.emplace_back(nf->scaledTail(), std::make_shared<const LineageStep>(
                                         LineageStep{nf, std::nullopt, k.lastStep(), depth}));

  const bool anyNegative = std::any_of(nf->signVector.begin(), nf->signVector.end(), [](int s) { return s < 0; });
  if (!anyNegative) return out;

  const LabelSplit split = signVectorToLabel(nf->signVector);
  for (auto& w : extendWithZeros(vmatrix(split.label), split.zeros)) {
    SymmetricMatrix child = congruence(nf->bMatrix, w);
    out.emplace_back(std::move(child),
                     std::make_shared<const LineageStep>(LineageStep{nf, std::move(w), k.lastStep(), depth}));
  }
  return out;
}

/// Re-derives a traced matrix from the root by re-running each recorded step.
inline SymmetricMatrix replayLineage(const SymmetricMatrix& root, const TracedMatrix& traced) {
  SymmetricMatrix current = root;
  for (const LineageStep* step : traced.lineage()) {
    const NormalizedForm nf = normalize(current);
    if (!(nf == *step->parent)) throw Error(ErrorCode::WitnessLiftFailure, "lineage does not match the root");
    current = step->simplex ? congruence(nf.bMatrix, *step->simplex) : nf.scaledTail();
  }
  return current;
}

inline bool verifyWitness(const SymmetricMatrix& a, std::span<const Rational> x, Mode mode) {
  if (x.size() != a.order()) throw Error(ErrorCode::DimensionMismatch, "witness length differs from matrix order");
  Rational total = 0;
  for (const auto& xi : x) {
    if (xi.sign() < 0) return false;
    total += xi;
  }
  if (total != 1) return false;
  const int s = evaluateQuadratic(a, x).sign();
  return mode == Mode::Strict ? s <= 0 : s < 0;
}

namespace detail {

/// Smallest 2^k (k >= 0) strictly greater than `bound`.
inline Rational powerOfTwoAbove(const Rational& bound) {
  Rational p = 1;
  while (p <= bound) p *= 2;
  return p;
}

}  // namespace detail

/// Lifts a certificate for `failing.matrix()` back to the root matrix `root`.
/// The returned vector lies on the standard simplex and is exactly verified.
inline RationalVector extractWitness(const SymmetricMatrix& root, const TracedMatrix& failing,
                                     const RationalVector& localWitness, Mode mode) {
  if (localWitness.size() != failing.matrix().order()) {
    throw Error(ErrorCode::DimensionMismatch, "local witness length");
  }
  RationalVector x = localWitness;
  const auto steps = failing.lineage();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const LineageStep& step = **it;
    const NormalizedForm& nf = *step.parent;
    const std::size_t m = nf.signVector.size();

    RationalVector hat(m + 1);
    if (!step.simplex) {
      std::copy(x.begin(), x.end(), hat.begin() + 1);
    } else {
      const RationalVector y = step.simplex->apply(x);
      Rational slope = 0;  // α̂ᵀy
      for (std::size_t i = 0; i < m; ++i) {
        if (nf.signVector[i] != 0) slope += nf.signVector[i] * y[i];
      }
      if (slope.sign() > 0) throw Error(ErrorCode::WitnessLiftFailure, "lifted point left the negative region");
      const Rational& a11 = nf.alpha11();
      if (a11.sign() > 0) {
        hat[0] = -slope / a11;
      } else {
        if (slope.sign() == 0) throw Error(ErrorCode::WitnessLiftFailure, "zero pivot with zero slope");
        const Rational tail = evaluateQuadratic(nf.scaledTail(), y);
        hat[0] = detail::powerOfTwoAbove(abs(tail) / (2 * abs(slope)));
      }
      std::copy(y.begin(), y.end(), hat.begin() + 1);
    }
    for (std::size_t i = 0; i < m; ++i) hat[i + 1] *= nf.dDiag[i];
    x = std::move(hat);
  }

  const Rational total = sum(x);
  if (total.sign() <= 0) throw Error(ErrorCode::WitnessLiftFailure, "lifted witness is zero");
  for (auto& xi : x) xi /= total;
  if (!verifyWitness(root, x, mode)) throw Error(ErrorCode::WitnessLiftFailure, "lifted witness fails verification");
  return x;
}

namespace detail {

inline bool failsPivot(const SymmetricMatrix& m, Mode mode) {
  const int s = m(0, 0).sign();
  return mode == Mode::Strict ? s <= 0 : s < 0;
}

inline bool droppedByFilter(const SymmetricMatrix& m, Mode mode) {
  if (!isEntrywiseNonnegative(m)) return false;
  if (mode == Mode::Copositive) return true;
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (m(i, i).sign() <= 0) return false;
  }
  return true;
}

inline std::vector<std::vector<TracedMatrix>> projectAll(const std::vector<TracedMatrix>& frontier, bool parallel) {
  std::vector<std::vector<TracedMatrix>> out(frontier.size());
  auto work = [&](std::size_t i) {
    if (frontier[i].matrix().order() >= 2) out[i] = proj(frontier[i]);
  };
  if (!parallel || frontier.size() < 2) {
    for (std::size_t i = 0; i < frontier.size(); ++i) work(i);
    return out;
  }
  const std::size_t workers =
      std::min<std::size_t>(frontier.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < frontier.size(); i += workers) work(i);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

inline Verdict runFrontier(const SymmetricMatrix& a, Mode mode, const EngineOptions& opts) {
  WorkStats stats;
  stats.worstCaseBound = workBound(std::max<std::int64_t>(3, static_cast<std::int64_t>(a.order())));

  std::vector<TracedMatrix> frontier{TracedMatrix(a)};
  for (std::uint64_t depth = 0; !frontier.empty(); ++depth) {
    stats.matricesProcessed += frontier.size();
    stats.maxFrontierSize = std::max<std::uint64_t>(stats.maxFrontierSize, frontier.size());
    stats.maxDepth = depth;
    if (opts.maxWork && stats.matricesProcessed > *opts.maxWork) {
      throw Error(ErrorCode::WorkLimitExceeded,
                  "processed " + std::to_string(stats.matricesProcessed) + " matrices, cap is " +
                      std::to_string(*opts.maxWork));
    }

    for (const auto& k : frontier) {
      if (!failsPivot(k.matrix(), mode)) continue;
      RationalVector local(k.matrix().order());
      local[0] = 1;
      auto witness = extractWitness(a, k, local, mode);
      return Verdict{mode == Mode::Strict ? VerdictKind::NotStrictlyCopositive : VerdictKind::NotCopositive,
                     std::move(witness), std::move(stats)};
    }

    auto children = projectAll(frontier, opts.parallel);
    std::vector<TracedMatrix> next;
    std::set<RationalVector> seen;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (!children[i].empty()) {
        auto& slot = stats.maxSimplicesByOrder[frontier[i].matrix().order()];
        slot = std::max<std::uint64_t>(slot, children[i].size() - 1);
      }
      for (auto& child : children[i]) {
        if (droppedByFilter(child.matrix(), mode)) continue;
        if (opts.dedup && !seen.insert(child.matrix().entries()).second) {
          ++stats.duplicatesSkipped;
          continue;
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return Verdict{mode == Mode::Strict ? VerdictKind::StrictlyCopositive : VerdictKind::Copositive, std::nullopt,
                 std::move(stats)};
}

}  // namespace detail

/// Decides xᵀAx >= 0 for all x >= 0. Negative verdicts carry a verified point
/// of the standard simplex where the form is negative.
inline Verdict checkCopositive(const SymmetricMatrix& a, const EngineOptions& opts = {}) {
  return detail::runFrontier(a, Mode::Copositive, opts);
}

/// Decides xᵀAx > 0 for all nonzero x >= 0. Negative verdicts carry a point
/// of the standard simplex where the form is <= 0.
inline Verdict checkStrictlyCopositive(const SymmetricMatrix& a, const EngineOptions& opts = {}) {
  return detail::runFrontier(a, Mode::Strict, opts);
}

}  // namespace copos
