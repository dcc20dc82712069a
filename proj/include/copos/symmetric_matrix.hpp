#pragma once

#include <copos/error.hpp>
#include <copos/rational.hpp>
#include <copos/simplex.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace copos {

/// Exact symmetric n×n matrix over the rationals. The constructor and
/// `set` keep the two triangles equal, so symmetry holds by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), entries_(n * n) {
    if (n == 0) throw Error(ErrorCode::OrderTooSmall, "matrix order must be at least 1");
  }

  /// Rejects non-square or asymmetric data; nothing is silently repaired.
  static SymmetricMatrix fromRows(const std::vector<RationalVector>& rows) {
    const std::size_t n = rows.size();
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i + 1) + " has " +
                                                      std::to_string(rows[i].size()) + " entries, expected " +
                                                      std::to_string(n));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (rows[i][j] != rows[j][i]) {
          throw Error(ErrorCode::AsymmetricMatrix, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                       ") differs from its transpose");
        }
        m.set(i, j, rows[i][j]);
      }
    }
    return m;
  }

  static SymmetricMatrix fromIntegers(const std::vector<std::vector<long>>& rows) {
    std::vector<RationalVector> q;
    for (const auto& r : rows) {
      RationalVector qr;
      for (long v : r) qr.emplace_back(v);
      q.push_back(std::move(qr));
    }
    return fromRows(q);
  }

  static SymmetricMatrix identity(std::size_t n) {
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  std::size_t order() const noexcept { return n_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, const Rational& v) {
    entries_[i * n_ + j] = v;
    entries_[j * n_ + i] = v;
  }

  /// Row-major storage of all n² entries.
  const RationalVector& entries() const noexcept { return entries_; }

  std::vector<RationalVector> rows() const {
    std::vector<RationalVector> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i].assign(entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_);
    return out;
  }

  bool operator==(const SymmetricMatrix&) const = default;

 private:
  std::size_t n_;
  RationalVector entries_;
};

inline SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::DimensionMismatch, "sum of matrices of different order");
  SymmetricMatrix c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = i; j < a.order(); ++j) c.set(i, j, a(i, j) + b(i, j));
  }
  return c;
}

/// A = [[alpha11, alphaᵀ], [alpha, a2]].
struct PartitionedView {
  Rational alpha11;
  RationalVector alpha;
  SymmetricMatrix a2;

  SymmetricMatrix reassemble() const {
    SymmetricMatrix m(a2.order() + 1);
    m.set(0, 0, alpha11);
    for (std::size_t i = 0; i < alpha.size(); ++i) m.set(0, i + 1, alpha[i]);
    for (std::size_t i = 0; i < a2.order(); ++i) {
      for (std::size_t j = i; j < a2.order(); ++j) m.set(i + 1, j + 1, a2(i, j));
    }
    return m;
  }
};

/// The diagonally rescaled matrix Â = diag(1,D)·A·diag(1,D) whose first row
/// carries only signs, together with B = alpha11·(D·A₂·D) − α̂α̂ᵀ.
struct NormalizedForm {
  RationalVector dDiag;
  SymmetricMatrix aHat;
  std::vector<int> signVector;
  SymmetricMatrix bMatrix;

  const Rational& alpha11() const { return aHat(0, 0); }

  /// The trailing block D·A₂·D of Â.
  SymmetricMatrix scaledTail() const {
    const std::size_t m = aHat.order() - 1;
    SymmetricMatrix t(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) t.set(i, j, aHat(i + 1, j + 1));
    }
    return t;
  }

  bool operator==(const NormalizedForm&) const = default;
};

inline PartitionedView partition(const SymmetricMatrix& a) {
  const std::size_t n = a.order();
  if (n < 2) throw Error(ErrorCode::OrderTooSmall, "partition needs order >= 2");
  PartitionedView v{a(0, 0), RationalVector(n - 1), SymmetricMatrix(n - 1)};
  for (std::size_t i = 1; i < n; ++i) {
    v.alpha[i - 1] = a(0, i);
    for (std::size_t j = i; j < n; ++j) v.a2.set(i - 1, j - 1, a(i, j));
  }
  return v;
}

/// diag(d)·a·diag(d) for a strictly positive scaling vector d.
inline SymmetricMatrix scaleDiagConjugate(const SymmetricMatrix& a, std::span<const Rational> d) {
  if (d.size() != a.order()) throw Error(ErrorCode::DimensionMismatch, "scaling vector length");
  for (const auto& di : d) {
    if (di.sign() <= 0) throw Error(ErrorCode::NonpositiveScale, "scaling entry " + to_string(di) + " is not positive");
  }
  SymmetricMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = i; j < a.order(); ++j) out.set(i, j, d[i] * a(i, j) * d[j]);
  }
  return out;
}

inline NormalizedForm normalize(const SymmetricMatrix& a) {
  const PartitionedView p = partition(a);
  const std::size_t m = p.alpha.size();

  RationalVector scale(m + 1);
  scale[0] = 1;
  RationalVector dDiag(m);
  std::vector<int> signs(m);
  for (std::size_t i = 0; i < m; ++i) {
    signs[i] = p.alpha[i].sign();
    dDiag[i] = signs[i] == 0 ? Rational(1) : Rational(1 / abs(p.alpha[i]));
    scale[i + 1] = dDiag[i];
  }
  SymmetricMatrix aHat = scaleDiagConjugate(a, scale);

  SymmetricMatrix b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      b.set(i, j, p.alpha11 * aHat(i + 1, j + 1) - Rational(signs[i] * signs[j]));
    }
  }
  return NormalizedForm{std::move(dDiag), std::move(aHat), std::move(signs), std::move(b)};
}

/// WᵀBW, exploiting that every column of W has at most two nonzeros.
inline SymmetricMatrix congruence(const SymmetricMatrix& b, const SimplexVertexMatrix& w) {
  if (w.ambient() != b.order()) {
    throw Error(ErrorCode::DimensionMismatch, "W has " + std::to_string(w.ambient()) + " rows, B has order " +
                                                  std::to_string(b.order()));
  }
  const std::size_t k = w.size();
  if (k == 0) throw Error(ErrorCode::DimensionMismatch, "W has no columns");
  std::vector<std::vector<std::pair<std::size_t, Rational>>> supports;
  supports.reserve(k);
  for (const auto& v : w.columns()) supports.push_back(v.support());

  SymmetricMatrix out(k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p; q < k; ++q) {
      Rational acc = 0;
      for (const auto& [i, wi] : supports[p]) {
        for (const auto& [j, wj] : supports[q]) acc += wi * b(i, j) * wj;
      }
      out.set(p, q, acc);
    }
  }
  return out;
}

inline bool isEntrywiseNonnegative(const SymmetricMatrix& m) {
  return std::none_of(m.entries().begin(), m.entries().end(), [](const Rational& x) { return x.sign() < 0; });
}

inline Rational evaluateQuadratic(const SymmetricMatrix& a, std::span<const Rational> x) {
  if (x.size() != a.order()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from matrix order");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (x[i] == 0) continue;
    Rational row = a(i, i) * x[i];
    for (std::size_t j = i + 1; j < a.order(); ++j) {
      if (x[j] != 0) row += 2 * a(i, j) * x[j];
    }
    acc += x[i] * row;
  }
  return acc;
}

/// PᵀAP with result(i,j) = a(perm[i], perm[j]); `perm` is 0-based.
inline SymmetricMatrix permuteConjugate(const SymmetricMatrix& a, std::span<const std::size_t> perm) {
  const std::size_t n = a.order();
  if (perm.size() != n) throw Error(ErrorCode::InvalidPermutation, "permutation length differs from order");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw Error(ErrorCode::InvalidPermutation, "not a permutation of 0.." + std::to_string(n - 1));
    seen[p] = true;
  }
  SymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.set(i, j, a(perm[i], perm[j]));
  }
  return out;
}

}  // namespace copos
