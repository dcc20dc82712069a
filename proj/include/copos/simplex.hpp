#pragma once

#include <copos/error.hpp>
#include <copos/exact_linalg.hpp>
#include <copos/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace copos {

/// A vertex of a standard-simplex subdivision: either a unit vector e_j or the
/// edge midpoint M(i,j) = (e_i + e_j)/2. Indices are 1-based, matching the
/// polytope label notation; `first() == second()` denotes e_j.
class SimplexVertex {
 public:
  static SimplexVertex unit(std::size_t ambient, std::size_t j) { return SimplexVertex(ambient, j, j); }

  static SimplexVertex midpoint(std::size_t ambient, std::size_t i, std::size_t j) {
    if (i == j) throw Error(ErrorCode::InvalidLabel, "midpoint needs two distinct indices");
    return SimplexVertex(ambient, std::min(i, j), std::max(i, j));
  }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }
  bool isUnit() const noexcept { return i_ == j_; }

  /// Nonzero coordinates as (0-based index, weight).
  std::vector<std::pair<std::size_t, Rational>> support() const {
    if (isUnit()) return {{i_ - 1, Rational(1)}};
    const Rational half = make_rational(1, 2);
    return {{i_ - 1, half}, {j_ - 1, half}};
  }

  RationalVector coordinates() const {
    RationalVector x(ambient_);
    for (auto& [idx, w] : support()) x[idx] = w;
    return x;
  }

  std::string toString() const {
    if (isUnit()) return "e" + std::to_string(i_);
    return "M(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
  }

  auto operator<=>(const SimplexVertex&) const = default;

 private:
  SimplexVertex(std::size_t ambient, std::size_t i, std::size_t j) : ambient_(ambient), i_(i), j_(j) {
    if (i == 0 || j == 0 || i > ambient || j > ambient) {
      throw Error(ErrorCode::OutOfRange, "vertex index outside 1.." + std::to_string(ambient));
    }
  }

  std::size_t ambient_;
  std::size_t i_;
  std::size_t j_;
};

/// Ordered vertex columns spanning one simplex (the W of a congruence WᵀBW).
class SimplexVertexMatrix {
 public:
  SimplexVertexMatrix(std::size_t ambient, std::vector<SimplexVertex> columns)
      : ambient_(ambient), columns_(std::move(columns)) {
    for (const auto& v : columns_) {
      if (v.ambient() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vertex ambient dimension");
    }
  }

  static SimplexVertexMatrix identity(std::size_t m) {
    std::vector<SimplexVertex> cols;
    for (std::size_t j = 1; j <= m; ++j) cols.push_back(SimplexVertex::unit(m, j));
    return SimplexVertexMatrix(m, std::move(cols));
  }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return columns_.size(); }
  const std::vector<SimplexVertex>& columns() const noexcept { return columns_; }
  const SimplexVertex& operator[](std::size_t k) const { return columns_[k]; }

  /// Dense m×k coordinate matrix, row-major.
  linalg::DenseMatrix dense() const {
    linalg::DenseMatrix rows(ambient_, RationalVector(columns_.size()));
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      for (auto& [idx, w] : columns_[k].support()) rows[idx][k] = w;
    }
    return rows;
  }

  /// W·z for a coefficient vector z of length size().
  RationalVector apply(const RationalVector& z) const {
    if (z.size() != columns_.size()) throw Error(ErrorCode::DimensionMismatch, "W·z length");
    RationalVector y(ambient_);
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      if (z[k] == 0) continue;
      for (auto& [idx, w] : columns_[k].support()) y[idx] += w * z[k];
    }
    return y;
  }

  /// Sorted union of the 0-based coordinates touched by any column.
  std::vector<std::size_t> supportIndices() const {
    std::vector<std::size_t> idx;
    for (const auto& v : columns_) {
      for (auto& [i, w] : v.support()) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
  }

  bool isAffinelyIndependent() const {
    if (columns_.empty()) return false;
    linalg::DenseMatrix diffs;
    const RationalVector base = columns_[0].coordinates();
    for (std::size_t k = 1; k < columns_.size(); ++k) {
      RationalVector d = columns_[k].coordinates();
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= base[i];
      diffs.push_back(std::move(d));
    }
    return linalg::rank(diffs) == diffs.size();
  }

  std::string toString() const {
    std::string out;
    for (const auto& v : columns_) {
      if (!out.empty()) out += ' ';
      out += v.toString();
    }
    return out;
  }

  bool operator==(const SimplexVertexMatrix&) const = default;

 private:
  std::size_t ambient_;
  std::vector<SimplexVertex> columns_;
};

}  // namespace copos
