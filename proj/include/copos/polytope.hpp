#pragma once

#include <copos/error.hpp>
#include <copos/exact_linalg.hpp>
#include <copos/rational.hpp>
#include <copos/simplex.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace copos {

/// The polytope [[a₁…a_s],[b₁…b_t]]_m: points of the face of Δ_m supported on
/// a ∪ b whose a-coordinates sum to at most the b-coordinates. Indices are
/// 1-based and both lists are kept sorted ascending.
class PolytopeLabel {
 public:
  PolytopeLabel(std::vector<std::size_t> aList, std::vector<std::size_t> bList, std::size_t ambient)
      : a_(std::move(aList)), b_(std::move(bList)), m_(ambient) {
    std::sort(a_.begin(), a_.end());
    std::sort(b_.begin(), b_.end());
    if (b_.empty()) throw Error(ErrorCode::InvalidLabel, "the b-list must be nonempty");
    if (a_.size() + b_.size() > m_) throw Error(ErrorCode::InvalidLabel, "more indices than the ambient dimension");
    std::vector<std::size_t> all(a_);
    all.insert(all.end(), b_.begin(), b_.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i] == 0 || all[i] > m_) {
        throw Error(ErrorCode::OutOfRange, "index " + std::to_string(all[i]) + " outside 1.." + std::to_string(m_));
      }
      if (i > 0 && all[i] == all[i - 1]) {
        throw Error(ErrorCode::InvalidLabel, "duplicate index " + std::to_string(all[i]));
      }
    }
  }

  const std::vector<std::size_t>& aList() const noexcept { return a_; }
  const std::vector<std::size_t>& bList() const noexcept { return b_; }
  std::size_t ambient() const noexcept { return m_; }
  std::size_t s() const noexcept { return a_.size(); }
  std::size_t t() const noexcept { return b_.size(); }
  std::size_t dimension() const noexcept { return a_.size() + b_.size() - 1; }

  /// The same polytope with the two index lists exchanged.
  PolytopeLabel swapped() const { return PolytopeLabel(b_, a_, m_); }

  std::string toString() const {
    auto list = [](const std::vector<std::size_t>& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
      }
      return out + "]";
    };
    return "[" + list(a_) + "," + list(b_) + "]_" + std::to_string(m_);
  }

  bool operator==(const PolytopeLabel&) const = default;

 private:
  std::vector<std::size_t> a_;
  std::vector<std::size_t> b_;
  std::size_t m_;
};

/// Coordinates whose sign is zero; their unit vectors cone over S⁻.
struct ZeroIndexList {
  std::vector<std::size_t> cList;
  bool operator==(const ZeroIndexList&) const = default;
};

struct LabelSplit {
  PolytopeLabel label;
  ZeroIndexList zeros;
};

struct Decomposition {
  PolytopeLabel child1;  // a₁ removed
  PolytopeLabel child2;  // b₁ removed
  SimplexVertex splitVertex;
};

inline LabelSplit signVectorToLabel(std::span<const int> beta) {
  std::vector<std::size_t> a, b, c;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const std::size_t idx = i + 1;
    if (beta[i] > 0) {
      a.push_back(idx);
    } else if (beta[i] < 0) {
      b.push_back(idx);
    } else {
      c.push_back(idx);
    }
  }
  if (b.empty()) throw Error(ErrorCode::NoNegativeSign, "sign vector has no -1 entry");
  return LabelSplit{PolytopeLabel(std::move(a), std::move(b), beta.size()), ZeroIndexList{std::move(c)}};
}

/// e_b for b ascending, then M(a,b) in (a,b) lexicographic order.
inline std::vector<SimplexVertex> verticesOf(const PolytopeLabel& label) {
  std::vector<SimplexVertex> out;
  out.reserve((label.s() + 1) * label.t());
  for (std::size_t b : label.bList()) out.push_back(SimplexVertex::unit(label.ambient(), b));
  for (std::size_t a : label.aList()) {
    for (std::size_t b : label.bList()) out.push_back(SimplexVertex::midpoint(label.ambient(), a, b));
  }
  return out;
}

inline bool isSimplicial(const PolytopeLabel& label) { return label.s() == 0 || label.t() == 1; }

inline Decomposition decompose(const PolytopeLabel& label) {
  if (isSimplicial(label)) throw Error(ErrorCode::AlreadySimplicial, label.toString() + " is already a simplex");
  const auto& a = label.aList();
  const auto& b = label.bList();
  return Decomposition{
      PolytopeLabel(std::vector<std::size_t>(a.begin() + 1, a.end()), b, label.ambient()),
      PolytopeLabel(a, std::vector<std::size_t>(b.begin() + 1, b.end()), label.ambient()),
      SimplexVertex::midpoint(label.ambient(), a.front(), b.front()),
  };
}

/// Simplicial subdivision by repeated splitting on M(a₁,b₁). Depth-first with
/// child1 expanded before child2; each simplex lists the split vertices in
/// the order they were introduced, then the vertices of the terminal label.
inline std::vector<SimplexVertexMatrix> vmatrix(const PolytopeLabel& label) {
  struct Item {
    PolytopeLabel label;
    std::vector<SimplexVertex> apex;
  };
  std::vector<SimplexVertexMatrix> out;
  std::vector<Item> stack{{label, {}}};
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    if (isSimplicial(item.label)) {
      std::vector<SimplexVertex> cols = std::move(item.apex);
      for (auto& v : verticesOf(item.label)) cols.push_back(v);
      out.emplace_back(label.ambient(), std::move(cols));
      continue;
    }
    Decomposition d = decompose(item.label);
    std::vector<SimplexVertex> apex = std::move(item.apex);
    apex.push_back(d.splitVertex);
    stack.push_back(Item{std::move(d.child2), apex});
    stack.push_back(Item{std::move(d.child1), std::move(apex)});
  }
  return out;
}

/// Appends e_c for every zero index to each simplex.
inline std::vector<SimplexVertexMatrix> extendWithZeros(const std::vector<SimplexVertexMatrix>& simplices,
                                                        const ZeroIndexList& zeros) {
  if (zeros.cList.empty()) return simplices;
  std::vector<SimplexVertexMatrix> out;
  out.reserve(simplices.size());
  for (const auto& w : simplices) {
    const auto support = w.supportIndices();
    std::vector<SimplexVertex> cols = w.columns();
    for (std::size_t c : zeros.cList) {
      if (c == 0 || c > w.ambient()) {
        throw Error(ErrorCode::DimensionMismatch, "zero index " + std::to_string(c) + " outside the ambient space");
      }
      if (std::binary_search(support.begin(), support.end(), c - 1)) {
        throw Error(ErrorCode::DimensionMismatch, "zero index " + std::to_string(c) + " meets the simplex support");
      }
      cols.push_back(SimplexVertex::unit(w.ambient(), c));
    }
    out.emplace_back(w.ambient(), std::move(cols));
  }
  return out;
}

/// binomial(m−1, k): the number of simplices vmatrix emits for L_k⁻ in Δ_m.
inline std::uint64_t subdivisionCount(std::int64_t k, std::int64_t m) {
  if (m < 2 || k < 0 || k > m - 1) {
    throw Error(ErrorCode::OutOfRange, "need 0 <= k <= m-1 and m >= 2");
  }
  if (m > 64) throw Error(ErrorCode::OutOfRange, "m too large for a 64-bit count");
  const std::int64_t n = m - 1;
  const std::int64_t r = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(acc);
}

namespace detail {

inline std::optional<BigInt> exactSqrt(const BigInt& v) {
  if (v < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

}  // namespace detail

/// Volume of the d-simplex spanned by w, measured in units of the standard
/// d-simplex conv{e_1,…,e_{d+1}}. This is the Gram-determinant volume
/// sqrt(det(GᵀG)/(d+1)) with G the edge vectors from the first vertex; for a
/// simplex lying in a d-dimensional coordinate face it equals the absolute
/// determinant of the coordinates restricted to that face.
inline Rational simplexVolume(const SimplexVertexMatrix& w) {
  if (w.size() == 0) throw Error(ErrorCode::DegenerateSimplex, "empty vertex list");
  const std::size_t d = w.size() - 1;
  if (d == 0) return 1;

  const auto support = w.supportIndices();
  const auto dense = w.dense();
  if (support.size() == d + 1) {
    linalg::DenseMatrix sub;
    for (std::size_t i : support) sub.push_back(dense[i]);
    Rational det = linalg::determinant(std::move(sub));
    if (det == 0) throw Error(ErrorCode::DegenerateSimplex, w.toString());
    return abs(det);
  }

  linalg::DenseMatrix edges;
  for (std::size_t k = 1; k <= d; ++k) {
    RationalVector e(w.ambient());
    for (std::size_t i = 0; i < w.ambient(); ++i) e[i] = dense[i][k] - dense[i][0];
    edges.push_back(std::move(e));
  }
  linalg::DenseMatrix gram(d, RationalVector(d));
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      for (std::size_t i = 0; i < w.ambient(); ++i) gram[p][q] += edges[p][i] * edges[q][i];
    }
  }
  const Rational ratio = linalg::determinant(std::move(gram)) / Rational(d + 1);
  if (ratio == 0) throw Error(ErrorCode::DegenerateSimplex, w.toString());
  auto num = detail::exactSqrt(boost::multiprecision::numerator(ratio));
  auto den = detail::exactSqrt(boost::multiprecision::denominator(ratio));
  if (!num || !den) throw Error(ErrorCode::OutOfRange, "volume of " + w.toString() + " is irrational");
  return Rational(*num, *den);
}

/// Barycentric coordinates of y with respect to w, or nullopt when y is not
/// in the affine hull of w. Requires w to lie in a coordinate face of its own
/// dimension (true for every simplex vmatrix produces).
inline std::optional<RationalVector> barycentricCoordinates(const SimplexVertexMatrix& w, std::span<const Rational> y) {
  if (y.size() != w.ambient()) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  const auto support = w.supportIndices();
  if (support.size() != w.size()) throw Error(ErrorCode::DegenerateSimplex, "simplex does not fill its face");
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != 0 && !std::binary_search(support.begin(), support.end(), i)) return std::nullopt;
  }
  const auto dense = w.dense();
  linalg::DenseMatrix sub;
  RationalVector rhs;
  for (std::size_t i : support) {
    sub.push_back(dense[i]);
    rhs.push_back(y[i]);
  }
  return linalg::solve(std::move(sub), std::move(rhs));
}

/// Parses "[[1,2],[3,4,5]]_5"; whitespace is ignored.
inline PolytopeLabel parseLabel(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> PolytopeLabel {
    throw Error(ErrorCode::ParseError, "malformed label '" + std::string(text) + "': " + why);
  };
  auto expect = [&](char ch) {
    if (pos >= s.size() || s[pos] != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  };
  auto number = [&]() -> std::size_t {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an index");
    if (pos - start > 9) fail("index too large");
    return std::stoul(s.substr(start, pos - start));
  };
  auto list = [&]() {
    std::vector<std::size_t> out;
    expect('[');
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      return out;
    }
    out.push_back(number());
    while (pos < s.size() && s[pos] == ',') {
      ++pos;
      out.push_back(number());
    }
    expect(']');
    return out;
  };
  expect('[');
  auto a = list();
  expect(',');
  auto b = list();
  expect(']');
  expect('_');
  const std::size_t m = number();
  if (pos != s.size()) fail("trailing characters");
  return PolytopeLabel(std::move(a), std::move(b), m);
}

}  // namespace copos
