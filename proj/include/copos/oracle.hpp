#pragma once

#include <copos/error.hpp>
#include <copos/rational.hpp>
#include <copos/symmetric_matrix.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

// Ground truth for tests: lattice refutation, the 2×2 closed form, and
// seeded matrix generators.
namespace copos::oracle {

struct GridSpec {
  std::uint32_t denominator = 1;
};

/// Evaluates the form at every point of Δ_n with coordinates k/K and returns
/// the first negative one. Points are visited in descending lexicographic
/// order of (k₁,…,k_n), i.e. starting at e₁. Finding nothing proves nothing.
inline std::optional<RationalVector> gridRefute(const SymmetricMatrix& a, GridSpec grid) {
  if (grid.denominator == 0) throw Error(ErrorCode::OutOfRange, "grid denominator must be positive");
  const std::size_t n = a.order();
  const std::int64_t K = grid.denominator;

  // Sign of kᵀAk equals the sign of kᵀ(L·A)k for the common denominator L.
  BigInt lcm = 1;
  for (const auto& q : a.entries()) lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(q)));
  std::vector<BigInt> scaled(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const Rational v = a.entries()[i] * Rational(lcm);
    scaled[i] = boost::multiprecision::numerator(v);
  }

  std::vector<std::int64_t> k(n, 0);
  k[0] = K;
  // row[i] = Σ_j scaled(i,j)·k_j, kept current as k changes.
  std::vector<BigInt> row(n);
  auto refresh = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (k[j] != 0) row[i] += scaled[i * n + j] * k[j];
      }
    }
  };
  refresh();
  while (true) {
    BigInt q = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (k[i] != 0) q += row[i] * k[i];
    }
    if (q < 0) {
      RationalVector x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = make_rational(k[i], K);
      return x;
    }
    // Next composition in descending lexicographic order: move one unit from
    // the last nonzero position before n−1 to its right neighbour, gathering
    // the tail into it.
    std::size_t p = n;
    for (std::size_t i = n - 1; i-- > 0;) {
      if (k[i] > 0) {
        p = i;
        break;
      }
    }
    if (p == n) return std::nullopt;
    const std::int64_t tail = k[n - 1];
    k[n - 1] = 0;
    k[p] -= 1;
    k[p + 1] = tail + 1;
    refresh();
  }
}

struct ClosedForm2x2 {
  bool copositive;
  bool strictly;
};

inline ClosedForm2x2 closedForm2x2(const SymmetricMatrix& a) {
  if (a.order() != 2) throw Error(ErrorCode::WrongOrder, "closed form applies to 2x2 matrices only");
  const Rational &p = a(0, 0), &q = a(1, 1), &r = a(0, 1);
  const Rational r2 = r * r, pq = p * q;
  return ClosedForm2x2{
      p >= 0 && q >= 0 && (r >= 0 || r2 <= pq),
      p > 0 && q > 0 && (r >= 0 || r2 < pq),
  };
}

/// Seeded generator shared by all matrix families. The scheme is fixed so
/// corpora are reproducible anywhere: std::mt19937_64 seeded with `seed`, and
/// an integer in [lo, hi] drawn as lo + (raw % (hi − lo + 1)).
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// Numerator in [lo, hi], denominator in [1, 10].
  Rational rational(std::int64_t lo, std::int64_t hi) {
    const std::int64_t num = integer(lo, hi);
    return make_rational(num, integer(1, 10));
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// GᵀG for a seeded integer matrix G with entries in [−3, 3].
inline SymmetricMatrix genPsd(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::OrderTooSmall, "order must be at least 1");
  Draw draw(seed);
  std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n));
  for (auto& r : g) {
    for (auto& v : r) v = draw.integer(-3, 3);
  }
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += g[k][i] * g[k][j];
      m.set(i, j, acc);
    }
  }
  return m;
}

/// Upper-triangle entries p/q with p in [0, 10] and q in [1, 10].
inline SymmetricMatrix genNonnegative(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::OrderTooSmall, "order must be at least 1");
  Draw draw(seed);
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, draw.rational(0, 10));
  }
  return m;
}

/// Upper-triangle entries p/q with q in [1, 10]; p in [0, 10] on the diagonal
/// and in [−10, 10] off it.
inline SymmetricMatrix genRandom(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::OrderTooSmall, "order must be at least 1");
  Draw draw(seed);
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, i == j ? draw.rational(0, 10) : draw.rational(-10, 10));
  }
  return m;
}

/// The 5×5 Horn matrix: copositive, not strictly copositive, and not a sum
/// of a positive semidefinite and a nonnegative matrix.
inline SymmetricMatrix hornMatrix() {
  return SymmetricMatrix::fromIntegers({
      {1, -1, 1, 1, -1},
      {-1, 1, -1, 1, 1},
      {1, -1, 1, -1, 1},
      {1, 1, -1, 1, -1},
      {-1, 1, 1, -1, 1},
  });
}

}  // namespace copos::oracle
