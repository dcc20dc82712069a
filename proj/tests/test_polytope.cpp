#include <copos/polytope.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.hpp"

using namespace copos;
using copos::test::q;

namespace {

SimplexVertex e(std::size_t m, std::size_t j) { return SimplexVertex::unit(m, j); }
SimplexVertex M(std::size_t m, std::size_t i, std::size_t j) { return SimplexVertex::midpoint(m, i, j); }

std::set<std::set<SimplexVertex>> asSets(const std::vector<SimplexVertexMatrix>& simplices) {
  std::set<std::set<SimplexVertex>> out;
  for (const auto& w : simplices) out.insert(std::set<SimplexVertex>(w.columns().begin(), w.columns().end()));
  return out;
}

PolytopeLabel lk(std::size_t k, std::size_t m) {
  std::vector<std::size_t> a, b;
  for (std::size_t i = 1; i <= m; ++i) (i <= k ? a : b).push_back(i);
  return PolytopeLabel(a, b, m);
}

PolytopeLabel randomLabel(std::mt19937_64& rng) {
  const std::size_t m = 2 + rng() % 7;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i + 1;
  std::shuffle(idx.begin(), idx.end(), rng);
  const std::size_t used = 1 + rng() % m;
  const std::size_t t = 1 + rng() % used;
  std::vector<std::size_t> b(idx.begin(), idx.begin() + t), a(idx.begin() + t, idx.begin() + used);
  return PolytopeLabel(a, b, m);
}

void expectCode(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL() << "expected " << to_string(code);
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), code) << err.what();
  }
}

}  // namespace

TEST(Label, SignVectorSeparation) {
  auto split = signVectorToLabel(std::vector{1, 1, -1, -1, -1});
  EXPECT_EQ(split.label.toString(), "[[1,2],[3,4,5]]_5");
  EXPECT_TRUE(split.zeros.cList.empty());

  split = signVectorToLabel(std::vector{0, -1});
  EXPECT_EQ(split.label.toString(), "[[],[2]]_2");
  EXPECT_EQ(split.zeros.cList, std::vector<std::size_t>{1});

  split = signVectorToLabel(std::vector{1, 0, -1, 0});
  EXPECT_EQ(split.label.toString(), "[[1],[3]]_4");
  EXPECT_EQ(split.zeros.cList, (std::vector<std::size_t>{2, 4}));

  expectCode(ErrorCode::NoNegativeSign, [] { signVectorToLabel(std::vector{1, 0, 1}); });
}

TEST(Label, ParseAndPrintRoundTrip) {
  for (const char* text : {"[[1,2],[3,4,5]]_5", "[[],[1,2,3]]_3", "[[2,3],[5]]_6", "[[],[1]]_1"}) {
    EXPECT_EQ(parseLabel(text).toString(), text);
  }
  EXPECT_EQ(parseLabel(" [ [3, 1] , [2] ]_4 ").toString(), "[[1,3],[2]]_4");

  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto label = randomLabel(rng);
    EXPECT_EQ(parseLabel(label.toString()), label);
  }

  expectCode(ErrorCode::ParseError, [] { parseLabel("[[1,2],[3]"); });
  expectCode(ErrorCode::ParseError, [] { parseLabel("[[1,2],[3]]_"); });
  expectCode(ErrorCode::ParseError, [] { parseLabel("[[a],[3]]_4"); });
  expectCode(ErrorCode::OutOfRange, [] { parseLabel("[[1],[7]]_4"); });
  expectCode(ErrorCode::InvalidLabel, [] { parseLabel("[[1,2],[2]]_4"); });
  expectCode(ErrorCode::InvalidLabel, [] { parseLabel("[[1,2],[]]_4"); });
}

TEST(Vertices, Examples) {
  const auto v = verticesOf(PolytopeLabel({2, 3}, {5}, 6));
  EXPECT_EQ(v, (std::vector<SimplexVertex>{e(6, 5), M(6, 2, 5), M(6, 3, 5)}));
  EXPECT_EQ(v[1].coordinates(), (RationalVector{q(0), q(1, 2), q(0), q(0), q(1, 2), q(0)}));

  EXPECT_EQ(verticesOf(PolytopeLabel({}, {1, 2}, 2)), (std::vector<SimplexVertex>{e(2, 1), e(2, 2)}));

  for (std::size_t m = 2; m <= 9; ++m) {
    for (std::size_t k = 0; k < m; ++k) EXPECT_EQ(verticesOf(lk(k, m)).size(), (k + 1) * (m - k));
  }
}

// Independent membership test: y on the face a ∪ b with Σa − Σb ≤ 0.
TEST(Vertices, LieInPolytopeAndCountMatches) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto label = randomLabel(rng);
    const auto vs = verticesOf(label);
    EXPECT_EQ(vs.size(), (label.s() + 1) * label.t());
    for (const auto& v : vs) {
      const auto y = v.coordinates();
      Rational slope = 0;
      for (auto a : label.aList()) slope += y[a - 1];
      for (auto b : label.bList()) slope -= y[b - 1];
      EXPECT_LE(slope, 0);
      EXPECT_EQ(sum(y), 1);
    }
  }
}

TEST(Simpliciality, Examples) {
  EXPECT_FALSE(isSimplicial(PolytopeLabel({1, 2}, {3, 4, 5}, 5)));
  EXPECT_TRUE(isSimplicial(PolytopeLabel({}, {3, 4, 5}, 5)));
  EXPECT_TRUE(isSimplicial(PolytopeLabel({1, 2}, {5}, 5)));
  for (std::size_t m = 2; m <= 10; ++m) {
    for (std::size_t k = 0; k < m; ++k) EXPECT_EQ(isSimplicial(lk(k, m)), k == 0 || k == m - 1);
  }
}

TEST(Decompose, SplitsFromWorkedExample) {
  auto d = decompose(PolytopeLabel({1, 2}, {3, 4, 5}, 5));
  EXPECT_EQ(d.child1.toString(), "[[2],[3,4,5]]_5");
  EXPECT_EQ(d.child2.toString(), "[[1,2],[4,5]]_5");
  EXPECT_EQ(d.splitVertex, M(5, 1, 3));

  d = decompose(PolytopeLabel({2}, {3, 4, 5}, 5));
  EXPECT_EQ(d.child1.toString(), "[[],[3,4,5]]_5");
  EXPECT_EQ(d.child2.toString(), "[[2],[4,5]]_5");
  EXPECT_EQ(d.splitVertex, M(5, 2, 3));

  d = decompose(PolytopeLabel({1, 2}, {4, 5}, 5));
  EXPECT_EQ(d.child1.toString(), "[[2],[4,5]]_5");
  EXPECT_EQ(d.child2.toString(), "[[1,2],[5]]_5");
  EXPECT_EQ(d.splitVertex, M(5, 1, 4));

  expectCode(ErrorCode::AlreadySimplicial, [] { decompose(PolytopeLabel({1, 2}, {5}, 5)); });
}

TEST(Decompose, ChildrenUseParentVertices) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto label = randomLabel(rng);
    if (isSimplicial(label)) continue;
    const auto parent = verticesOf(label);
    const std::set<SimplexVertex> pv(parent.begin(), parent.end());
    const auto d = decompose(label);
    EXPECT_TRUE(pv.count(d.splitVertex));
    for (const auto& child : {d.child1, d.child2}) {
      const auto cv = verticesOf(child);
      for (const auto& v : cv) EXPECT_TRUE(pv.count(v)) << v.toString();
      EXPECT_EQ(std::count(cv.begin(), cv.end(), d.splitVertex), 0);
    }
  }
}

TEST(Vmatrix, WorkedExampleSixSimplices) {
  const std::size_t m = 5;
  const auto out = vmatrix(PolytopeLabel({1, 2}, {3, 4, 5}, m));
  const std::set<std::set<SimplexVertex>> expected = {
      {M(m, 1, 3), M(m, 2, 3), e(m, 3), e(m, 4), e(m, 5)},
      {M(m, 1, 3), M(m, 2, 3), M(m, 2, 4), e(m, 4), e(m, 5)},
      {M(m, 1, 3), M(m, 2, 3), M(m, 2, 4), M(m, 2, 5), e(m, 5)},
      {M(m, 1, 3), M(m, 1, 4), M(m, 2, 4), e(m, 4), e(m, 5)},
      {M(m, 1, 3), M(m, 1, 4), M(m, 2, 4), M(m, 2, 5), e(m, 5)},
      {M(m, 1, 3), M(m, 1, 4), M(m, 1, 5), M(m, 2, 5), e(m, 5)},
  };
  EXPECT_EQ(out.size(), 6u);
  EXPECT_EQ(asSets(out), expected);
  EXPECT_EQ(out.front().toString(), "M(1,3) M(2,3) e3 e4 e5");
}

TEST(Vmatrix, SmallCases) {
  auto out = vmatrix(PolytopeLabel({}, {1, 2, 3}, 3));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].toString(), "e1 e2 e3");

  out = vmatrix(PolytopeLabel({1}, {2, 3}, 3));
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].toString(), "M(1,2) e2 e3");
  EXPECT_EQ(out[1].toString(), "M(1,2) e3 M(1,3)");

  out = vmatrix(PolytopeLabel({}, {1}, 1));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].toString(), "e1");
}

TEST(Vmatrix, CountsFollowBinomialLaw) {
  for (std::size_t m = 2; m <= 10; ++m) {
    for (std::size_t k = 0; k < m; ++k) {
      EXPECT_EQ(vmatrix(lk(k, m)).size(), subdivisionCount(static_cast<std::int64_t>(k), static_cast<std::int64_t>(m)));
    }
  }
  // General index sets behave like L_s⁻ in dimension s+t.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto label = randomLabel(rng);
    const auto st = static_cast<std::int64_t>(label.s() + label.t());
    if (st < 2) continue;
    EXPECT_EQ(vmatrix(label).size(), subdivisionCount(static_cast<std::int64_t>(label.s()), st));
  }
}

TEST(Vmatrix, SimplicesAreAffinelyIndependent) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto label = randomLabel(rng);
    for (const auto& w : vmatrix(label)) {
      EXPECT_EQ(w.size(), label.s() + label.t());
      EXPECT_TRUE(w.isAffinelyIndependent()) << label.toString() << ": " << w.toString();
    }
  }
}

TEST(ExtendWithZeros, Examples) {
  const auto base = vmatrix(PolytopeLabel({1}, {3}, 4));
  EXPECT_EQ(extendWithZeros(base, {}), base);

  const std::vector<SimplexVertexMatrix> single{SimplexVertexMatrix(2, {e(2, 2)})};
  EXPECT_EQ(extendWithZeros(single, ZeroIndexList{{1}})[0].toString(), "e2 e1");

  const auto ext = extendWithZeros(base, ZeroIndexList{{2, 4}});
  ASSERT_EQ(ext.size(), 1u);
  EXPECT_EQ(ext[0].toString(), "e3 M(1,3) e2 e4");
  EXPECT_TRUE(ext[0].isAffinelyIndependent());

  expectCode(ErrorCode::DimensionMismatch, [&] { extendWithZeros(base, ZeroIndexList{{3}}); });
  expectCode(ErrorCode::DimensionMismatch, [&] { extendWithZeros(base, ZeroIndexList{{5}}); });
}

TEST(SubdivisionCount, Examples) {
  EXPECT_EQ(subdivisionCount(2, 5), 6u);
  for (std::int64_t m = 2; m <= 12; ++m) {
    EXPECT_EQ(subdivisionCount(0, m), 1u);
    EXPECT_EQ(subdivisionCount(m - 1, m), 1u);
  }
  expectCode(ErrorCode::OutOfRange, [] { subdivisionCount(5, 5); });
  expectCode(ErrorCode::OutOfRange, [] { subdivisionCount(0, 1); });
  expectCode(ErrorCode::OutOfRange, [] { subdivisionCount(-1, 4); });
}

TEST(Volume, Examples) {
  EXPECT_EQ(simplexVolume(SimplexVertexMatrix(3, {e(3, 2)})), q(1));
  EXPECT_EQ(simplexVolume(SimplexVertexMatrix(2, {e(2, 1), e(2, 2)})), q(1));
  EXPECT_EQ(simplexVolume(SimplexVertexMatrix(2, {M(2, 1, 2), e(2, 2)})), q(1, 2));
  // Gram route: a segment whose support is wider than its dimension.
  EXPECT_EQ(simplexVolume(SimplexVertexMatrix(3, {M(3, 1, 2), M(3, 2, 3)})), q(1, 2));
  expectCode(ErrorCode::DegenerateSimplex,
             [] { simplexVolume(SimplexVertexMatrix(3, {e(3, 1), M(3, 1, 3), e(3, 3)})); });
}

TEST(Volume, ComplementIdentity) {
  for (std::size_t m = 2; m <= 8; ++m) {
    for (std::size_t k = 1; k < m; ++k) {
      Rational total = 0;
      for (const auto& w : vmatrix(lk(k, m))) total += simplexVolume(w);
      for (const auto& w : vmatrix(lk(k, m).swapped())) total += simplexVolume(w);
      EXPECT_EQ(total, q(1)) << "k=" << k << " m=" << m;
    }
  }
}

TEST(Barycentric, CoversSampledPointsOnce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto label = randomLabel(rng);
    const auto vs = verticesOf(label);
    const auto simplices = vmatrix(label);
    for (int sample = 0; sample < 10; ++sample) {
      const auto weights = test::randomSimplexPoint(rng, vs.size());
      RationalVector y(label.ambient());
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto c = vs[i].coordinates();
        for (std::size_t j = 0; j < y.size(); ++j) y[j] += weights[i] * c[j];
      }
      int containing = 0, interior = 0;
      for (const auto& w : simplices) {
        const auto lambda = barycentricCoordinates(w, y);
        ASSERT_TRUE(lambda.has_value());
        EXPECT_EQ(sum(*lambda), 1);
        const bool nonneg = std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x >= 0; });
        const bool pos = std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x > 0; });
        containing += nonneg;
        interior += pos;
      }
      EXPECT_GE(containing, 1) << label.toString();
      EXPECT_LE(interior, 1) << label.toString();
    }
  }
}
