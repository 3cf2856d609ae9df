#include "kpairs/ff_oracle.hpp"
#include "kpairs/geometry_example.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

namespace kpairs {
namespace {

using P = MotivicPolynomial;

TEST(HyperplaneUnion, Examples) {
  EXPECT_EQ(hyperplane_union_class(2, 1), P({1, 1}));
  EXPECT_EQ(hyperplane_union_class(2, 2), P({1, 2}));
  EXPECT_EQ(hyperplane_union_class(1, 3), P(3));
  EXPECT_EQ(hyperplane_union_class(4, 0), P());
  EXPECT_EQ(hyperplane_union_class(0, 3), P());
  // Three general lines in CP^2: 3 (1 + L) - 3.
  EXPECT_EQ(hyperplane_union_class(2, 3), P({0, 3}));
  EXPECT_THROW(hyperplane_union_class(-1, 1), std::invalid_argument);
  EXPECT_THROW(hyperplane_union_class(1, -1), std::invalid_argument);
}

TEST(HyperplaneUnion, AddingAHyperplaneAddsPoints) {
  for (int n = 0; n <= 5; ++n)
    for (int q : {2, 3, 5, 7})
      for (int s = 0; s <= q; ++s)
        EXPECT_GE((hyperplane_union_class(n, s + 1) - hyperplane_union_class(n, s)).evaluate(q), 0)
            << n << " " << s << " " << q;
}

TEST(SymmetricPowers, DirectPipeline) {
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(sym_pair_p1_direct(n, 0), PairClass(projective_class(n), projective_class(n)));
  EXPECT_EQ(sym_pair_p1_direct(2, 1), PairClass(P({1, 1, 1}), P({0, 0, 1})));
  EXPECT_EQ(sym_pair_p1_direct(2, 2), PairClass(P({1, 1, 1}), P({0, -1, 1})));
}

TEST(SymmetricPowers, LambdaPipeline) {
  for (int s = 0; s <= 5; ++s) EXPECT_EQ(sym_pair_p1_lambda(1, s), PairClass(P({1, 1}), P({1 - s, 1})));
  EXPECT_EQ(sym_pair_p1_lambda(2, 1), PairClass(P({1, 1, 1}), P({0, 0, 1})));
  EXPECT_EQ(sym_pair_p1_lambda(2, 2), PairClass(P({1, 1, 1}), P({0, -1, 1})));
  EXPECT_EQ(sym_pair_p1_lambda(0, 3), PairClass::one());
}

TEST(SymmetricPowers, PipelinesAgree) {
  for (int n = 0; n <= 8; ++n)
    for (int s = 0; s <= 5; ++s) EXPECT_EQ(sym_pair_p1_lambda(n, s), sym_pair_p1_direct(n, s)) << n << " " << s;
}

TEST(Vieta, TwoFiniteRoots) {
  // (2 - z)(3 - z) = 6 - 5z + z^2 = 1 + z^2 mod 5.
  const auto p = vieta_coefficients({LinePoint::finite(2), LinePoint::finite(3)}, 5);
  EXPECT_EQ(p.coords(), (std::vector<PrimeField::Element>{1, 0, 1}));
}

TEST(Vieta, RootsAtInfinity) {
  // F(u, v) = v^n vanishes only at (1:0); the coefficient of u^n is zero.
  const auto p = vieta_coefficients({LinePoint::infinity(), LinePoint::infinity(), LinePoint::infinity()}, 3);
  EXPECT_EQ(p.coords(), (std::vector<PrimeField::Element>{1, 0, 0, 0}));
}

TEST(Vieta, RootAtZero) {
  EXPECT_EQ(vieta_coefficients({LinePoint::finite(0)}, 3).coords(), (std::vector<PrimeField::Element>{0, 1}));
}

TEST(Vieta, EmptyRootListIsThePointOfP0) {
  EXPECT_EQ(vieta_coefficients({}, 7).coords(), (std::vector<PrimeField::Element>{1}));
}

TEST(Vieta, Errors) {
  EXPECT_THROW(vieta_coefficients({LinePoint::finite(1)}, 4), std::invalid_argument);
  EXPECT_THROW(vieta_coefficients({LinePoint{0, 0}}, 5), std::invalid_argument);
}

TEST(ProjectivePoint, Normalization) {
  const PrimeField f(5);
  EXPECT_EQ(ProjectivePoint({0, 3, 4}, f).coords(), (std::vector<PrimeField::Element>{0, 1, 3}));
  EXPECT_EQ(ProjectivePoint({2, 4}, f), ProjectivePoint({1, 2}, f));
  EXPECT_THROW(ProjectivePoint({0, 0}, f), std::invalid_argument);
  EXPECT_THROW(ProjectivePoint({5, 10}, f), std::invalid_argument);
}

TEST(MarkedUnion, Examples) {
  const PrimeField f(5);
  const auto p = vieta_coefficients({LinePoint::finite(2), LinePoint::finite(3)}, 5);
  EXPECT_FALSE(point_in_marked_union(p, MarkedP1Scene({LinePoint::finite(4)}, f)));
  EXPECT_TRUE(point_in_marked_union(p, MarkedP1Scene({LinePoint::finite(4), LinePoint::finite(3)}, f)));
  EXPECT_FALSE(point_in_marked_union(p, MarkedP1Scene({}, f)));
  EXPECT_FALSE(point_in_marked_union(p, MarkedP1Scene(std::vector<LinePoint>{})));
  EXPECT_FALSE(point_in_marked_union(p, MarkedP1Scene({LinePoint::infinity()}, f)));
  const auto with_inf = vieta_coefficients({LinePoint::finite(2), LinePoint::infinity()}, 5);
  EXPECT_TRUE(point_in_marked_union(with_inf, MarkedP1Scene({LinePoint::infinity()}, f)));
}

TEST(MarkedScene, Validation) {
  const PrimeField f(3);
  EXPECT_THROW(MarkedP1Scene({LinePoint::finite(1), LinePoint::finite(1)}, f), std::invalid_argument);
  EXPECT_THROW(MarkedP1Scene({LinePoint::finite(3)}, f), std::invalid_argument);
  EXPECT_THROW(MarkedP1Scene({LinePoint{2, 0}}, f), std::invalid_argument);
  EXPECT_EQ(MarkedP1Scene::standard(4, f).size(), 4u);
  EXPECT_THROW(MarkedP1Scene::standard(5, f), std::invalid_argument);
  EXPECT_EQ(MarkedP1Scene::standard(1, f).marks().front(), LinePoint::infinity());
}

// Every multiset of n rational roots; the callback sees each exactly once.
void for_each_root_multiset(std::uint64_t q, int n, const std::function<void(const RootList&)>& visit) {
  std::vector<LinePoint> line{LinePoint::infinity()};
  for (std::uint64_t x = 0; x < q; ++x) line.push_back(LinePoint::finite(x));
  RootList roots;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (roots.size() == static_cast<std::size_t>(n)) {
      visit(roots);
      return;
    }
    for (std::size_t i = start; i < line.size(); ++i) {
      roots.push_back(line[i]);
      rec(i);
      roots.pop_back();
    }
  };
  rec(0);
}

TEST(Vieta, InjectiveOnRationalRootMultisets) {
  for (std::uint64_t q : {2, 3, 5})
    for (int n = 1; n <= 3; ++n) {
      std::set<ProjectivePoint> images;
      std::size_t multisets = 0;
      for_each_root_multiset(q, n, [&](const RootList& r) {
        ++multisets;
        images.insert(vieta_coefficients(r, q));
      });
      EXPECT_EQ(images.size(), multisets) << "q=" << q << " n=" << n;
    }
}

TEST(Vieta, FlaggedExactlyWhenARootIsMarked) {
  for (std::uint64_t q : {2, 3, 5}) {
    const PrimeField f(q);
    for (int s = 0; s <= static_cast<int>(std::min<std::uint64_t>(4, q + 1)); ++s) {
      const auto scene = MarkedP1Scene::standard(s, f);
      for (int n = 1; n <= 3; ++n)
        for_each_root_multiset(q, n, [&](const RootList& r) {
          bool marked_root = false;
          for (const auto& root : r)
            for (const auto& m : scene.marks()) marked_root = marked_root || root == m;
          EXPECT_EQ(point_in_marked_union(vieta_coefficients(r, q), scene), marked_root);
        });
    }
  }
}

}  // namespace
}  // namespace kpairs
