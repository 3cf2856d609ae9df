#include "kpairs/ff_oracle.hpp"
#include "kpairs/geometry_example.hpp"
#include "kpairs/lambda_power.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace kpairs {
namespace {

using P = MotivicPolynomial;
using PairSeries = TruncatedSeries<PairClass>;
using IntSeries = TruncatedSeries<Integer>;

TEST(KapranovZeta, OfUnitIsAllOnes) {
  const auto z = kapranov_zeta_pair(PairClass::one(), 6);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(z[n], PairClass::one());
}

TEST(KapranovZeta, ConstantTermIsUnit) {
  testing::Gen gen(21);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.pair();
    const auto z = kapranov_zeta_pair(p, 4);
    EXPECT_EQ(z[0], PairClass::one());
    EXPECT_EQ(z[1], p);
  }
}

TEST(KapranovZeta, MarkedLineSquare) {
  // S^2(P^1 \ pt) = S^2 A^1 = A^2.
  const auto c = kapranov_zeta_pair(catalog::projective_line_marked(1), 2)[2];
  EXPECT_EQ(c.amb(), P({1, 1, 1}));
  EXPECT_EQ(c.comp(), P({0, 0, 1}));
  EXPECT_EQ(c.sub(), P({1, 1}));
  EXPECT_EQ(c, sym_pair_p1_direct(2, 1));
}

TEST(KapranovZeta, FiniteSetsCountMultisets) {
  for (int m = 0; m <= 4; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto z = kapranov_zeta_pair(catalog::finite(m, k), 5);
      for (int n = 0; n <= 5; ++n) {
        const auto& c = z[static_cast<std::size_t>(n)];
        EXPECT_EQ(c.amb(), P(static_cast<int>(testing::count_multisets(m, n))));
        EXPECT_EQ(c.comp(), P(static_cast<int>(testing::count_multisets(m - k, n))));
      }
    }
  EXPECT_EQ(kapranov_zeta_pair(catalog::finite(2, 1), 2)[2], PairClass(3, 1));
}

TEST(ConfigSeries, OfUnitIsOnePlusT) {
  const auto l = config_series_pair(PairClass::one(), 6);
  EXPECT_EQ(l[0], PairClass::one());
  EXPECT_EQ(l[1], PairClass::one());
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(l[n], PairClass{});
}

TEST(ConfigSeries, AffineLineMatchesSquarefreeCounts) {
  const PairClass line{P({0, 1}), P({0, 1})};
  const auto l = config_series_pair(line, 6);
  EXPECT_EQ(l[1], line);
  for (std::size_t n = 2; n <= 6; ++n) {
    EXPECT_EQ(l[n].amb(), P::lefschetz(n) - P::lefschetz(n - 1));
    for (std::uint64_t q : {2, 3, 5}) {
      EnumerationBudget budget;
      EXPECT_EQ(l[n].amb().evaluate(q), count_squarefree_monic(q, static_cast<int>(n), budget));
    }
  }
}

TEST(ConfigSeries, FiniteSetsCountSubsets) {
  for (int m = 0; m <= 5; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto l = config_series_pair(catalog::finite(m, k), 6);
      for (int n = 0; n <= 6; ++n) {
        const auto& c = l[static_cast<std::size_t>(n)];
        EXPECT_EQ(c.amb(), P(static_cast<int>(testing::count_subsets(m, n))));
        EXPECT_EQ(c.comp(), P(static_cast<int>(testing::count_subsets(m - k, n))));
      }
    }
  EXPECT_EQ(config_series_pair(catalog::finite(3, 1), 2)[2], PairClass(3, 1));
}

TEST(Multiplicativity, ZetaAndConfigSeries) {
  testing::Gen gen(22);
  for (int i = 0; i < 30; ++i) {
    const auto p = gen.pair(), r = gen.pair();
    EXPECT_EQ(kapranov_zeta_pair(p + r, 10), kapranov_zeta_pair(p, 10) * kapranov_zeta_pair(r, 10));
    EXPECT_EQ(config_series_pair(p + r, 10), config_series_pair(p, 10) * config_series_pair(r, 10));
  }
}

TEST(FactorExponents, OfZetaIsTheExponent) {
  const auto m = catalog::projective_line_marked(2);
  const auto f = factor_exponents(kapranov_zeta_pair(m, 6));
  ASSERT_EQ(f.order(), 6u);
  EXPECT_EQ(f.b(1), m);
  for (std::size_t i = 2; i <= 6; ++i) EXPECT_EQ(f.b(i), PairClass{});
}

TEST(FactorExponents, OfOnePlusTOverIntegers) {
  // (1 + t) = (1 - t)^-1 (1 - t^2): b = 1, -1, 0, 0, ...
  const auto a = IntSeries::from_prefix({1, 1}, 8);
  const auto f = factor_exponents(a);
  EXPECT_EQ(f.exponents, (std::vector<Integer>{1, -1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(f.reconstruct(), a);
}

TEST(FactorExponents, OfOneIsZero) {
  const auto f = factor_exponents(IntSeries::one(5));
  for (const auto& b : f.exponents) EXPECT_EQ(b, 0);
}

TEST(FactorExponents, ResidualLosesOneDegreePerStep) {
  const auto a = IntSeries(std::vector<Integer>{1, 2, -1, 3, 0, 5});
  const auto f = factor_exponents(a);
  auto residual = a;
  for (std::size_t i = 1; i <= a.order(); ++i) {
    residual /= zeta_series(f.b(i), a.order() / i).substitute_power(i, a.order());
    for (std::size_t d = 1; d <= i; ++d) EXPECT_EQ(residual[d], 0) << "step " << i << " degree " << d;
  }
}

TEST(FactorExponents, RoundTrip) {
  testing::Gen gen(23);
  for (int i = 0; i < 20; ++i) {
    std::vector<PairClass> c{PairClass::one()};
    for (int k = 0; k < 7; ++k) c.push_back(gen.pair());
    const PairSeries a(c);
    EXPECT_EQ(factor_exponents(a).reconstruct(), a);
  }
}

TEST(FactorExponents, RejectsNonUnitConstant) {
  EXPECT_THROW(factor_exponents(IntSeries::from_prefix({2, 1}, 3)), std::invalid_argument);
  EXPECT_THROW(factor_exponents(PairSeries::from_prefix({PairClass(1, 0)}, 3)), std::invalid_argument);
}

TEST(PowerPow, ZeroExponentGivesOne) {
  const auto a = PairSeries::from_prefix({PairClass::one(), catalog::finite(2, 1), catalog::projective_space(1)}, 6);
  EXPECT_EQ(power_pow(a, PairClass{}, 6), PairSeries::one(6));
  EXPECT_EQ(power_pow(PairSeries::one(6), catalog::finite(3, 1), 6), PairSeries::one(6));
}

TEST(PowerPow, OnePlusTToFiniteSet) {
  // Subsets of M, and subsets avoiding N.
  const auto r = power_pow(one_plus_t<PairClass>(4), catalog::finite(3, 1), 4);
  for (int n = 0; n <= 4; ++n)
    EXPECT_EQ(r[static_cast<std::size_t>(n)],
              PairClass(static_cast<int>(testing::count_subsets(3, n)), static_cast<int>(testing::count_subsets(2, n))));
  EXPECT_EQ(r[2], PairClass(3, 1));
}

TEST(PowerPow, GeometricToMarkedLine) {
  const auto m = catalog::projective_line_marked(1);
  const auto r = power_pow(geometric_series<PairClass>(2), m, 2);
  EXPECT_EQ(r[2], PairClass(P({1, 1, 1}), P({0, 0, 1})));
  EXPECT_EQ(r, kapranov_zeta_pair(m, 2));
  EXPECT_EQ(r[2], sym_pair_p1_direct(2, 1));
}

TEST(PowerPow, LinearCoefficient) {
  testing::Gen gen(24);
  for (int i = 0; i < 20; ++i) {
    const auto m = gen.pair(), a1 = gen.pair();
    const auto a = PairSeries::from_prefix({PairClass::one(), a1, gen.pair()}, 5);
    EXPECT_EQ(power_pow(a, m, 5)[1], m * a1);
  }
}

TEST(PowerPow, Errors) {
  EXPECT_THROW(power_pow(PairSeries::from_prefix({PairClass(2, 2)}, 3), PairClass::one(), 3), std::invalid_argument);
  EXPECT_THROW(power_pow(one_plus_t<PairClass>(2), PairClass::one(), 4), std::invalid_argument);
}

TEST(PowerPow, OrderZeroIsOne) {
  EXPECT_EQ(power_pow(geometric_series<PairClass>(0), catalog::finite(2, 0), 0), PairSeries::one(0));
}

TEST(PowerPow, IntegerExponentsAgreeWithBinomialSeries) {
  // (1 + t)^m over the integers: C(m, n), also for negative m.
  for (int m = -3; m <= 4; ++m) {
    const auto r = power_pow(IntSeries::from_prefix({1, 1}, 6), Integer(m), 6);
    for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(r[n], generalized_binomial(m, n)) << m << " " << n;
  }
}

TEST(PowerAxioms, ReportedSamples) {
  const PowerAxiomSample s1{"A=1+t+t^2", PairSeries::from_prefix({PairClass::one(), PairClass::one(), PairClass::one()}, 8), geometric_series<PairClass>(8),
                            PairClass(P({1, 1}), P({0, 1})), PairClass(2, 1)};
  const PowerAxiomSample s2{"A=1+t B=1/(1-t)", one_plus_t<PairClass>(8), geometric_series<PairClass>(8),
                            PairClass(3, 2), catalog::projective_line_marked(1)};
  const auto reports = verify_power_axioms({s1, s2}, 8);
  ASSERT_EQ(reports.size(), 10u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.pass) << r.axiom << " " << r.sample;
    EXPECT_FALSE(r.first_mismatch_degree.has_value());
    EXPECT_EQ(r.order, 8u);
  }
  EXPECT_EQ(reports[3].axiom, "A^(m1+m2)=A^m1*A^m2");
  EXPECT_EQ(reports[7].axiom, "(AB)^m=A^m*B^m");
}

TEST(PowerAxioms, VirtualExponents) {
  testing::Gen gen(25);
  std::vector<PowerAxiomSample> samples;
  for (int i = 0; i < 6; ++i) {
    auto series = [&] {
      std::vector<PairClass> c{PairClass::one()};
      for (int k = 0; k < 3; ++k) c.push_back(gen.pair());
      return PairSeries::from_prefix(std::move(c), 6);
    };
    samples.push_back({"random " + std::to_string(i), series(), series(), gen.pair(), gen.pair()});
  }
  for (const auto& r : verify_power_axioms(samples, 6)) EXPECT_TRUE(r.pass) << r.axiom << " " << r.sample;
}

TEST(PowerAxioms, ReportJson) {
  const AxiomReport ok{"A^0=1", "x", 4, true, std::nullopt};
  EXPECT_EQ(nlohmann::json(ok).dump(),
            R"({"axiom":"A^0=1","first_mismatch_degree":null,"order":4,"pass":true,"sample":"x"})");
  const AxiomReport bad{"A^1=A", "y", 4, false, 3};
  EXPECT_EQ(nlohmann::json(bad)["first_mismatch_degree"], 3);
}

TEST(Identities, UnitReducesToBasicSeries) {
  const auto reports = verify_identities(PairClass::one(), "point", 8);
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.axiom;
  EXPECT_EQ(power_pow(geometric_series<PairClass>(8), PairClass::one(), 8), geometric_series<PairClass>(8));
  EXPECT_EQ(power_pow(one_plus_t<PairClass>(8), PairClass::one(), 8), one_plus_t<PairClass>(8));
}

TEST(Identities, CatalogExamples) {
  for (const auto& r : verify_identities(catalog::projective_line_marked(3), "p1-marked:3", 8))
    EXPECT_TRUE(r.pass) << r.axiom;
  for (const auto& r : verify_identities(catalog::finite(4, 2), "finite:4,2", 6)) EXPECT_TRUE(r.pass) << r.axiom;
  // The comp component of the finite case is binomial: (1 + t)^2.
  const auto l = power_pow(one_plus_t<PairClass>(6), catalog::finite(4, 2), 6);
  EXPECT_EQ(l[2].comp(), P(1));
  EXPECT_EQ(l[3].comp(), P());
}

TEST(Identities, MismatchIsReported) {
  // Sanity check that a wrong right-hand side is caught at the right degree.
  const auto lhs = power_pow(geometric_series<PairClass>(5), catalog::finite(2, 1), 5);
  auto rhs = lhs;
  rhs[4] = rhs[4] + PairClass::one();
  EXPECT_EQ(first_mismatch(lhs, rhs), 4u);
}

}  // namespace
}  // namespace kpairs
