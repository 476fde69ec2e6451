#include <gtest/gtest.h>

#include <cmath>

#include "diracbound/errors.hpp"
#include "diracbound/topology/cohomology.hpp"
#include "diracbound/topology/index.hpp"

using namespace diracbound;

namespace {

// Coefficients of sum_i s_i c_i exp(t_i a) truncated at a^top, in doubles.
std::vector<double> exp_sum(const std::vector<std::tuple<double, double, double>>& terms, int top) {
  std::vector<double> out(top + 1, 0.0);
  for (const auto& [sign, c, t] : terms) {
    double f = 1.0;
    for (int k = 0; k <= top; ++k) {
      if (k > 0) f *= t / k;
      out[k] += sign * c * f;
    }
  }
  return out;
}

double binom_d(int n, int k) { return std::round(std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1))); }

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace

TEST(Cohomology, RingArithmetic) {
  const auto cp3 = TruncatedRing::projective(3);
  const auto a = CohomologyClass::generator(cp3);
  EXPECT_EQ(CohomologyClass(cp3).exp(), CohomologyClass::constant(cp3, 1));
  EXPECT_EQ(a.exp() * (-a).exp(), CohomologyClass::constant(cp3, 1));
  EXPECT_EQ(a * a * a * a, CohomologyClass(cp3));  // a^4 = 0 on CP^3
  EXPECT_EQ((a * a * a).pair(), Rational(1));
  EXPECT_EQ((a * a).pair(), Rational(0));
  EXPECT_EQ(cp3.dimension(), 6);
}

TEST(Cohomology, SphereSpinorCharacters) {
  for (int m = 1; m <= 5; ++m) {
    const auto plus = spinor_chern_character(m, 1), minus = spinor_chern_character(m, -1);
    const Rational half = Rational(1 << (m - 1));
    EXPECT_EQ(plus.coefficient(0), half);
    EXPECT_EQ(plus.coefficient(1), Rational(1));
    EXPECT_EQ(minus.coefficient(1), Rational(-1));
    EXPECT_EQ(plus + minus, CohomologyClass::constant(TruncatedRing::sphere(m), Rational(1 << m)));
    EXPECT_EQ(plus.in_degree(2 * m), Rational(1));
  }
}

TEST(Cohomology, Errors) {
  const auto cp3 = TruncatedRing::projective(3);
  const auto s4 = TruncatedRing::sphere(2);
  EXPECT_THROW(CohomologyClass::generator(cp3) + CohomologyClass::generator(s4), DomainError);
  EXPECT_THROW(CohomologyClass::constant(cp3, 1).exp(), DomainError);
}

TEST(Cohomology, Printing) {
  EXPECT_EQ(chern_character_W(2).str(), "3 + 2a - (2/3)a^3");
  EXPECT_EQ(spinor_chern_character(2, -1).str(), "2 - w");
}

TEST(ChernCharacter, SmallestCases) {
  const auto ch2 = chern_character_W(2);
  const auto a = CohomologyClass::generator(TruncatedRing::projective(3));
  EXPECT_EQ(ch2, CohomologyClass::constant(a.ring(), 3) + a * Rational(2) - a * a * a * make_rational(2, 3));
  EXPECT_EQ(chern_character_W(2) + chern_character_W_dual(2), CohomologyClass::constant(a.ring(), 6));
  // W = tau on CP^1
  EXPECT_EQ(chern_character_W(1), CohomologyClass::generator(TruncatedRing::projective(1)).exp());
}

TEST(ChernCharacter, DirectSumIsTrivial) {
  for (int m = 1; m <= 6; ++m) {
    const auto sum = chern_character_W(m) + chern_character_W_dual(m);
    EXPECT_TRUE(sum.is_constant()) << m;
    EXPECT_EQ(sum.coefficient(0), Rational(binomial(2 * m, m))) << m;
  }
}

TEST(ChernCharacter, DualIsGeneratorNegation) {
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(chern_character_W(m).negate_generator(), chern_character_W_dual(m)) << m;
}

TEST(ChernCharacter, RankIsBinomial) {
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(chern_character_W(m).coefficient(0), Rational(binomial(2 * m - 1, m - 1))) << m;
}

TEST(ChernCharacter, MatchesFloatingSeries) {
  for (int m = 1; m <= 6; ++m) {
    std::vector<std::tuple<double, double, double>> terms;
    for (int i = 0; i < m; ++i) terms.emplace_back((m - 1 - i) % 2 ? -1.0 : 1.0, binom_d(2 * m, i), m - i);
    const auto expected = exp_sum(terms, 2 * m - 1);
    const auto ch = chern_character_W(m);
    for (int k = 0; k < 2 * m; ++k)
      EXPECT_NEAR(to_double(ch.coefficient(k)), expected[k], 1e-9 * (1 + std::abs(expected[k]))) << m << " a^" << k;
  }
}

TEST(Thresholds, TableForSmallArguments) {
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(sphere_threshold(m, k), Integer((1 << (m - 1)) * (k - 1))) << m << "," << k;
      EXPECT_EQ(cpn_threshold(m, k).threshold, Integer(static_cast<long>(binom_d(2 * m - 1, m - 1)) * (k - 1))) << m << "," << k;
    }
  EXPECT_EQ(sphere_threshold(2, 1), 0);
  EXPECT_EQ(sphere_threshold(2, 3), 4);
  EXPECT_EQ(sphere_threshold(3, 2), 4);
  EXPECT_EQ(cpn_threshold(2, 2).threshold, 3);
  EXPECT_EQ(cpn_threshold(2, 1).threshold, 0);
}

TEST(Thresholds, MonotoneInK) {
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k < 12; ++k) {
      EXPECT_LE(sphere_threshold(m, k), sphere_threshold(m, k + 1));
      EXPECT_LE(cpn_threshold(m, k).threshold, cpn_threshold(m, k + 1).threshold);
    }
}

TEST(Thresholds, ObstructionClass) {
  for (int m = 1; m <= 6; ++m) {
    const auto cls = cpn_threshold(m, 2).obstruction_class;
    EXPECT_EQ(cls.coefficient(0), Rational(0)) << m;
    const auto ch = chern_character_W(m);
    const auto reduced = ch - CohomologyClass::constant(ch.ring(), ch.coefficient(0));
    EXPECT_EQ(cls, m % 2 == 1 ? reduced : -reduced) << m;
    // independent series: sum_{i<m} (-1)^i binom(2m, i) (e^{(m-i)a} - 1)
    std::vector<std::tuple<double, double, double>> terms;
    for (int i = 0; i < m; ++i) {
      terms.emplace_back(i % 2 ? -1.0 : 1.0, binom_d(2 * m, i), m - i);
      terms.emplace_back(i % 2 ? 1.0 : -1.0, binom_d(2 * m, i), 0.0);
    }
    const auto expected = exp_sum(terms, 2 * m - 1);
    for (int k = 0; k < 2 * m; ++k) EXPECT_NEAR(to_double(cls.coefficient(k)), expected[k], 1e-9 * (1 + std::abs(expected[k])));
  }
  const auto a = CohomologyClass::generator(TruncatedRing::projective(3));
  EXPECT_EQ(cpn_threshold(2, 2).obstruction_class, a * a * a * make_rational(2, 3) - a * Rational(2));
}

TEST(IndexReport, Examples) {
  const IndexReport r = index_report(2, 3, Rational(1), Integer(5));
  EXPECT_EQ(r.index_plus, Rational(7));
  EXPECT_EQ(r.index_minus, Rational(-3));
  EXPECT_EQ(r.kernel_bound, Rational(10));
  EXPECT_EQ(r.threshold, 4);
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.kernel_exceeds);

  const IndexReport k1 = index_report(2, 1, Rational(0), Integer(1));
  EXPECT_EQ(k1.kernel_bound, Rational(2));
  EXPECT_TRUE(k1.verdict);

  const IndexReport zero = index_report(2, 3, Rational(0), Integer(0));
  EXPECT_EQ(zero.kernel_bound, Rational(0));
  EXPECT_FALSE(zero.verdict);
  EXPECT_FALSE(zero.kernel_exceeds);

  EXPECT_THROW(index_report(0, 1, Rational(0), Integer(0)), DomainError);
  EXPECT_THROW(index_report(1, 0, Rational(0), Integer(0)), DomainError);
}

TEST(IndexReport, KernelBoundProperties) {
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= 4; ++k)
      for (int deg = -6; deg <= 6; ++deg)
        for (const Rational& ahat : {Rational(0), make_rational(1, 2), Rational(-3)}) {
          const IndexReport r = index_report(m, k, ahat, Integer(deg));
          EXPECT_EQ(r.index_plus - r.index_minus, Rational(2 * deg));
          EXPECT_GE(r.kernel_bound, abs(r.index_plus));
          EXPECT_GE(r.kernel_bound, abs(r.index_minus));
          EXPECT_EQ(r.verdict, std::abs(deg) > (1 << (m - 1)) * (k - 1));
          // a degree above the threshold forces the kernel above 2^m (k - 1)
          if (r.verdict) EXPECT_TRUE(r.kernel_exceeds);
        }
}
