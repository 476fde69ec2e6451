#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "diracbound/spin/gelfand_tsetlin.hpp"
#include "diracbound/spin/spin_geometry.hpp"

using namespace diracbound;

namespace {

using CF = ComplexRational;

std::shared_ptr<const SpinGeometry> geometry(const std::string& id) {
  static std::map<std::string, std::shared_ptr<const SpinGeometry>> cache;
  auto& g = cache[id];
  if (!g) g = std::make_shared<SpinGeometry>(build_pair(id));
  return g;
}

Matrix<CF> random_so(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix<CF> x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      x(i, j) = CF(d(rng));
      x(j, i) = -x(i, j);
    }
  return x;
}

}  // namespace

TEST(Clifford, PauliModulesSatisfyRelations) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto cm = pauli_clifford_module<CF>(n);
    EXPECT_NO_THROW(cm.verify()) << n;
    EXPECT_EQ(cm.dimension(), std::size_t{1} << (n / 2)) << n;
  }
}

TEST(Clifford, VolumeElementAdjointness) {
  // omega = c_1 ... c_n is skew-adjoint iff n = 1, 2 mod 4
  for (std::size_t n = 1; n <= 8; ++n)
    EXPECT_EQ(volume_element_is_skew(pauli_clifford_module<CF>(n)), n % 4 == 1 || n % 4 == 2) << n;
}

TEST(Clifford, SpinLiftIsHomomorphism) {
  std::mt19937 rng(2);
  const auto cm = pauli_clifford_module<CF>(5);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_so(rng, 5), b = random_so(rng, 5);
    EXPECT_EQ(commutator(cm.spin_lift(a), cm.spin_lift(b)), cm.spin_lift(commutator(a, b)));
  }
}

TEST(ExteriorPower, ActionIsLieHomomorphism) {
  std::mt19937 rng(4);
  for (int t = 0; t < 5; ++t) {
    const auto x = random_so(rng, 5), y = random_so(rng, 5);
    EXPECT_EQ(commutator(exterior_power_action(x, 2), exterior_power_action(y, 2)), exterior_power_action(commutator(x, y), 2));
  }
}

TEST(GelfandTsetlin, BasisSizeIsWeylDimension) {
  const RootSystem a3 = RootSystem::build(Family::A, 3);
  for (const std::vector<int>& top : {std::vector<int>{1, 0, 0, 0}, {1, 1, 0, 0}, {2, 1, 0, 0}, {2, 1, 1, 0}, {3, 1, 0, 0}}) {
    const GelfandTsetlinBasis basis(top);
    const Weight w = Weight::integral({top[0] - top[3], top[1] - top[3], top[2] - top[3]});
    EXPECT_EQ(basis.size(), a3.dimension(w)) << w.str();
  }
}

TEST(SymmetricPairs, CatalogPairsValidate) {
  for (const char* id : {"S2", "S3", "S4", "S5", "S6", "CP1", "CP2", "CP3"}) {
    std::shared_ptr<const CatalogPair> pair;
    ASSERT_NO_THROW(pair = build_pair(id)) << id;
    EXPECT_TRUE(pair->symmetric);
  }
  EXPECT_THROW(build_pair("T7"), ConfigurationError);
  EXPECT_THROW(build_pair("S1"), ConfigurationError);
}

TEST(SymmetricPairs, RankDifference) {
  EXPECT_EQ(build_pair("S4")->rank_difference(), 0);
  EXPECT_EQ(build_pair("S5")->rank_difference(), 1);
  EXPECT_EQ(build_pair("CP3")->rank_difference(), 0);
}

TEST(SpinorDecomposition, ComponentCounts) {
  for (int m = 1; m <= 3; ++m) {
    const auto sphere = spinor_decomposition(*build_pair("S" + std::to_string(2 * m)));
    EXPECT_EQ(sphere.components.size(), 2u) << m;
    const auto proj = spinor_decomposition(*build_pair("CP" + std::to_string(2 * m - 1)));
    EXPECT_EQ(proj.components.size(), static_cast<std::size_t>(2 * m)) << m;
    for (const auto& c : proj.components) EXPECT_EQ(c.multiplicity, 1);
  }
  const auto odd = spinor_decomposition(*build_pair("S5"));
  ASSERT_EQ(odd.components.size(), 1u);
  EXPECT_EQ(odd.components[0].dimension, 4u);
}

TEST(SpinorDecomposition, IsotropyCasimirIsScalarCurvatureOverEight) {
  // unit sphere: scal = n(n-1); CP^n with sectional curvature in [1, 4]: scal = 4n(n+1)
  for (int n : {2, 3, 4, 5, 6}) EXPECT_EQ(geometry("S" + std::to_string(n))->casimir_sigma(), make_rational(n * (n - 1), 8)) << n;
  for (int n : {1, 2, 3}) EXPECT_EQ(geometry("CP" + std::to_string(n))->casimir_sigma(), make_rational(n * (n + 1), 2)) << n;
}

TEST(Lambda1, SpheresAndProjectiveSpaces) {
  // unit spheres: n^2/4; CP^{2m-1}: 4m^2
  for (int n : {2, 3, 4, 5, 6}) EXPECT_EQ(lambda1(*geometry("S" + std::to_string(n))).lambda1, make_rational(n * n, 4)) << n;
  EXPECT_EQ(lambda1(*geometry("CP1")).lambda1, Rational(4));
  EXPECT_EQ(lambda1(*geometry("CP3")).lambda1, Rational(16));
}

TEST(Lambda1, ProjectiveComponentTable) {
  const SpectralData d = lambda1(*geometry("CP3"));
  ASSERT_EQ(d.components.size(), 4u);
  std::vector<Rational> values;
  for (const auto& c : d.components) values.push_back(*c.value);
  EXPECT_EQ(values, (std::vector<Rational>{24, 16, 16, 24}));
  // q = 0 component: 8m^2 - 4m at m = 2
  EXPECT_EQ(values.front(), Rational(24));
}

TEST(Lambda1, BudgetExhaustion) {
  try {
    lambda1(*geometry("CP3"), 1);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.partial().components.size(), 4u);
  }
}

TEST(DiracBlock, SquareIsScalarOnAdmissibleWeights) {
  for (const char* id : {"S2", "S4", "S5", "CP1", "CP3"}) {
    const auto geo = geometry(id);
    const Rational bound = lambda1(*geo).lambda1 * 2;
    const auto weights = admissible_weights(*geo, bound);
    ASSERT_FALSE(weights.empty()) << id;
    for (const auto& gamma : weights) {
      const DiracBlock b = dirac_block(*geo, gamma);
      EXPECT_TRUE(b.scalar) << id << " " << gamma.str();
      EXPECT_EQ(static_cast<long long>(b.hom_dimension), geo->hom_dimension(gamma)) << id << " " << gamma.str();
      EXPECT_EQ(b.expected, geo->g_roots().casimir(b.gamma_dual) + geo->casimir_sigma());
    }
  }
}

TEST(DiracBlock, InadmissibleWeightHasNoBlock) {
  const auto geo = geometry("S4");
  EXPECT_EQ(geo->hom_dimension(Weight::integral({0, 0})), 0);
}

TEST(TwistedKernel, EqualRankComponentsHaveOneDimensionalKernel) {
  for (const char* id : {"S2", "S4", "CP1", "CP3"}) {
    const auto geo = geometry(id);
    for (const auto& c : geo->spinors().components) EXPECT_EQ(twisted_kernel_dimension(*geo, c.highest_weight), 1) << id;
  }
  EXPECT_THROW(twisted_kernel_dimension(*geometry("S5"), Weight::doubled({1, 1})), UnsupportedError);
}

TEST(VafaWitten, EqualityAtOnesAndStrictBoundOtherwise) {
  const auto geo = geometry("S4");
  const SpectralData d = lambda1(*geo);
  const Weight gamma = d.minimizers.front();
  const auto ones = vafa_witten_operator(*geo, gamma, std::vector<Rational>(4, Rational(1)), d.lambda1);
  EXPECT_TRUE(ones.exact_equality);
  EXPECT_TRUE(ones.equality);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(1, 20);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> mu(4);
    for (auto& x : mu) x = make_rational(num(rng), 20);
    if (std::all_of(mu.begin(), mu.end(), [](const Rational& x) { return x == 1; })) continue;
    const auto r = vafa_witten_operator(*geo, gamma, mu, d.lambda1);
    EXPECT_TRUE(r.within_bound);
    EXPECT_FALSE(r.equality);
  }
}

TEST(VafaWitten, RejectsEntriesOutsideUnitInterval) {
  const auto geo = geometry("S4");
  const SpectralData d = lambda1(*geo);
  std::vector<Rational> mu(4, Rational(1));
  mu[0] = make_rational(3, 2);
  EXPECT_THROW(vafa_witten_operator(*geo, d.minimizers.front(), mu, d.lambda1), DomainError);
  mu[0] = 0;
  EXPECT_THROW(vafa_witten_operator(*geo, d.minimizers.front(), mu, d.lambda1), DomainError);
}
