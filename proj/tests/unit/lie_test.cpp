#include <gtest/gtest.h>

#include <algorithm>

#include "diracbound/lie/representation.hpp"
#include "diracbound/lie/root_system.hpp"
#include "diracbound/lie/weight.hpp"

using namespace diracbound;

namespace {

std::vector<Weight> small_dominant_weights(const RootSystem& rs, int max_coeff) {
  const auto fw = rs.fundamental_weights();
  std::vector<Weight> out;
  std::vector<int> c(fw.size(), 0);
  while (true) {
    Weight w(rs.coordinates());
    for (std::size_t i = 0; i < fw.size(); ++i) w += static_cast<long long>(c[i]) * fw[i];
    out.push_back(w);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] > max_coeff) c[i++] = 0;
    if (i == c.size()) break;
  }
  return out;
}

long long total(const WeightMultiset& m) {
  long long s = 0;
  for (const auto& [w, k] : m) s += k;
  return s;
}

}  // namespace

TEST(Weight, ParseAndPrint) {
  const Weight w = Weight::parse("(3/2, 1/2)");
  EXPECT_EQ(w, Weight::doubled({3, 1}));
  EXPECT_EQ(Weight::parse(w.str()), w);
  EXPECT_EQ(Weight::parse("1,0,-1"), Weight::integral({1, 0, -1}));
  EXPECT_THROW(Weight::from_rationals({make_rational(1, 3)}), DomainError);
  EXPECT_FALSE(Weight::doubled({1, 1}).is_integral());
}

TEST(RootSystem, RootCounts) {
  EXPECT_EQ(RootSystem::build(Family::A, 3).roots().size(), 12u);   // l(l+1)
  EXPECT_EQ(RootSystem::build(Family::B, 2).roots().size(), 8u);    // 2l^2
  EXPECT_EQ(RootSystem::build(Family::C, 3).roots().size(), 18u);   // 2l^2
  EXPECT_EQ(RootSystem::build(Family::D, 4).roots().size(), 24u);   // 2l(l-1)
  EXPECT_EQ(RootSystem::build(Family::G, 2).roots().size(), 12u);
}

TEST(RootSystem, FundamentalDimensions) {
  const RootSystem a3 = RootSystem::build(Family::A, 3);
  std::vector<std::uint64_t> dims;
  for (const auto& w : a3.fundamental_weights()) dims.push_back(a3.dimension(w));
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::uint64_t>{4, 4, 6}));

  const RootSystem b2 = RootSystem::build(Family::B, 2);
  EXPECT_EQ(b2.dimension(Weight::integral({1, 0})), 5u);
  EXPECT_EQ(b2.dimension(Weight::integral({1, 1})), 10u);
  EXPECT_EQ(b2.dimension(Weight::integral({2, 0})), 14u);
  EXPECT_EQ(b2.dimension(Weight::doubled({1, 1})), 4u);

  const RootSystem d3 = RootSystem::build(Family::D, 3);
  EXPECT_EQ(d3.dimension(Weight::doubled({1, 1, 1})), 4u);
  EXPECT_EQ(d3.dimension(Weight::doubled({1, 1, -1})), 4u);
}

TEST(RootSystem, CasimirValues) {
  const RootSystem b2 = RootSystem::build(Family::B, 2);
  // |gamma + rho|^2 - |rho|^2 with rho = (3/2, 1/2)
  EXPECT_EQ(b2.casimir(Weight::integral({1, 0})), Rational(4));
  EXPECT_EQ(b2.casimir(Weight::integral({1, 1})), Rational(6));
  EXPECT_EQ(b2.norm2(b2.rho()), make_rational(5, 2));
  const RootSystem b1 = RootSystem::build(Family::B, 1, make_rational(1, 5));
  EXPECT_EQ(b1.norm2(b1.rho()), make_rational(1, 20));
}

TEST(RootSystem, DualRepresentation) {
  const RootSystem b2 = RootSystem::build(Family::B, 2);
  EXPECT_EQ(b2.dual(Weight::integral({2, 1})), Weight::integral({2, 1}));
  const RootSystem d3 = RootSystem::build(Family::D, 3);
  EXPECT_EQ(d3.dual(Weight::doubled({1, 1, 1})), Weight::doubled({1, 1, -1}));
}

TEST(RootSystem, WeylDimensionMatchesWeightCount) {
  for (auto [f, l] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::C, 2}, {Family::D, 4}}) {
    const RootSystem rs = RootSystem::build(f, l);
    for (const auto& w : small_dominant_weights(rs, l > 2 ? 1 : 2)) {
      EXPECT_EQ(static_cast<std::uint64_t>(total(weight_multiplicities(w, rs))), rs.dimension(w))
          << family_letter(f) << l << " " << w.str();
    }
  }
}

TEST(RootSystem, WeylGroupPreservesMultiplicities) {
  const RootSystem b3 = RootSystem::build(Family::B, 3);
  const WeightMultiset m = weight_multiplicities(Weight::integral({1, 1, 0}), b3);
  for (const auto& [w, k] : m)
    for (std::size_t i = 0; i < static_cast<std::size_t>(b3.rank()); ++i) EXPECT_EQ(m.at(b3.reflect(w, i)), k);
}

TEST(Characters, TensorSquareOfSpinHalf) {
  const RootSystem a1 = RootSystem::build(Family::B, 1);
  WeightMultiset product;
  const auto v = weight_multiplicities(Weight::doubled({1}), a1);
  for (const auto& [x, a] : v)
    for (const auto& [y, b] : v) product[x + y] += a * b;
  const WeightMultiset parts = decompose_character(product, a1);
  EXPECT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(Weight::integral({1})), 1);
  EXPECT_EQ(parts.at(Weight::integral({0})), 1);
}

TEST(Branching, IrreducibleThreeDimensionalSubgroupOfSO5) {
  Matrix<Rational> map(1, 2);
  map(0, 0) = 2;
  map(0, 1) = 1;
  const CartanEmbedding emb{RootSystem::build(Family::B, 2), RootSystem::build(Family::B, 1, make_rational(1, 5)), map};
  emb.verify();
  // R^5 stays irreducible (spin 2); so(5) = spin 3 + spin 1
  const auto v = branch(Weight::integral({1, 0}), emb);
  EXPECT_EQ(v.components.size(), 1u);
  EXPECT_EQ(v.components.at(Weight::integral({2})), 1);
  const auto ad = branch(Weight::integral({1, 1}), emb);
  EXPECT_EQ(ad.components.at(Weight::integral({3})), 1);
  EXPECT_EQ(ad.components.at(Weight::integral({1})), 1);
  EXPECT_EQ(ad.total_dimension(), 10u);
}

TEST(Branching, SpinorsOfSpin5ToSpin4) {
  Matrix<Rational> map = Matrix<Rational>::identity(2);
  const CartanEmbedding emb{RootSystem::build(Family::B, 2), RootSystem::build(Family::D, 2), map};
  const auto s = branch(Weight::doubled({1, 1}), emb);
  EXPECT_EQ(s.components.size(), 2u);
  EXPECT_EQ(s.components.at(Weight::doubled({1, 1})), 1);
  EXPECT_EQ(s.components.at(Weight::doubled({1, -1})), 1);
}

TEST(Branching, DimensionIsPreserved) {
  Matrix<Rational> map(2, 3);
  map(0, 0) = 1;
  map(1, 1) = 1;
  const CartanEmbedding emb{RootSystem::build(Family::B, 3), RootSystem::build(Family::B, 2), map};
  const RootSystem& g = emb.g;
  for (const auto& w : small_dominant_weights(g, 1)) EXPECT_EQ(branch(w, emb).total_dimension(), g.dimension(w)) << w.str();
}
