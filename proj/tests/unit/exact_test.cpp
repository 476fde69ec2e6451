#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "diracbound/exact/matrix.hpp"
#include "diracbound/exact/quadratic.hpp"
#include "diracbound/exact/rational.hpp"
#include "diracbound/exact/sparse.hpp"

using namespace diracbound;

namespace {

Matrix<Rational> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

double value(const QSqrt5& x) { return x.a().get_d() + x.b().get_d() * std::sqrt(5.0); }

}  // namespace

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("-0.45"), make_rational(-9, 20));
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(make_rational(10, 4)), "5/2");
  EXPECT_EQ(to_string(Rational(-3)), "-3");
  EXPECT_ANY_THROW(parse_rational("1/0"));
  EXPECT_ANY_THROW(parse_rational("abc"));
}

TEST(Rational, SquareRootOfSquares) {
  Rational r;
  ASSERT_TRUE(rational_sqrt(make_rational(49, 4), r));
  EXPECT_EQ(r, make_rational(7, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2), r));
  EXPECT_FALSE(rational_sqrt(Rational(-4), r));
}

TEST(QuadraticField, Arithmetic) {
  const QSqrt5 s = QSqrt5::root();
  EXPECT_EQ(s * s, QSqrt5(5));
  EXPECT_EQ((QSqrt5(1) + s) * (QSqrt5(1) - s), QSqrt5(-4));
  EXPECT_EQ((QSqrt5(2) + s).inverse() * (QSqrt5(2) + s), QSqrt5(1));
  EXPECT_EQ(QSqrt5(Rational(0), make_rational(1, 10)) * QSqrt5(2) * s, QSqrt5(1));  // 1/(2 sqrt5) = sqrt5/10
}

TEST(QuadraticField, SignMatchesFloatingValue) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-40, 40);
  for (int t = 0; t < 2000; ++t) {
    const QSqrt5 x(make_rational(d(rng), 7), make_rational(d(rng), 3));
    const double v = value(x);
    if (std::abs(v) < 1e-9) continue;
    EXPECT_EQ(sign(x), v > 0 ? 1 : -1) << x.str();
  }
  EXPECT_GT(QSqrt5(3) - QSqrt5::root(), QSqrt5(0));
  EXPECT_LT(QSqrt5(2) - QSqrt5::root(), QSqrt5(0));
}

TEST(QuadraticField, FieldAxiomsOnSamples) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 300; ++t) {
    const QSqrt5 x(d(rng), d(rng)), y(d(rng), d(rng)), z(d(rng), d(rng));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    if (!is_zero(y)) EXPECT_EQ((x * y) / y, x);
  }
}

TEST(QuadraticField, ExactSquareRoots) {
  QSqrt5 r;
  // golden ratio: phi^2 = phi + 1
  ASSERT_TRUE(qsqrt5_sqrt(QSqrt5(make_rational(3, 2), make_rational(1, 2)), r));
  EXPECT_EQ(r, QSqrt5(make_rational(1, 2), make_rational(1, 2)));
  ASSERT_TRUE(qsqrt5_sqrt(QSqrt5(5), r));
  EXPECT_EQ(r, QSqrt5::root());
  ASSERT_TRUE(qsqrt5_sqrt(QSqrt5(make_rational(441, 80)), r));
  EXPECT_EQ(r * r, QSqrt5(make_rational(441, 80)));
  EXPECT_FALSE(qsqrt5_sqrt(QSqrt5(2), r));
  EXPECT_FALSE(qsqrt5_sqrt(QSqrt5(-1), r));
}

TEST(QuadraticField, SquareRootRoundTrip) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int t = 0; t < 200; ++t) {
    QSqrt5 x(make_rational(d(rng), 1 + t % 4), make_rational(d(rng), 1 + t % 3));
    QSqrt5 r;
    ASSERT_TRUE(qsqrt5_sqrt(x * x, r)) << x.str();
    EXPECT_EQ(r * r, x * x);
    EXPECT_GE(r, QSqrt5(0));
  }
}

TEST(GaussianField, ImaginaryUnit) {
  const GaussianRational i = GaussianRational::root();
  EXPECT_EQ(i * i, GaussianRational(-1));
  EXPECT_EQ(conj(i), -i);
  const QSqrt5i j = FieldTraits<QSqrt5i>::i();
  EXPECT_EQ(j * j, QSqrt5i(-1));
  EXPECT_EQ(FieldTraits<QSqrt5i>::sqrt5() * FieldTraits<QSqrt5i>::sqrt5(), QSqrt5i(5));
}

TEST(MatrixAlgebra, RankNullityOnRandomMatrices) {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + t % 5, c = 1 + (t * 7) % 6;
    Matrix<Rational> a = random_matrix(rng, r, c, -1, 1);
    const Matrix<Rational> n = nullspace(a);
    EXPECT_EQ(rank(a) + n.cols(), c);
    EXPECT_TRUE((a * n).is_zero_matrix());
    if (n.cols() > 0) EXPECT_EQ(rank(n), n.cols());
  }
}

TEST(MatrixAlgebra, InverseAndSolve) {
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    Matrix<Rational> a = random_matrix(rng, 4, 4);
    if (rank(a) < 4) continue;
    EXPECT_EQ(inverse(a) * a, Matrix<Rational>::identity(4));
    Matrix<Rational> b = random_matrix(rng, 4, 2);
    auto x = solve(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * *x, b);
  }
  Matrix<Rational> singular(2, 2);
  singular(0, 0) = 1;
  EXPECT_THROW(inverse(singular), DomainError);
  Matrix<Rational> rhs(2, 1);
  rhs(1, 0) = 1;
  EXPECT_FALSE(solve(singular, rhs).has_value());
}

TEST(MatrixAlgebra, KroneckerMixedProduct) {
  std::mt19937 rng(29);
  const auto a = random_matrix(rng, 2, 3), c = random_matrix(rng, 3, 2);
  const auto b = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
  EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  EXPECT_EQ(kron(a, b).rows(), 4u);
  EXPECT_EQ(kron(a, b).cols(), 6u);
}

TEST(MatrixAlgebra, PositiveSemidefinite) {
  Matrix<Rational> m = Matrix<Rational>::identity(2);
  m(1, 1) = 0;
  EXPECT_TRUE(is_positive_semidefinite(m));
  m(1, 1) = -1;
  EXPECT_FALSE(is_positive_semidefinite(m));
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    const auto b = random_matrix(rng, 3, 4);
    EXPECT_TRUE(is_positive_semidefinite(b * b.transpose()));
  }
}

TEST(MatrixAlgebra, CommutatorIsAntisymmetric) {
  std::mt19937 rng(37);
  const auto x = random_matrix(rng, 3, 3), y = random_matrix(rng, 3, 3);
  EXPECT_EQ(commutator(x, y), -commutator(y, x));
  EXPECT_TRUE(is_zero(trace(commutator(x, y))));
}

TEST(SparseAlgebra, NullspaceMatchesDense) {
  std::mt19937 rng(41);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 2 + t % 4, c = 3 + t % 5;
    const Matrix<Rational> a = random_matrix(rng, r, c, -1, 1);
    std::vector<SparseVector<Rational>> rows(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (!is_zero(a(i, j))) rows[i][j] = a(i, j);
    const auto ns = sparse_nullspace(rows, c);
    EXPECT_EQ(ns.size(), nullspace(a).cols());
    for (const auto& v : ns)
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (const auto& [j, x] : v) s += a(i, j) * x;
        EXPECT_TRUE(is_zero(s));
      }
  }
}
