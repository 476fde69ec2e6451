#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "diracbound/berger/berger.hpp"
#include "diracbound/spin/spin_geometry.hpp"

using namespace diracbound;

namespace {

const BergerGeometry& geometry() {
  static const BergerGeometry geo(berger_model(), shipped_berger_frame());
  return geo;
}

const BergerReport& report() {
  static const BergerReport r = berger_verify(shipped_berger_frame());
  return r;
}

const CheckReport* find_check(const BergerReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Octonions, TableIsAlternativeAndNormed) {
  const OctonionTable t;
  EXPECT_TRUE(t.verify().empty());
  ASSERT_EQ(t.lines().size(), 7u);
  for (const auto& [i, j, k] : t.lines()) {
    const auto p = t.product(i, j);
    EXPECT_EQ(p.index, k);
    EXPECT_EQ(p.sign, 1);
    EXPECT_EQ(t.product(j, i).sign, -1);
  }
  for (std::size_t i = 1; i < 8; ++i) {
    EXPECT_EQ(t.product(i, i).index, 0u);
    EXPECT_EQ(t.product(i, i).sign, -1);
  }
}

TEST(Octonions, MultiplicationMatricesAreSkew) {
  const OctonionTable t;
  for (std::size_t i = 1; i < 8; ++i) {
    const auto r = t.right_multiplication(i);
    EXPECT_EQ(r.transpose(), -r);
    EXPECT_EQ(r * r, -Matrix<Rational>::identity(8));
  }
}

TEST(BergerModel, EmbeddingAndBasis) {
  const BergerModel& m = berger_model();
  EXPECT_EQ(m.g.size(), 10u);
  EXPECT_EQ(m.h.size(), 3u);
  EXPECT_EQ(m.p.size(), 7u);
  EXPECT_NO_THROW(m.embedding.verify());
}

TEST(BergerFrame, ShippedFramePassesEveryCheck) {
  const BergerReport& r = report();
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.passed) << c.name << (c.residuals.empty() ? "" : ": " + c.residuals.front());
    EXPECT_GT(c.checked, 0u) << c.name;
  }
  for (const char* name : {"octonion table", "p-bracket equals octonion product over sqrt5",
                           "Clifford multiplication is Cayley multiplication", "structure tensor", "operator A",
                           "reductive blocks", "Riemannian Dirac eigenvalues", "D^lambda sweep", "spinor decomposition"})
    EXPECT_NE(find_check(r, name), nullptr) << name;
  EXPECT_TRUE(r.passed());
}

TEST(BergerFrame, SolverReproducesShippedFixture) {
  const BergerFrame solved = solve_berger_frame(berger_model());
  EXPECT_EQ(berger_fixture_json(solved), berger_fixture_json(shipped_berger_frame()));
}

TEST(BergerFrame, FixtureRoundTrip) {
  const BergerFrame f = shipped_berger_frame();
  const BergerFrame g = parse_berger_fixture(berger_fixture_json(f));
  EXPECT_EQ(g.coefficients, f.coefficients);
  EXPECT_EQ(g.clifford, f.clifford);
}

TEST(BergerFrame, MalformedFixturesAreRejected) {
  EXPECT_THROW(parse_berger_fixture("{"), ConfigurationError);
  EXPECT_THROW(parse_berger_fixture(R"({"format": "other"})"), ConfigurationError);
  auto j = nlohmann::json::parse(berger_fixture_json(shipped_berger_frame()));
  j["clifford"] = "up";
  EXPECT_THROW(BergerGeometry(berger_model(), parse_berger_fixture(j.dump())), ConfigurationError);
  j["clifford"] = "right";
  j["frame"].erase(0);
  EXPECT_THROW(parse_berger_fixture(j.dump()), ConfigurationError);
}

TEST(BergerFrame, TamperedFrameFailsWithResiduals) {
  BergerFrame f = shipped_berger_frame();
  f.coefficients[2][0] += QSqrt5(make_rational(1, 7));
  const BergerReport r = berger_verify(f);
  EXPECT_FALSE(r.passed());
  std::size_t failed = 0;
  for (const auto& c : r.checks)
    if (!c.passed) {
      ++failed;
      EXPECT_FALSE(c.residuals.empty()) << c.name;
    }
  EXPECT_GT(failed, 0u);
}

TEST(BergerFrame, LeftCliffordSideFailsCayleyCheck) {
  BergerFrame f = shipped_berger_frame();
  f.clifford = "left";
  const BergerGeometry geo(berger_model(), f);
  EXPECT_TRUE(geo.verify_octonion_bracket().passed);
  EXPECT_FALSE(geo.verify_cayley_clifford().passed);
}

TEST(BergerGeometry, OperatorAForms) {
  const auto& geo = geometry();
  EXPECT_EQ(geo.operator_a(), geo.operator_a_adjoint_form());
  EXPECT_TRUE(geo.verify_operator_a().passed);
  EXPECT_TRUE(geo.verify_structure_tensor().passed);
}

TEST(BergerGeometry, OperatorAEigenvalues) {
  // (A - 7/(2 sqrt5)) (A + 1/(2 sqrt5)) = 0 and tr A = 0 force multiplicities 1 and 7
  const auto& a = geometry().operator_a();
  const QSqrt5 unit(Rational(0), make_rational(1, 10));  // 1/(2 sqrt5) = sqrt5/10
  const auto id = Matrix<QSqrt5>::identity(8);
  EXPECT_TRUE(((a - id * (unit * QSqrt5(7))) * (a + id * unit)).is_zero_matrix());
  EXPECT_TRUE(is_zero(trace(a)));
  EXPECT_FALSE((a + id * unit).is_zero_matrix());
}

TEST(BergerGeometry, StructureTensorIsTotallySkew) {
  const auto& geo = geometry();
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      for (std::size_t k = 0; k < 7; ++k) {
        EXPECT_EQ(geo.structure(i, j, k), -geo.structure(j, i, k));
        EXPECT_EQ(geo.structure(i, j, k), -geo.structure(i, k, j));
      }
}

TEST(BergerBlocks, ReductiveSquareFormula) {
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= p; ++q)
      EXPECT_EQ(berger_reductive_square(p, q), Rational(p * p + 3 * p + q * q + q) + make_rational(49, 20)) << p << "," << q;
}

TEST(BergerBlocks, LowBlocks) {
  struct Expected {
    int p, q;
    std::size_t hom;
    Rational formula;
  };
  const std::vector<Expected> table = {{0, 0, 1, make_rational(49, 20)},
                                       {1, 0, 0, make_rational(129, 20)},
                                       {1, 1, 1, make_rational(169, 20)},
                                       {2, 0, 0, make_rational(249, 20)}};
  for (const auto& e : table) {
    const ReductiveBlock b = reductive_block(geometry(), e.p, e.q);
    EXPECT_EQ(b.hom_dimension, e.hom) << e.p << "," << e.q;
    EXPECT_EQ(b.formula, e.formula);
    EXPECT_EQ(b.casimir_route, e.formula);
    EXPECT_TRUE(b.kostant) << e.p << "," << e.q;
    if (e.hom > 0) EXPECT_TRUE(b.square_scalar);
  }
  EXPECT_THROW(reductive_block(geometry(), 2, 1), UnsupportedError);
  EXPECT_THROW(berger_representation(0, 1), DomainError);
}

TEST(BergerBlocks, RepresentationDimensions) {
  EXPECT_EQ(berger_representation(0, 0).dimension, 1u);
  EXPECT_EQ(berger_representation(1, 0).dimension, 5u);
  EXPECT_EQ(berger_representation(1, 1).dimension, 10u);
  EXPECT_EQ(berger_representation(2, 0).dimension, 14u);
}

TEST(DLambda, SweepMinimumIsQuadraticInLambda) {
  for (int n = 45; n <= 55; ++n) {
    const Rational lambda = make_rational(n, 100);
    const DLambdaResult r = d_lambda_minimum(geometry(), lambda);
    EXPECT_EQ(r.minimum, QSqrt5(Rational(make_rational(441, 20) * lambda * lambda))) << to_string(lambda);
    EXPECT_TRUE(r.tail_certified) << to_string(lambda);
    EXPECT_EQ(r.tail_level, make_rational(289, 20));
  }
}

TEST(DLambda, CubicOperatorMinimum) {
  const DLambdaResult r = d_lambda_minimum(geometry(), make_rational(1, 3));
  EXPECT_EQ(r.minimum, QSqrt5(make_rational(49, 20)));
  ASSERT_EQ(r.minimizers.size(), 1u);
  EXPECT_EQ(r.minimizers.front(), std::make_pair(0, 0));
}

TEST(DLambda, MinimumStrictlyIncreasesOnTheSweep) {
  QSqrt5 last(-1);
  for (int n = 45; n <= 55; ++n) {
    const QSqrt5 v = d_lambda_minimum(geometry(), make_rational(n, 100)).minimum;
    EXPECT_GT(v, last);
    last = v;
  }
}

TEST(DLambda, BoundLimits) {
  EXPECT_THROW(d_lambda_minimum(geometry(), make_rational(1, 2), make_rational(12)), SearchError);
  EXPECT_THROW(d_lambda_minimum(geometry(), make_rational(1, 2), make_rational(289, 20)), UnsupportedError);
}

TEST(BergerBlocks, Inequalities) {
  const BergerInequalities r = berger_block_inequalities();
  EXPECT_TRUE(r.gamma11);
  EXPECT_TRUE(r.gamma20);
}

TEST(BergerPair, SpinorsStayIrreducibleUnderSO3) {
  const auto pair = berger_pair(geometry());
  EXPECT_FALSE(pair->symmetric);
  EXPECT_EQ(pair->dimension(), 7u);
  EXPECT_EQ(pair->rank_difference(), 1);
  EXPECT_NO_THROW(pair->verify());
}
