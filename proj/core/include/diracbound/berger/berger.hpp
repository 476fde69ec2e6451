#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "diracbound/berger/octonion.hpp"
#include "diracbound/exact/quadratic.hpp"
#include "diracbound/lie/root_system.hpp"
#include "diracbound/spin/symmetric_pair.hpp"

namespace diracbound {

/// so(5) realised as so(Q) on traceless symmetric 3x3 matrices, where SO(3) acts by conjugation.
struct BergerModel {
  Matrix<Rational> q;                 // trace form on the basis of traceless symmetric matrices
  std::vector<Matrix<Rational>> g;    // Q^{-1}(E_ab - E_ba), a < b
  std::vector<Matrix<Rational>> h;    // images of L_12, L_13, L_23
  std::vector<Matrix<Rational>> p;    // rational basis of the orthogonal complement of h
  Matrix<Rational> t1, t2;            // orthonormal Cartan of g with L_12 = 2 t1 + t2
  CartanEmbedding embedding;          // B2 -> B1 with metric scale 1/5
};

const BergerModel& berger_model();

/// Octonionic frame e_1..e_7 of p, stored as coefficients over the g basis.
struct BergerFrame {
  std::vector<std::vector<QSqrt5>> coefficients;
  std::string clifford = "right";  // Clifford multiplication is Cayley multiplication from this side
};

/// Solves for the frame: e_1 spans the zero weight of L_12, e_2 and e_3 are unit vectors in
/// weight planes, and the remaining vectors follow from e_i e_{i+1} = e_{i+3}.
BergerFrame solve_berger_frame(const BergerModel& model);
BergerFrame parse_berger_fixture(const std::string& json_text);
std::string berger_fixture_json(const BergerFrame& frame);
/// Frame shipped with the library.
BergerFrame shipped_berger_frame();

struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> residuals;

  void fail(std::string what) {
    passed = false;
    if (residuals.size() < 32) residuals.push_back(std::move(what));
  }
};

struct ReductiveBlock;

class BergerGeometry {
 public:
  BergerGeometry(const BergerModel& model, const BergerFrame& frame);

  const BergerModel& model() const { return *model_; }
  const OctonionTable& octonions() const { return table_; }
  const std::vector<Matrix<QSqrt5>>& frame() const { return e_; }
  const std::vector<Matrix<QSqrt5>>& h_basis() const { return h_; }
  /// c_i acting on Sigma_R = O (basis 1, e_1..e_7).
  const std::vector<Matrix<QSqrt5>>& clifford() const { return c_; }

  std::vector<QSqrt5> p_coordinates(const Matrix<QSqrt5>& y) const;
  Matrix<QSqrt5> bracket_p(std::size_t i, std::size_t j) const;
  /// c_ijk = <[e_i, e_j]_p, e_k> (0-based indices).
  const QSqrt5& structure(std::size_t i, std::size_t j, std::size_t k) const { return c_ijk_[(i * 7 + j) * 7 + k]; }
  /// ad~_{p,X} = 1/4 sum_ij <[X, e_i], e_j> c_i c_j; for X in h this is the isotropy spin action.
  Matrix<QSqrt5> ad_tilde(const Matrix<QSqrt5>& x) const;
  /// A = 1/12 sum c_ijk c_i c_j c_k.
  const Matrix<QSqrt5>& operator_a() const { return a_; }
  /// A = 1/3 sum c_i ad~_{p,e_i}.
  Matrix<QSqrt5> operator_a_adjoint_form() const;

  CheckReport verify_octonion_bracket() const;
  CheckReport verify_cayley_clifford() const;
  CheckReport verify_structure_tensor() const;
  CheckReport verify_operator_a() const;

  /// Memoised reductive block for gamma_{p,q}.
  std::shared_ptr<const ReductiveBlock> block(int p, int q) const;

 private:
  std::shared_ptr<const BergerModel> model_;
  OctonionTable table_;
  std::vector<Matrix<QSqrt5>> e_;
  std::vector<Matrix<QSqrt5>> h_;
  std::vector<Matrix<QSqrt5>> c_;
  std::vector<QSqrt5> c_ijk_;
  Matrix<QSqrt5> a_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const ReductiveBlock>> blocks_;
  mutable std::mutex mutex_;
};

/// Real representation of so(Q) with highest weight gamma_{p,q} (models for p + q <= 2).
struct BergerRepresentation {
  int p = 0;
  int q = 0;
  std::size_t dimension = 0;
  std::function<Matrix<QSqrt5>(const Matrix<QSqrt5>&)> action;
};
BergerRepresentation berger_representation(int p, int q);

/// The cubic Dirac operator D~ = D^{1/3} on Hom_H(V^{p,q}, Sigma_R) and the Kostant identity on V (x) Sigma_R.
struct ReductiveBlock {
  int p = 0;
  int q = 0;
  std::size_t hom_dimension = 0;
  Matrix<QSqrt5> cubic;     // D~ in the invariant basis
  Matrix<QSqrt5> a_block;   // id (x) A in the invariant basis
  Rational formula;         // p^2 + 3p + q^2 + q + 49/20
  Rational casimir_route;   // |gamma + rho_G|^2 - |rho_H|^2
  bool square_scalar = false;  // D~^2 = formula on the invariants
  bool kostant = false;        // D~^2 + Casimir_H(diagonal) = formula on V (x) Sigma_R
};
ReductiveBlock reductive_block(const BergerGeometry& geo, int p, int q, bool kostant = true);

/// |gamma_{p,q} + rho_G|^2 - |rho_H|^2 from the root data.
Rational berger_reductive_square(int p, int q);

struct DLambdaResult {
  Rational lambda;
  QSqrt5 minimum;  // smallest eigenvalue of (D^lambda)^2
  std::vector<std::pair<int, int>> minimizers;
  std::vector<std::pair<std::pair<int, int>, QSqrt5>> blocks;  // smallest eigenvalue^2 per contributing gamma
  Rational bound;
  Rational tail_level;  // smallest D~^2 above the bound
  bool tail_certified = false;
};

/// Minimum of (D^lambda)^2 with D^lambda = D~ + (3 lambda - 1) A; blocks with D~^2 <= bound are
/// computed exactly, the rest is bounded by |D~| - |3 lambda - 1| |A|.
DLambdaResult d_lambda_minimum(const BergerGeometry& geo, const Rational& lambda,
                               const Rational& bound = make_rational(249, 20));

struct BergerInequalities {
  bool gamma11 = false;  // 13/(2 sqrt5) - 1/(4 sqrt5) > 21/(4 sqrt5)
  bool gamma20 = false;  // sqrt249/(2 sqrt5) - 7/(4 sqrt5) > 21/(4 sqrt5)
};
/// Both comparisons by cross-squaring.
BergerInequalities berger_block_inequalities();

/// Berger pair over Q(sqrt5, i) for the generic spinor decomposition.
std::shared_ptr<const SymmetricPair<QSqrt5i>> berger_pair(const BergerGeometry& geo);

struct BergerReport {
  std::vector<CheckReport> checks;
  std::vector<DLambdaResult> sweep;
  std::vector<ReductiveBlock> blocks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Runs every exact check and the D^lambda sweep for the given frame.
BergerReport berger_verify(const BergerFrame& frame);

}  // namespace diracbound
