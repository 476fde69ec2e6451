#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "diracbound/errors.hpp"
#include "diracbound/exact/matrix.hpp"
#include "diracbound/lie/root_system.hpp"

namespace diracbound {

/// Invariant form -1/2 tr(XY), extended complex-bilinearly.
template <class F>
F killing_half_trace(const Matrix<F>& x, const Matrix<F>& y) {
  return trace_product(x, y) * F(make_rational(-1, 2));
}

/// Coordinates of x in a basis with Gram matrix inverse `gram_inv` under killing_half_trace.
template <class F>
std::vector<F> basis_coordinates(const std::vector<Matrix<F>>& basis, const Matrix<F>& gram_inv, const Matrix<F>& x) {
  const std::size_t n = basis.size();
  std::vector<F> pairing(n);
  for (std::size_t b = 0; b < n; ++b) pairing[b] = killing_half_trace(x, basis[b]);
  std::vector<F> c(n, F(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!is_zero(gram_inv(a, b)) && !is_zero(pairing[b])) c[a] += gram_inv(a, b) * pairing[b];
  return c;
}

template <class F>
Matrix<F> combine(const std::vector<Matrix<F>>& basis, const std::vector<F>& coeffs) {
  Matrix<F> m(basis.front().rows(), basis.front().cols());
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (!is_zero(coeffs[a])) m += basis[a] * coeffs[a];
  return m;
}

/// Weight spaces of commuting operators rho(T_j) acting with eigenvalues i*mu_j.
template <class F>
struct WeightDecomposition {
  std::vector<Weight> weights;     // one per basis vector, grouped by weight
  Matrix<F> basis;                 // columns: joint eigenvectors
};

/// Snaps a double onto (1/2)Z; throws PrecisionError if it is further than tol.
inline long long snap_half_integer(double x, double tol = 1e-9) {
  double t = std::round(2.0 * x);
  if (std::abs(2.0 * x - t) > 2.0 * tol) throw PrecisionError("eigenvalue " + std::to_string(x) + " is not on the weight lattice");
  return static_cast<long long>(t);
}

/// Exact joint weight decomposition. Candidate eigenvalues come from a floating
/// diagonalisation and are snapped to (1/2)Z; the eigenspaces themselves are exact kernels.
template <class F>
WeightDecomposition<F> joint_weight_decomposition(const std::vector<Matrix<F>>& cartan, std::size_t dim) {
  static_assert(FieldTraits<F>::has_imaginary_unit, "weight decomposition needs an imaginary unit");
  const F i = FieldTraits<F>::i();
  // each entry: partial weight (doubled) and basis of the joint eigenspace so far
  struct Part {
    std::vector<long long> twice;
    Matrix<F> basis;
  };
  std::vector<Part> parts{{{}, Matrix<F>::identity(dim)}};
  for (const auto& t : cartan) {
    std::vector<Part> next;
    for (auto& part : parts) {
      // restrict t to the subspace: t * B = B * R
      const Matrix<F> tb = t * part.basis;
      auto r = solve(part.basis, tb);
      if (!r) throw ConsistencyError("Cartan elements do not preserve a joint eigenspace");
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(*r), false);
      std::vector<long long> candidates;
      for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        auto ev = es.eigenvalues()[k];
        if (std::abs(ev.real()) > 1e-7) throw PrecisionError("Cartan eigenvalue is not imaginary");
        candidates.push_back(snap_half_integer(ev.imag(), 1e-7));
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      std::size_t found = 0;
      for (long long c : candidates) {
        Matrix<F> shifted = *r - Matrix<F>::identity(r->rows()) * (i * F(make_rational(static_cast<long>(c), 2)));
        Matrix<F> ker = nullspace(shifted);
        if (ker.cols() == 0) throw PrecisionError("snapped eigenvalue has no exact eigenvector");
        found += ker.cols();
        Part p{part.twice, part.basis * ker};
        p.twice.push_back(c);
        next.push_back(std::move(p));
      }
      if (found != part.basis.cols()) throw PrecisionError("Cartan action is not diagonalisable over the working field");
    }
    parts = std::move(next);
  }
  WeightDecomposition<F> out;
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.twice > b.twice; });
  std::vector<std::vector<F>> cols;
  for (auto& p : parts)
    for (std::size_t c = 0; c < p.basis.cols(); ++c) {
      out.weights.push_back(Weight::doubled(p.twice));
      cols.push_back(p.basis.column(c));
    }
  out.basis = Matrix<F>::from_columns(dim, cols);
  return out;
}

/// A compact matrix Lie algebra with a Cartan subalgebra and its complex root vectors.
template <class F>
class MatrixLieAlgebra {
 public:
  struct CartanWeyl {
    std::vector<F> cartan;  // coefficients of T_j
    std::vector<F> roots;   // coefficients of E_alpha in root order
  };

  MatrixLieAlgebra() = default;

  /// `basis` spans the real form; `cartan` are commuting elements T_j with roots acting by
  /// ad(T_j) E_alpha = i alpha_j E_alpha. Root vectors are found as exact joint kernels.
  MatrixLieAlgebra(std::string name, std::vector<Matrix<F>> basis, std::vector<Matrix<F>> cartan, RootSystem roots)
      : name_(std::move(name)), basis_(std::move(basis)), cartan_(std::move(cartan)), rs_(std::move(roots)) {
    const std::size_t n = basis_.size();
    if (n == 0) throw ConfigurationError(name_ + ": empty basis");
    gram_ = Matrix<F>(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) gram_(a, b) = killing_half_trace(basis_[a], basis_[b]);
    gram_inv_ = inverse(gram_);
    check_cartan_metric();
    find_root_vectors();
  }

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t defining_dimension() const { return basis_.front().rows(); }
  const std::vector<Matrix<F>>& basis() const { return basis_; }
  const Matrix<F>& gram() const { return gram_; }
  const Matrix<F>& gram_inverse() const { return gram_inv_; }
  const std::vector<Matrix<F>>& cartan() const { return cartan_; }
  const RootSystem& root_system() const { return rs_; }
  /// Positive roots followed by their negatives.
  const std::vector<Weight>& roots() const { return roots_; }
  std::size_t root_index(const Weight& a) const {
    auto it = root_index_.find(a);
    if (it == root_index_.end()) throw DomainError(name_ + ": " + a.str() + " is not a root");
    return it->second;
  }
  const Matrix<F>& root_vector(std::size_t k) const { return root_vectors_[k]; }
  const Matrix<F>& root_vector(const Weight& a) const { return root_vectors_[root_index(a)]; }

  F inner(const Matrix<F>& x, const Matrix<F>& y) const { return killing_half_trace(x, y); }
  std::vector<F> coordinates(const Matrix<F>& x) const { return basis_coordinates(basis_, gram_inv_, x); }

  CartanWeyl decompose(const Matrix<F>& x) const {
    std::vector<F> c = coordinates(x);
    std::vector<F> y(c.size(), F(0));
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < c.size(); ++b)
        if (!is_zero(cw_inverse_(a, b)) && !is_zero(c[b])) y[a] += cw_inverse_(a, b) * c[b];
    CartanWeyl out;
    out.cartan.assign(y.begin(), y.begin() + static_cast<long>(cartan_.size()));
    out.roots.assign(y.begin() + static_cast<long>(cartan_.size()), y.end());
    return out;
  }

  /// Closure under brackets and Jacobi identity on basis triples.
  void verify() const {
    const std::size_t n = basis_.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        Matrix<F> br = commutator(basis_[a], basis_[b]);
        if (combine(basis_, coordinates(br)) != br) throw ConsistencyError(name_ + ": basis not closed under bracket");
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          Matrix<F> j = commutator(basis_[a], commutator(basis_[b], basis_[c])) +
                        commutator(basis_[b], commutator(basis_[c], basis_[a])) +
                        commutator(basis_[c], commutator(basis_[a], basis_[b]));
          if (!j.is_zero_matrix()) throw ConsistencyError(name_ + ": Jacobi identity fails");
        }
  }

 private:
  void check_cartan_metric() {
    const std::size_t r = cartan_.size();
    if (r != rs_.coordinates()) throw ConfigurationError(name_ + ": Cartan size does not match root system");
    Matrix<F> g(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) g(a, b) = killing_half_trace(cartan_[a], cartan_[b]);
    // the weight Gram matrix is the inverse of the Cartan Gram matrix
    Matrix<F> expected(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) expected(a, b) = F(rs_.gram()(a, b) * rs_.gram_scale());
    if (inverse(g) != expected)
      throw ConsistencyError(name_ + ": metric on the Cartan subalgebra does not match " + rs_.label());
  }

  void find_root_vectors() {
    const std::size_t n = basis_.size();
    const F i = FieldTraits<F>::i();
    std::vector<Matrix<F>> ad;
    for (const auto& t : cartan_) {
      Matrix<F> m(n, n);
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<F> c = coordinates(commutator(t, basis_[b]));
        for (std::size_t a = 0; a < n; ++a) m(a, b) = c[a];
      }
      ad.push_back(std::move(m));
    }
    roots_ = rs_.roots();
    if (cartan_.size() + roots_.size() != n)
      throw ConsistencyError(name_ + ": dimension does not match rank plus number of roots");
    Matrix<F> cw(n, n);
    for (std::size_t j = 0; j < cartan_.size(); ++j) {
      std::vector<F> c = coordinates(cartan_[j]);
      for (std::size_t a = 0; a < n; ++a) cw(a, j) = c[a];
    }
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      const Weight& alpha = roots_[k];
      Matrix<F> stacked(n * cartan_.size(), n);
      for (std::size_t j = 0; j < cartan_.size(); ++j) {
        Matrix<F> m = ad[j] - Matrix<F>::identity(n) * (i * F(alpha[j]));
        stacked.set_block(j * n, 0, m);
      }
      Matrix<F> ker = nullspace(stacked);
      if (ker.cols() != 1) throw ConsistencyError(name_ + ": root space of " + alpha.str() + " is not one-dimensional");
      std::vector<F> v = ker.column(0);
      root_vectors_.push_back(combine(basis_, v));
      for (std::size_t a = 0; a < n; ++a) cw(a, cartan_.size() + k) = v[a];
      root_index_.emplace(alpha, k);
    }
    cw_inverse_ = inverse(cw);
  }

  std::string name_;
  std::vector<Matrix<F>> basis_;
  std::vector<Matrix<F>> cartan_;
  RootSystem rs_;
  Matrix<F> gram_;
  Matrix<F> gram_inv_;
  std::vector<Weight> roots_;
  std::map<Weight, std::size_t> root_index_;
  std::vector<Matrix<F>> root_vectors_;
  Matrix<F> cw_inverse_;
};

}  // namespace diracbound
