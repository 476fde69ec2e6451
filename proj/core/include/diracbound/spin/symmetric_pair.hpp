#pragma once

#include <memory>
#include <string>
#include <vector>

#include "diracbound/errors.hpp"
#include "diracbound/exact/matrix.hpp"
#include "diracbound/lie/root_system.hpp"
#include "diracbound/spin/clifford.hpp"
#include "diracbound/spin/lie_algebra.hpp"

namespace diracbound {

/// Matrix realisation of g = h + p with p orthonormal for -1/2 tr.
template <class F>
struct SymmetricPair {
  std::string id;
  std::string description;
  MatrixLieAlgebra<F> g;  // basis: h basis followed by p
  MatrixLieAlgebra<F> h;
  std::vector<Matrix<F>> p;
  CartanEmbedding embedding;
  CliffordModule<F> clifford;
  bool symmetric = true;

  std::size_t dimension() const { return p.size(); }
  int rank_difference() const {
    return static_cast<int>(embedding.g.coordinates()) - static_cast<int>(embedding.h.coordinates());
  }

  /// <y, e_j> for each basis vector of p.
  std::vector<F> p_coordinates(const Matrix<F>& y) const {
    std::vector<F> c(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) c[j] = killing_half_trace(y, p[j]);
    return c;
  }
  /// Action of x in h on p: entry (j, i) = <[x, e_i], e_j>.
  Matrix<F> isotropy(const Matrix<F>& x) const {
    Matrix<F> a(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::vector<F> c = p_coordinates(commutator(x, p[i]));
      for (std::size_t j = 0; j < p.size(); ++j) a(j, i) = c[j];
    }
    return a;
  }
  /// Isotropy spin action sigma(x) on the spinor module.
  Matrix<F> spin(const Matrix<F>& x) const { return clifford.spin_lift(isotropy(x)); }

  /// c_ijk = <[e_i, e_j], e_k>, flattened as (i * n + j) * n + k.
  std::vector<F> structure_p() const {
    const std::size_t n = p.size();
    std::vector<F> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<F> v = p_coordinates(commutator(p[i], p[j]));
        for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = v[k];
      }
    return c;
  }

  /// h-component of [e_i, e_j] for all pairs, as matrices.
  Matrix<F> bracket_h(std::size_t i, std::size_t j) const {
    Matrix<F> b = commutator(p[i], p[j]);
    std::vector<F> c = p_coordinates(b);
    for (std::size_t k = 0; k < p.size(); ++k)
      if (!is_zero(c[k])) b -= p[k] * c[k];
    return b;
  }

  void verify() const {
    const std::size_t n = p.size();
    if (g.dimension() != h.dimension() + n)
      throw ConsistencyError(id + ": dim g != dim h + dim p");
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<F> c = p_coordinates(p[i]);
      for (std::size_t j = 0; j < n; ++j)
        if (c[j] != F(i == j ? 1 : 0)) throw ConsistencyError(id + ": p basis is not orthonormal");
      for (const auto& f : h.basis())
        if (!is_zero(killing_half_trace(p[i], f))) throw ConsistencyError(id + ": p is not orthogonal to h");
    }
    g.verify();
    h.verify();
    embedding.verify();
    // Ad-invariance of the form on basis triples
    const auto& gb = g.basis();
    std::vector<std::vector<Matrix<F>>> br(gb.size());
    for (std::size_t a = 0; a < gb.size(); ++a)
      for (std::size_t b = 0; b < gb.size(); ++b) br[a].push_back(commutator(gb[a], gb[b]));
    for (std::size_t a = 0; a < gb.size(); ++a)
      for (std::size_t b = 0; b < gb.size(); ++b)
        for (std::size_t c = b; c < gb.size(); ++c)
          if (killing_half_trace(br[a][b], gb[c]) + killing_half_trace(gb[b], br[a][c]) != F(0))
            throw ConsistencyError(id + ": metric is not Ad-invariant");
    // [h, p] in p
    for (const auto& x : h.basis()) {
      Matrix<F> a = isotropy(x);
      for (std::size_t i = 0; i < n; ++i) {
        Matrix<F> expected(x.rows(), x.cols());
        for (std::size_t j = 0; j < n; ++j)
          if (!is_zero(a(j, i))) expected += p[j] * a(j, i);
        if (commutator(x, p[i]) != expected) throw ConsistencyError(id + ": [h, p] is not contained in p");
      }
    }
    if (symmetric)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (const auto& c : p_coordinates(commutator(p[i], p[j])))
            if (!is_zero(c)) throw ConsistencyError(id + ": [p, p] is not contained in h");
    clifford.verify();
    if (clifford.rank() != n) throw ConsistencyError(id + ": Clifford module has the wrong rank");
    // sigma is a Lie algebra homomorphism
    const auto& hb = h.basis();
    std::vector<Matrix<F>> s;
    for (const auto& x : hb) s.push_back(spin(x));
    for (std::size_t a = 0; a < hb.size(); ++a) {
      if (s[a].adjoint() != -s[a]) throw ConsistencyError(id + ": spin action is not skew-adjoint");
      for (std::size_t b = a + 1; b < hb.size(); ++b)
        if (spin(commutator(hb[a], hb[b])) != commutator(s[a], s[b]))
          throw ConsistencyError(id + ": spin action is not a homomorphism");
    }
  }
};

using ComplexRational = GaussianRational;
using CatalogPair = SymmetricPair<ComplexRational>;

/// Spin(N)/Spin(N-1) = S^{N-1}.
std::shared_ptr<const CatalogPair> sphere_pair(std::string id, int n);
/// SU(N)/S(U(N-1) x U(1)) = CP^{N-1}.
std::shared_ptr<const CatalogPair> projective_pair(std::string id, int n);
/// Pair for a shipped symmetric catalog id ("S4", "CP3", ...).
std::shared_ptr<const CatalogPair> build_pair(const std::string& id);

}  // namespace diracbound
