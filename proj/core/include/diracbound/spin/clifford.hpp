#pragma once

#include <string>
#include <vector>

#include "diracbound/errors.hpp"
#include "diracbound/exact/matrix.hpp"

namespace diracbound {

/// Generators c_1..c_n with c_i c_j + c_j c_i = -2 delta_ij on a complex module.
template <class F>
struct CliffordModule {
  std::vector<Matrix<F>> generators;

  std::size_t rank() const { return generators.size(); }
  std::size_t dimension() const { return generators.empty() ? 1 : generators.front().rows(); }

  /// omega = c_1 c_2 ... c_n.
  Matrix<F> volume_element() const {
    Matrix<F> w = Matrix<F>::identity(dimension());
    for (const auto& c : generators) w = w * c;
    return w;
  }

  /// Lift of a skew endomorphism A of the generating space (A(j,i) = <A e_i, e_j>):
  /// 1/4 sum_ij A(j,i) c_i c_j.
  Matrix<F> spin_lift(const Matrix<F>& a) const {
    Matrix<F> s(dimension(), dimension());
    const F quarter = F(make_rational(1, 4));
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (!is_zero(a(j, i))) s += generators[i] * generators[j] * (a(j, i) * quarter);
    return s;
  }

  void verify() const {
    const Matrix<F> id = Matrix<F>::identity(dimension());
    for (std::size_t i = 0; i < rank(); ++i) {
      if (generators[i].adjoint() != -generators[i])
        throw ConsistencyError("Clifford generator " + std::to_string(i + 1) + " is not skew-adjoint");
      for (std::size_t j = i; j < rank(); ++j) {
        Matrix<F> ac = generators[i] * generators[j] + generators[j] * generators[i];
        Matrix<F> expected = i == j ? id * F(-2) : Matrix<F>(dimension(), dimension());
        if (ac != expected)
          throw ConsistencyError("Clifford relation fails for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
};

/// Irreducible complex Clifford module of dimension 2^floor(n/2) built from Pauli blocks.
template <class F>
CliffordModule<F> pauli_clifford_module(std::size_t n) {
  const F i = FieldTraits<F>::i();
  Matrix<F> s1(2, 2), s2(2, 2), s3(2, 2);
  s1(0, 1) = F(1);
  s1(1, 0) = F(1);
  s2(0, 1) = -i;
  s2(1, 0) = i;
  s3(0, 0) = F(1);
  s3(1, 1) = F(-1);
  CliffordModule<F> cm;
  std::vector<Matrix<F>>& c = cm.generators;
  const std::size_t pairs = n / 2;
  for (std::size_t k = 0; k < pairs; ++k) {
    for (auto& g : c) g = kron(g, s3);
    const Matrix<F> id = Matrix<F>::identity(std::size_t{1} << k);
    c.push_back(kron(id, s1) * i);
    c.push_back(kron(id, s2) * i);
  }
  if (n % 2 == 1) {
    if (pairs == 0) {
      Matrix<F> one(1, 1);
      one(0, 0) = i;
      c.push_back(one);
    } else {
      // a multiple of c_1...c_{2k}; its square is (-1)^k
      Matrix<F> w = cm.volume_element();
      c.push_back(pairs % 2 == 1 ? w : w * i);
    }
  }
  return cm;
}

}  // namespace diracbound
