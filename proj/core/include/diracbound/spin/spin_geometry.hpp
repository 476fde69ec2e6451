#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "diracbound/lie/representation.hpp"
#include "diracbound/spin/module_model.hpp"
#include "diracbound/spin/symmetric_pair.hpp"
#include "diracbound/spin/weight_module.hpp"

namespace diracbound {

struct SpinorComponent {
  Weight highest_weight;  // for h
  long long multiplicity = 0;
  std::uint64_t dimension = 0;
};

struct SpinorDecomposition {
  std::vector<SpinorComponent> components;
  int rank_difference = 0;
  WeightMultiset weights;  // h-weights of the spinor module
};

/// 1/8 sum_ij |[e_i, e_j]|^2, checked against -sum_k sigma(f_k)^2 over an orthonormal basis of h.
template <class F>
F casimir_sigma(const SymmetricPair<F>& pair) {
  const std::size_t n = pair.dimension();
  F s(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<F> b = commutator(pair.p[i], pair.p[j]);
      s += killing_half_trace(b, b);
    }
  s *= F(make_rational(1, 8));
  const auto& hb = pair.h.basis();
  const Matrix<F>& ginv = pair.h.gram_inverse();
  std::vector<Matrix<F>> sigma;
  for (const auto& x : hb) sigma.push_back(pair.spin(x));
  const std::size_t d = pair.clifford.dimension();
  Matrix<F> cas(d, d);
  for (std::size_t a = 0; a < hb.size(); ++a)
    for (std::size_t b = 0; b < hb.size(); ++b)
      if (!is_zero(ginv(a, b))) cas -= sigma[a] * sigma[b] * ginv(a, b);
  if (cas != Matrix<F>::identity(d) * s)
    throw DomainError(pair.id + ": the Casimir of the isotropy spin action is not scalar");
  return s;
}

/// h-weight of each spinor basis vector; requires sigma(h Cartan) to be diagonal.
template <class F>
std::vector<Weight> spinor_basis_weights(const SymmetricPair<F>& pair) {
  const std::size_t d = pair.clifford.dimension();
  const auto& cartan = pair.h.cartan();
  std::vector<std::vector<Rational>> coords(d, std::vector<Rational>(cartan.size()));
  for (std::size_t j = 0; j < cartan.size(); ++j) {
    Matrix<F> s = pair.spin(cartan[j]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        if (r == c) continue;
        if (!is_zero(s(r, c))) throw UnsupportedError(pair.id + ": spinor basis is not a weight basis");
      }
    for (std::size_t r = 0; r < d; ++r) {
      const F& v = s(r, r);
      if constexpr (std::same_as<F, GaussianRational>) {
        if (!is_zero(v.a())) throw ConsistencyError(pair.id + ": Cartan acts with a real eigenvalue");
        coords[r][j] = v.b();
      } else {
        throw UnsupportedError("spinor basis weights need Gaussian rationals");
      }
    }
  }
  std::vector<Weight> out;
  for (auto& c : coords) out.push_back(Weight::from_rationals(c));
  return out;
}

/// Decomposition of the spinor module under h; asserts the multiplicity 2^[k/2] pattern.
template <class F>
SpinorDecomposition spinor_decomposition(const SymmetricPair<F>& pair) {
  const RootSystem& hrs = pair.h.root_system();
  std::vector<Matrix<F>> sc;
  for (const auto& t : pair.h.cartan()) sc.push_back(pair.spin(t));
  WeightDecomposition<F> wd = joint_weight_decomposition(sc, pair.clifford.dimension());
  SpinorDecomposition out;
  out.rank_difference = pair.rank_difference();
  for (const auto& w : wd.weights) out.weights[w] += 1;
  const long long expected = 1LL << (out.rank_difference / 2);
  std::uint64_t total = 0;
  for (const auto& [mu, m] : decompose_character(out.weights, hrs)) {
    if (m != expected)
      throw ConsistencyError(pair.id + ": spinor component " + mu.str() + " has multiplicity " + std::to_string(m));
    out.components.push_back({mu, m, hrs.dimension(mu)});
    total += static_cast<std::uint64_t>(m) * hrs.dimension(mu);
  }
  if (total != (std::uint64_t{1} << (pair.dimension() / 2)))
    throw ConsistencyError(pair.id + ": spinor components do not fill the spinor module");
  return out;
}

/// omega = c_1...c_n is skew-adjoint (n = 1, 2 mod 4) or self-adjoint (n = 0, 3 mod 4).
template <class F>
bool volume_element_is_skew(const CliffordModule<F>& cm) {
  Matrix<F> w = cm.volume_element();
  return w.adjoint() == -w;
}

/// Restriction of the Dirac operator to Hom_H(V^gamma, Sigma) = (V^{gamma*} (x) Sigma)^H.
struct DiracBlock {
  Weight gamma;
  Weight gamma_dual;
  std::size_t hom_dimension = 0;
  std::size_t tensor_candidates = 0;  // size of the zero-weight search space
  Matrix<ComplexRational> matrix;
  Matrix<ComplexRational> square;
  Rational expected;  // casimir(gamma*) + c_H^sigma
  bool scalar = false;  // square == expected * Id
};

struct ComponentValue {
  Weight sigma;
  std::optional<Rational> value;
  std::vector<Weight> minimizers;
};

struct SpectralData {
  Rational lambda1;
  std::vector<Weight> minimizers;
  Rational casimir_sigma;
  std::vector<ComponentValue> components;  // ordered by the label q
  std::size_t nodes = 0;
};

/// Node budget exhausted; carries what was found so far.
class ResourceError : public SearchError {
 public:
  ResourceError(const std::string& what, SpectralData partial) : SearchError(what), partial_(std::move(partial)) {}
  const SpectralData& partial() const { return partial_; }

 private:
  SpectralData partial_;
};

struct VafaWittenReport {
  Weight gamma;
  std::vector<Rational> mu;
  double norm2 = 0;
  Rational lambda1;
  bool within_bound = false;
  bool equality = false;        // |norm2 - lambda1| <= tolerance
  bool exact_equality = false;  // certified in exact arithmetic (mu = 1 only)
};

/// Spin-geometric data of a catalog pair with memoised modules.
class SpinGeometry {
 public:
  explicit SpinGeometry(std::shared_ptr<const CatalogPair> pair);

  const CatalogPair& pair() const { return *pair_; }
  const RootSystem& g_roots() const { return pair_->embedding.g; }
  const RootSystem& h_roots() const { return pair_->embedding.h; }
  const Rational& casimir_sigma() const { return casimir_sigma_; }
  const SpinorDecomposition& spinors() const { return spinors_; }
  const std::vector<Weight>& spinor_weights() const { return spinor_weights_; }
  bool equal_rank() const { return pair_->embedding.is_identity(); }

  /// Multiplicity of each spinor component in the restriction of V^gamma.
  std::map<Weight, long long> hom_components(const Weight& gamma) const;
  long long hom_dimension(const Weight& gamma) const;

  /// Weight-module model of V^gamma (generic builder).
  std::shared_ptr<const WeightModule<ComplexRational>> module(const Weight& gamma) const;
  /// Best available model of V^gamma (Gelfand-Tsetlin for su(N)).
  std::unique_ptr<ModuleModel<ComplexRational>> model(const Weight& gamma) const;
  /// Order of the spinor components used for the label q.
  std::vector<Weight> component_order() const;

 private:
  std::shared_ptr<const CatalogPair> pair_;
  Rational casimir_sigma_;
  SpinorDecomposition spinors_;
  std::vector<Weight> spinor_weights_;
  std::vector<std::pair<Weight, int>> h_rho_orbit_;
  mutable std::unique_ptr<HighestWeightModules<ComplexRational>> modules_;
  mutable std::mutex mutex_;
};

DiracBlock dirac_block(const SpinGeometry& geo, const Weight& gamma);

/// Dominant gamma with casimir(gamma) <= bound and Hom_H(V^gamma, Sigma) != 0.
std::vector<Weight> admissible_weights(const SpinGeometry& geo, const Rational& bound);

SpectralData lambda1(const SpinGeometry& geo, std::size_t budget = 100000);

VafaWittenReport vafa_witten_operator(const SpinGeometry& geo, const Weight& gamma, const std::vector<Rational>& mu,
                                      const Rational& lambda1_value, double tolerance = 1e-9);

/// dim Hom_H(C, Sigma (x) sigma1^*) for an h-irreducible sigma1 (equal rank only).
long long twisted_kernel_dimension(const SpinGeometry& geo, const Weight& sigma1);

}  // namespace diracbound
