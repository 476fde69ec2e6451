#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diracbound/exact/matrix.hpp"
#include "diracbound/lie/weight.hpp"

namespace diracbound {

enum class Family { A, B, C, D, G };

Family parse_family(char c);
char family_letter(Family f);

/// Root system of a compact reductive Lie algebra in epsilon-coordinates.
///
/// Positive roots are the lexicographically positive ones. The invariant form is
/// scale * x^T G y. The standard Gram matrices reproduce -1/2 tr in the defining
/// representation: identity for B, C, D and 2(I - J/(l+1)) for A_l in coordinates
/// normalised so that the last epsilon-coordinate is zero.
class RootSystem {
 public:
  RootSystem() = default;

  static RootSystem build(Family family, int rank, const Rational& gram_scale = Rational(1));
  /// Reductive system from explicit positive roots (subsystems, tori, products).
  static RootSystem from_positive_roots(std::string label, std::size_t coordinates, std::vector<Weight> positive,
                                        Matrix<Rational> gram, const Rational& gram_scale = Rational(1));

  const std::string& label() const { return label_; }
  std::optional<Family> family() const { return family_; }
  /// Semisimple rank (number of simple roots).
  int rank() const { return static_cast<int>(simple_.size()); }
  std::size_t coordinates() const { return coords_; }

  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  std::vector<Weight> roots() const;
  Matrix<Rational> cartan_matrix() const;
  const Weight& rho() const { return rho_; }
  const Matrix<Rational>& gram() const { return gram_; }
  const Rational& gram_scale() const { return scale_; }

  Rational inner(const Weight& a, const Weight& b) const;
  Rational norm2(const Weight& a) const { return inner(a, a); }
  /// Integer numerator n with <a,b> = scale * n / (4 L); exact and fast.
  long long inner_numerator(const Weight& a, const Weight& b) const;

  /// <w, alpha_i^vee> for the i-th simple root; throws if not integral.
  long long simple_pairing(const Weight& w, std::size_t i) const;
  /// <w, alpha^vee> for an arbitrary root alpha.
  long long coroot_pairing(const Weight& w, const Weight& alpha) const;
  bool is_dominant(const Weight& w) const;
  Weight reflect(const Weight& w, std::size_t i) const;
  Weight dominant_conjugate(const Weight& w) const;
  /// Elements w(rho) of the Weyl orbit of rho with signs det(w).
  std::vector<std::pair<Weight, int>> signed_rho_orbit() const;

  /// Requires coordinates() == rank().
  std::vector<Weight> fundamental_weights() const;

  /// <gamma, gamma + 2 rho>; gamma must be dominant.
  Rational casimir(const Weight& gamma) const;
  /// Weyl dimension formula; gamma must be dominant.
  std::uint64_t dimension(const Weight& gamma) const;
  /// Highest weight of the dual representation, the dominant conjugate of -gamma.
  Weight dual(const Weight& gamma) const;

  /// Throws ConsistencyError if a structural invariant fails.
  void verify() const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.coords_ == b.coords_ && a.positive_ == b.positive_ && a.gram_ == b.gram_ && a.scale_ == b.scale_;
  }

 private:
  void finish();

  std::string label_;
  std::optional<Family> family_;
  std::size_t coords_ = 0;
  std::vector<Weight> positive_;
  std::vector<Weight> simple_;
  Weight rho_;
  Matrix<Rational> gram_;
  Rational scale_ = 1;
  // integer form of the Gram matrix: gram_int_ = gram_denominator_ * gram_
  std::vector<long long> gram_int_;
  long long gram_denominator_ = 1;
  std::vector<std::vector<long long>> simple_covector_;  // G_int * 2 alpha_i
  std::vector<long long> simple_norm_;                  // inner_numerator(alpha_i, alpha_i)
};

void require_dominant(const RootSystem& rs, const Weight& gamma);

/// Linear map from the Cartan dual of g to that of h (weights restrict along it).
struct CartanEmbedding {
  RootSystem g;
  RootSystem h;
  Matrix<Rational> map;  // h.coordinates() x g.coordinates()

  Weight apply(const Weight& w) const;
  bool is_identity() const;
  /// Every root of h must be the restriction of a root of g.
  void verify() const;
};

}  // namespace diracbound
