#pragma once

#include <string>
#include <vector>

#include "diracbound/exact/rational.hpp"

namespace diracbound {

/// One-generator truncated ring Q[x]/(x^{top+1}) with x in degree `generator_degree`.
struct TruncatedRing {
  std::string name;       // "S^4", "CP^3"
  std::string generator;  // "w" or "a"
  int generator_degree = 0;
  int top = 0;            // highest nonzero power

  /// H*(S^{2m}) with generator w in degree 2m.
  static TruncatedRing sphere(int m);
  /// H*(CP^n) with generator a in degree 2.
  static TruncatedRing projective(int n);
  int dimension() const { return generator_degree * top; }

  friend bool operator==(const TruncatedRing&, const TruncatedRing&) = default;
};

class CohomologyClass {
 public:
  CohomologyClass() = default;
  explicit CohomologyClass(TruncatedRing ring, std::vector<Rational> coefficients = {});

  static CohomologyClass constant(const TruncatedRing& ring, const Rational& c);
  static CohomologyClass generator(const TruncatedRing& ring);

  const TruncatedRing& ring() const { return ring_; }
  /// Coefficient of x^k (0 beyond the truncation).
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return c_; }
  /// Component in cohomological degree d.
  Rational in_degree(int d) const;
  bool is_constant() const;

  CohomologyClass& operator+=(const CohomologyClass& o);
  CohomologyClass& operator-=(const CohomologyClass& o);
  CohomologyClass& operator*=(const Rational& s);
  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
  friend CohomologyClass operator*(CohomologyClass a, const Rational& s) { return a *= s; }
  friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b);
  CohomologyClass operator-() const { return *this * Rational(-1); }

  /// exp of a nilpotent class; the series stops at the truncation.
  CohomologyClass exp() const;
  /// x -> -x.
  CohomologyClass negate_generator() const;
  /// Evaluation on the fundamental class: the top coefficient.
  Rational pair() const { return coefficient(ring_.top); }

  std::string str() const;

  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
  }

 private:
  void same_ring(const CohomologyClass& o) const;

  TruncatedRing ring_;
  std::vector<Rational> c_;  // size top + 1
};

}  // namespace diracbound
