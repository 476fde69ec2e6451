#include "diracbound/topology/cohomology.hpp"

#include "diracbound/errors.hpp"

namespace diracbound {

TruncatedRing TruncatedRing::sphere(int m) {
  if (m < 1) throw DomainError("H*(S^{2m}) needs m >= 1");
  return {"S^" + std::to_string(2 * m), "w", 2 * m, 1};
}

TruncatedRing TruncatedRing::projective(int n) {
  if (n < 1) throw DomainError("H*(CP^n) needs n >= 1");
  return {"CP^" + std::to_string(n), "a", 2, n};
}

CohomologyClass::CohomologyClass(TruncatedRing ring, std::vector<Rational> coefficients)
    : ring_(std::move(ring)), c_(std::move(coefficients)) {
  for (std::size_t k = ring_.top + 1; k < c_.size(); ++k)
    if (!is_zero(c_[k])) throw DomainError("class exceeds the dimension of " + ring_.name);
  c_.resize(ring_.top + 1, Rational(0));
}

CohomologyClass CohomologyClass::constant(const TruncatedRing& ring, const Rational& c) { return CohomologyClass(ring, {c}); }

CohomologyClass CohomologyClass::generator(const TruncatedRing& ring) {
  return CohomologyClass(ring, {Rational(0), Rational(1)});
}

Rational CohomologyClass::coefficient(int k) const {
  if (k < 0 || k > ring_.top) return Rational(0);
  return c_[k];
}

Rational CohomologyClass::in_degree(int d) const {
  if (d % ring_.generator_degree != 0) return Rational(0);
  return coefficient(d / ring_.generator_degree);
}

bool CohomologyClass::is_constant() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (!is_zero(c_[k])) return false;
  return true;
}

void CohomologyClass::same_ring(const CohomologyClass& o) const {
  if (!(ring_ == o.ring_)) throw DomainError("classes live in different rings: " + ring_.name + " and " + o.ring_.name);
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& o) {
  same_ring(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& o) {
  same_ring(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CohomologyClass& CohomologyClass::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
  a.same_ring(b);
  std::vector<Rational> c(a.c_.size(), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return CohomologyClass(a.ring_, std::move(c));
}

CohomologyClass CohomologyClass::exp() const {
  if (!is_zero(c_[0])) throw DomainError("exp needs a class without constant term");
  CohomologyClass sum = constant(ring_, Rational(1));
  CohomologyClass term = sum;
  for (int n = 1; n <= ring_.top; ++n) {
    term = term * *this * make_rational(1, n);
    sum += term;
  }
  return sum;
}

CohomologyClass CohomologyClass::negate_generator() const {
  CohomologyClass out = *this;
  for (std::size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
  return out;
}

std::string CohomologyClass::str() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (is_zero(c)) continue;
    Rational mag = abs(c);
    if (s.empty()) s = sgn(c) < 0 ? "-" : "";
    else s += sgn(c) < 0 ? " - " : " + ";
    std::string coeff = to_string(mag);
    if (k == 0) {
      s += coeff;
      continue;
    }
    if (mag != 1) s += mag.get_den() == 1 ? coeff : "(" + coeff + ")";
    s += ring_.generator;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace diracbound
