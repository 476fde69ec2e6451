#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <ostream>
#include <string>

#include "diracbound/errors.hpp"
#include "diracbound/exact/rational.hpp"

namespace diracbound {

/// Elements a + b*sqrt(D) of a quadratic extension of Base.
/// Nesting gives towers, e.g. QuadraticExtension<QSqrt5, -1> = Q(sqrt5, i).
template <class Base, long D>
class QuadraticExtension {
 public:
  using base_type = Base;
  static constexpr long radicand = D;

  QuadraticExtension() : a_(0), b_(0) {}
  QuadraticExtension(const Base& a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
  QuadraticExtension(const Base& a, const Base& b) : a_(a), b_(b) {}
  template <class T>
    requires(std::constructible_from<Base, const T&> && !std::same_as<T, Base> &&
             !std::same_as<T, QuadraticExtension>)
  QuadraticExtension(const T& v) : a_(Base(v)), b_(0) {}  // NOLINT(google-explicit-constructor)

  /// sqrt(D) itself.
  static QuadraticExtension root() { return {Base(0), Base(1)}; }

  const Base& a() const { return a_; }
  const Base& b() const { return b_; }

  QuadraticExtension& operator+=(const QuadraticExtension& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadraticExtension& operator-=(const QuadraticExtension& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadraticExtension& operator*=(const QuadraticExtension& o) {
    Base na = a_ * o.a_;
    Base t = b_ * o.b_;
    na += Base(D) * t;
    Base nb = a_ * o.b_;
    Base u = b_ * o.a_;
    nb += u;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  QuadraticExtension& operator/=(const QuadraticExtension& o) { return *this *= o.inverse(); }

  friend QuadraticExtension operator+(QuadraticExtension x, const QuadraticExtension& y) { return x += y; }
  friend QuadraticExtension operator-(QuadraticExtension x, const QuadraticExtension& y) { return x -= y; }
  friend QuadraticExtension operator*(QuadraticExtension x, const QuadraticExtension& y) { return x *= y; }
  friend QuadraticExtension operator/(QuadraticExtension x, const QuadraticExtension& y) { return x /= y; }
  QuadraticExtension operator-() const { return {Base(-a_), Base(-b_)}; }

  friend bool operator==(const QuadraticExtension& x, const QuadraticExtension& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadraticExtension& x, const QuadraticExtension& y) { return !(x == y); }

  /// Norm to Base: a^2 - D b^2.
  Base norm() const {
    Base n = a_ * a_;
    Base t = b_ * b_;
    n -= Base(D) * t;
    return n;
  }
  /// a - b sqrt(D).
  QuadraticExtension galois() const { return {a_, Base(-b_)}; }
  QuadraticExtension inverse() const {
    Base n = norm();
    if (is_zero(n)) throw DomainError("division by zero in quadratic extension");
    Base inv = Base(1) / n;
    return {Base(a_ * inv), Base(-b_ * inv)};
  }

  std::string str() const;

 private:
  Base a_;
  Base b_;
};

template <class Base, long D>
bool is_zero(const QuadraticExtension<Base, D>& x) {
  return is_zero(x.a()) && is_zero(x.b());
}

/// Complex conjugation for the embedding sqrt(D) > 0 (D > 0) or sqrt(D) = i sqrt(-D) (D < 0).
template <class Base, long D>
QuadraticExtension<Base, D> conj(const QuadraticExtension<Base, D>& x) {
  if constexpr (D < 0) {
    return {conj(x.a()), Base(-conj(x.b()))};
  } else {
    return {conj(x.a()), conj(x.b())};
  }
}

template <class Base, long D>
std::complex<double> to_complex(const QuadraticExtension<Base, D>& x) {
  if constexpr (D < 0) {
    return to_complex(x.a()) + std::complex<double>(0.0, std::sqrt(double(-D))) * to_complex(x.b());
  } else {
    return to_complex(x.a()) + std::sqrt(double(D)) * to_complex(x.b());
  }
}

/// Sign of a real element (D > 0, totally ordered under sqrt(D) > 0).
template <class Base, long D>
  requires(D > 0)
int sign(const QuadraticExtension<Base, D>& x) {
  int sa = sign(x.a());
  int sb = sign(x.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with D b^2
  Base a2 = x.a() * x.a();
  Base db2 = Base(D) * x.b() * x.b();
  if (a2 == db2) return 0;
  return a2 > db2 ? sa : sb;
}

template <class Base, long D>
  requires(D > 0)
bool operator<(const QuadraticExtension<Base, D>& x, const QuadraticExtension<Base, D>& y) {
  return sign(y - x) > 0;
}
template <class Base, long D>
  requires(D > 0)
bool operator>(const QuadraticExtension<Base, D>& x, const QuadraticExtension<Base, D>& y) {
  return y < x;
}
template <class Base, long D>
  requires(D > 0)
bool operator<=(const QuadraticExtension<Base, D>& x, const QuadraticExtension<Base, D>& y) {
  return !(y < x);
}
template <class Base, long D>
  requires(D > 0)
bool operator>=(const QuadraticExtension<Base, D>& x, const QuadraticExtension<Base, D>& y) {
  return !(x < y);
}

inline std::string scalar_string(const Rational& q) { return to_string(q); }

template <class Base, long D>
std::string scalar_string(const QuadraticExtension<Base, D>& x) {
  return x.str();
}

template <class Base, long D>
std::string QuadraticExtension<Base, D>::str() const {
  const std::string unit = D == -1 ? "i" : "sqrt" + std::to_string(D);
  if (is_zero(b_)) return scalar_string(a_);
  std::string bpart = scalar_string(b_);
  if constexpr (std::same_as<Base, Rational>) {
    if (b_ == 1) bpart.clear();
    else if (b_ == -1) bpart = "-";
    else bpart += "*";
  } else {
    bpart = "(" + bpart + ")*";
  }
  if (is_zero(a_)) return bpart + unit;
  std::string s = scalar_string(a_);
  if (!bpart.empty() && bpart[0] == '-') return s + bpart + unit;
  return s + "+" + bpart + unit;
}

template <class Base, long D>
std::ostream& operator<<(std::ostream& os, const QuadraticExtension<Base, D>& x) {
  return os << x.str();
}

using GaussianRational = QuadraticExtension<Rational, -1>;
using QSqrt5 = QuadraticExtension<Rational, 5>;
using QSqrt5i = QuadraticExtension<QSqrt5, -1>;

/// Field-generic helpers used by the templated linear algebra.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool has_imaginary_unit = false;
  static std::string name() { return "Q"; }
};
template <>
struct FieldTraits<GaussianRational> {
  static constexpr bool has_imaginary_unit = true;
  static GaussianRational i() { return GaussianRational::root(); }
  static std::string name() { return "Q(i)"; }
};
template <>
struct FieldTraits<QSqrt5> {
  static constexpr bool has_imaginary_unit = false;
  static QSqrt5 sqrt5() { return QSqrt5::root(); }
  static std::string name() { return "Q(sqrt5)"; }
};
template <>
struct FieldTraits<QSqrt5i> {
  static constexpr bool has_imaginary_unit = true;
  static QSqrt5i i() { return QSqrt5i::root(); }
  static QSqrt5i sqrt5() { return QSqrt5i(QSqrt5::root()); }
  static std::string name() { return "Q(sqrt5,i)"; }
};

/// Real part (in the base field) of a field element with an imaginary unit.
inline const Rational& real_part(const GaussianRational& x) { return x.a(); }
inline const QSqrt5& real_part(const QSqrt5i& x) { return x.a(); }
inline const Rational& real_part(const Rational& x) { return x; }
inline const QSqrt5& real_part(const QSqrt5& x) { return x; }

/// Exact square root in Q(sqrt5), if one exists.
bool qsqrt5_sqrt(const QSqrt5& x, QSqrt5& root);

}  // namespace diracbound
