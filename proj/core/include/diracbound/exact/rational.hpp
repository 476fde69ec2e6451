#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace diracbound {

using Rational = mpq_class;

/// Parses "p", "p/q", or a finite decimal such as "-0.45" exactly.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" for integers).
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational conj(const Rational& q) { return q; }
inline std::complex<double> to_complex(const Rational& q) { return {q.get_d(), 0.0}; }
inline int sign(const Rational& q) { return sgn(q); }

/// Exact square root of a nonnegative rational if it is a perfect square.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace diracbound
