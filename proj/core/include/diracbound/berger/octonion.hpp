#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "diracbound/exact/matrix.hpp"
#include "diracbound/exact/rational.hpp"

namespace diracbound {

/// Cayley multiplication on basis 1 = e_0, e_1..e_7 with e_i e_{i+1} = e_{i+3} (indices mod 7).
class OctonionTable {
 public:
  struct Product {
    int sign = 0;
    std::size_t index = 0;
  };

  OctonionTable();

  /// The seven quaternionic lines (i, i+1, i+3), 1-based.
  const std::vector<std::array<std::size_t, 3>>& lines() const { return lines_; }
  Product product(std::size_t a, std::size_t b) const { return table_[a][b]; }

  template <class F>
  std::vector<F> multiply(const std::vector<F>& x, const std::vector<F>& y) const {
    std::vector<F> z(8, F(0));
    for (std::size_t a = 0; a < 8; ++a) {
      if (is_zero(x[a])) continue;
      for (std::size_t b = 0; b < 8; ++b) {
        if (is_zero(y[b])) continue;
        const Product& p = table_[a][b];
        F t = x[a] * y[b];
        if (p.sign > 0) z[p.index] += t;
        else z[p.index] -= t;
      }
    }
    return z;
  }

  /// Matrix of s -> s * e_i (right) or s -> e_i * s (left).
  Matrix<Rational> right_multiplication(std::size_t i) const;
  Matrix<Rational> left_multiplication(std::size_t i) const;

  /// Table rule, alternativity and norm multiplicativity on basis triples and seeded samples.
  /// Returns the failures found (empty on success).
  std::vector<std::string> verify(std::uint64_t seed = 7, std::size_t samples = 64) const;

 private:
  std::vector<std::array<std::size_t, 3>> lines_;
  std::array<std::array<Product, 8>, 8> table_{};
};

template <class F>
F octonion_norm2(const std::vector<F>& x) {
  F s(0);
  for (const auto& v : x) s += v * v;
  return s;
}

}  // namespace diracbound
