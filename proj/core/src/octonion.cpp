#include "diracbound/berger/octonion.hpp"

#include <random>

namespace diracbound {

OctonionTable::OctonionTable() {
  for (std::size_t i = 0; i < 7; ++i) lines_.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
  for (std::size_t a = 0; a < 8; ++a) {
    table_[0][a] = {1, a};
    table_[a][0] = {1, a};
  }
  for (std::size_t a = 1; a < 8; ++a) table_[a][a] = {-1, 0};
  for (const auto& [i, j, k] : lines_) {
    const std::array<std::size_t, 3> cyc[3] = {{i, j, k}, {j, k, i}, {k, i, j}};
    for (const auto& [x, y, z] : cyc) {
      table_[x][y] = {1, z};
      table_[y][x] = {-1, z};
    }
  }
}

Matrix<Rational> OctonionTable::right_multiplication(std::size_t i) const {
  Matrix<Rational> m(8, 8);
  for (std::size_t s = 0; s < 8; ++s) {
    const Product& p = table_[s][i];
    m(p.index, s) = p.sign;
  }
  return m;
}

Matrix<Rational> OctonionTable::left_multiplication(std::size_t i) const {
  Matrix<Rational> m(8, 8);
  for (std::size_t s = 0; s < 8; ++s) {
    const Product& p = table_[i][s];
    m(p.index, s) = p.sign;
  }
  return m;
}

std::vector<std::string> OctonionTable::verify(std::uint64_t seed, std::size_t samples) const {
  std::vector<std::string> failures;
  for (std::size_t i = 1; i <= 7; ++i) {
    const Product& p = table_[i][i % 7 + 1];
    if (p.sign != 1 || p.index != (i + 2) % 7 + 1)
      failures.push_back("e" + std::to_string(i) + " e" + std::to_string(i % 7 + 1) + " != e" + std::to_string((i + 2) % 7 + 1));
  }
  auto basis = [](std::size_t a) {
    std::vector<Rational> v(8, Rational(0));
    v[a] = 1;
    return v;
  };
  auto check = [&](const std::vector<Rational>& x, const std::vector<Rational>& y, const std::string& label) {
    // left and right alternative laws; |xy|^2 = |x|^2 |y|^2
    if (multiply(multiply(x, x), y) != multiply(x, multiply(x, y))) failures.push_back("left alternativity fails on " + label);
    if (multiply(multiply(y, x), x) != multiply(y, multiply(x, x))) failures.push_back("right alternativity fails on " + label);
    if (octonion_norm2(multiply(x, y)) != octonion_norm2(x) * octonion_norm2(y))
      failures.push_back("norm is not multiplicative on " + label);
  };
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) check(basis(a), basis(b), "(e" + std::to_string(a) + ", e" + std::to_string(b) + ")");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Rational> x(8), y(8);
    for (auto& v : x) v = dist(rng);
    for (auto& v : y) v = dist(rng);
    check(x, y, "sample " + std::to_string(s));
  }
  return failures;
}

}  // namespace diracbound
