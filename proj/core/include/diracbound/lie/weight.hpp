#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "diracbound/exact/rational.hpp"

namespace diracbound {

/// Vector in epsilon-coordinates with entries in (1/2)Z, stored as doubled integers.
class Weight {
 public:
  static constexpr long long kDenominator = 2;

  Weight() = default;
  explicit Weight(std::size_t n) : twice_(n, 0) {}
  /// Doubled coordinates: Weight::doubled({3, 1}) is (3/2, 1/2).
  static Weight doubled(std::vector<long long> twice);
  static Weight integral(std::initializer_list<long long> coords);
  static Weight integral(const std::vector<long long>& coords);
  /// Throws DomainError if an entry is not in (1/2)Z.
  static Weight from_rationals(const std::vector<Rational>& coords);
  /// Parses "(3/2, 1/2)" or "3/2,1/2".
  static Weight parse(const std::string& text);

  std::size_t size() const { return twice_.size(); }
  long long twice(std::size_t i) const { return twice_[i]; }
  long long& twice(std::size_t i) { return twice_[i]; }
  Rational operator[](std::size_t i) const { return make_rational(static_cast<long>(twice_[i]), 2); }
  const std::vector<long long>& twice_coords() const { return twice_; }
  std::vector<Rational> rationals() const;
  bool is_zero() const;
  /// All coordinates integral (as opposed to half-integral spin weights).
  bool is_integral() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(long long k, Weight a) {
    for (auto& x : a.twice_) x *= k;
    return a;
  }
  Weight operator-() const { return -1 * *this; }

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic order on coordinates.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return a.twice_ <=> b.twice_;
  }

  std::string str() const;

 private:
  std::vector<long long> twice_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w.twice_coords()) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

}  // namespace diracbound
