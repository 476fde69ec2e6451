#include "diracbound/spin/gelfand_tsetlin.hpp"

#include <functional>

#include "diracbound/errors.hpp"

namespace diracbound {

namespace {

std::size_t offset(std::size_t row) { return row * (row - 1) / 2; }

}  // namespace

GelfandTsetlinBasis::GelfandTsetlinBasis(std::vector<int> top) : n_(top.size()) {
  if (n_ == 0) throw DomainError("empty Gelfand-Tsetlin top row");
  for (std::size_t i = 1; i < n_; ++i)
    if (top[i] > top[i - 1]) throw DomainError("Gelfand-Tsetlin top row is not dominant");
  Pattern p(n_ * (n_ + 1) / 2, 0);
  for (std::size_t i = 0; i < n_; ++i) p[offset(n_) + i] = top[i];
  // fill rows downwards; row r entries interlace row r+1
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t row, std::size_t i) {
    if (row == 0) {
      patterns_.push_back(p);
      return;
    }
    if (i > row) {
      fill(row - 1, 1);
      return;
    }
    const int hi = p[offset(row + 1) + i - 1];
    const int lo = p[offset(row + 1) + i];
    for (int v = lo; v <= hi; ++v) {
      p[offset(row) + i - 1] = v;
      fill(row, i + 1);
    }
  };
  fill(n_ - 1, 1);
  for (std::size_t k = 0; k < patterns_.size(); ++k) {
    index_.emplace(patterns_[k], k);
    std::vector<long long> twice(n_ - 1);
    const long mn = row_sum(k, n_) - row_sum(k, n_ - 1);
    for (std::size_t j = 1; j < n_; ++j) twice[j - 1] = 2 * ((row_sum(k, j) - row_sum(k, j - 1)) - mn);
    weights_.push_back(Weight::doubled(std::move(twice)));
  }
}

std::optional<std::size_t> GelfandTsetlinBasis::index(const Pattern& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long GelfandTsetlinBasis::row_sum(std::size_t k, std::size_t row) const {
  long s = 0;
  for (std::size_t i = 1; i <= row; ++i) s += entry(k, row, i);
  return s;
}

// l_{ri} = lambda_{ri} - i + 1
GelfandTsetlinBasis::Column GelfandTsetlinBasis::raise(std::size_t row, std::size_t k) const {
  Column out;
  auto l = [&](std::size_t r, std::size_t i) { return long(entry(k, r, i)) - long(i) + 1; };
  for (std::size_t i = 1; i <= row; ++i) {
    Pattern q = patterns_[k];
    q[offset(row) + i - 1] += 1;
    auto t = index(q);
    if (!t) continue;
    Rational num = 1;
    for (std::size_t j = 1; j <= row + 1; ++j) num *= Rational(l(row, i) - l(row + 1, j));
    Rational den = 1;
    for (std::size_t j = 1; j <= row; ++j)
      if (j != i) den *= Rational(l(row, i) - l(row, j));
    Rational c = -num / den;
    if (!is_zero(c)) out.emplace_back(*t, c);
  }
  return out;
}

GelfandTsetlinBasis::Column GelfandTsetlinBasis::lower(std::size_t row, std::size_t k) const {
  Column out;
  auto l = [&](std::size_t r, std::size_t i) { return long(entry(k, r, i)) - long(i) + 1; };
  for (std::size_t i = 1; i <= row; ++i) {
    Pattern q = patterns_[k];
    q[offset(row) + i - 1] -= 1;
    auto t = index(q);
    if (!t) continue;
    Rational num = 1;
    for (std::size_t j = 1; j + 1 <= row; ++j) num *= Rational(l(row, i) - l(row - 1, j));
    Rational den = 1;
    for (std::size_t j = 1; j <= row; ++j)
      if (j != i) den *= Rational(l(row, i) - l(row, j));
    Rational c = num / den;
    if (!is_zero(c)) out.emplace_back(*t, c);
  }
  return out;
}

const SparseVector<Rational>& GelfandTsetlinBasis::unit_action(std::size_t a, std::size_t b, std::size_t k) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) throw DomainError("matrix unit outside gl(N)");
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  const auto key = std::make_tuple(a, b, k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  SparseVector<Rational> v;
  if (a == b) {
    Rational d(row_sum(k, a) - row_sum(k, a - 1));
    if (!is_zero(d)) v.emplace(k, d);
  } else if (b == a + 1) {
    for (auto& [t, c] : raise(a, k)) v.emplace(t, c);
  } else if (a == b + 1) {
    for (auto& [t, c] : lower(b, k)) v.emplace(t, c);
  } else {
    // [E_{a,m}, E_{m,b}] = E_{a,b} with m adjacent to a on the way to b
    const std::size_t m = a < b ? a + 1 : a - 1;
    auto apply = [&](std::size_t x, std::size_t y, const SparseVector<Rational>& in) {
      SparseVector<Rational> out;
      for (const auto& [s, c] : in) axpy(out, c, unit_action(x, y, s));
      return out;
    };
    const SparseVector<Rational> e{{k, Rational(1)}};
    v = apply(a, m, apply(m, b, e));
    axpy(v, Rational(-1), apply(m, b, apply(a, m, e)));
  }
  return memo_.emplace(key, std::move(v)).first->second;
}

}  // namespace diracbound
