#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "diracbound/exact/rational.hpp"
#include "diracbound/exact/sparse.hpp"
#include "diracbound/lie/weight.hpp"
#include "diracbound/spin/module_model.hpp"

namespace diracbound {

/// Gelfand-Tsetlin basis of the gl(N)-irreducible with highest weight `top`.
/// Weights are reported in su(N) coordinates w_j - w_N, j < N.
class GelfandTsetlinBasis {
 public:
  using Pattern = std::vector<int>;  // rows 1..N flattened, row k at offset k(k-1)/2
  using Column = std::vector<std::pair<std::size_t, Rational>>;

  explicit GelfandTsetlinBasis(std::vector<int> top);

  std::size_t n() const { return n_; }
  std::size_t size() const { return patterns_.size(); }
  const Pattern& pattern(std::size_t k) const { return patterns_[k]; }
  const Weight& weight(std::size_t k) const { return weights_[k]; }
  std::optional<std::size_t> index(const Pattern& p) const;
  /// Entry lambda_{row,i}, 1-based.
  int entry(std::size_t k, std::size_t row, std::size_t i) const {
    return patterns_[k][row * (row - 1) / 2 + i - 1];
  }
  /// Sum of row `row` (zero for row 0).
  long row_sum(std::size_t k, std::size_t row) const;
  /// E_{a,b} applied to basis vector k (a, b 1-based); adjacent and diagonal units are
  /// given by the explicit formulas, the others by commutators.
  const SparseVector<Rational>& unit_action(std::size_t a, std::size_t b, std::size_t k) const;

 private:
  Column raise(std::size_t row, std::size_t k) const;
  Column lower(std::size_t row, std::size_t k) const;

  std::size_t n_;
  std::vector<Pattern> patterns_;
  std::vector<Weight> weights_;
  std::map<Pattern, std::size_t> index_;
  mutable std::map<std::tuple<std::size_t, std::size_t, std::size_t>, SparseVector<Rational>> memo_;
  mutable std::recursive_mutex mutex_;
};

template <class F>
class GelfandTsetlinModel final : public ModuleModel<F> {
 public:
  explicit GelfandTsetlinModel(std::vector<int> top) : basis_(std::move(top)) {
    for (std::size_t k = 0; k < basis_.size(); ++k) spaces_[basis_.weight(k)].push_back(k);
  }
  std::size_t dimension() const override { return basis_.size(); }
  const Weight& weight(std::size_t k) const override { return basis_.weight(k); }
  const std::vector<std::size_t>& weight_space(const Weight& mu) const override {
    auto it = spaces_.find(mu);
    return it == spaces_.end() ? empty_ : it->second;
  }
  SparseVector<F> apply(const Matrix<F>& x, const SparseVector<F>& v) const override {
    SparseVector<F> out;
    for (std::size_t a = 0; a < x.rows(); ++a)
      for (std::size_t b = 0; b < x.cols(); ++b) {
        if (is_zero(x(a, b))) continue;
        for (const auto& [k, c] : v) {
          const F coef = x(a, b) * c;
          for (const auto& [t, r] : basis_.unit_action(a + 1, b + 1, k)) {
            auto [it, fresh] = out.try_emplace(t, coef * F(r));
            if (!fresh) {
              it->second += coef * F(r);
              if (is_zero(it->second)) out.erase(it);
            }
          }
        }
      }
    return out;
  }
  const GelfandTsetlinBasis& basis() const { return basis_; }

 private:
  GelfandTsetlinBasis basis_;
  std::map<Weight, std::vector<std::size_t>> spaces_;
  std::vector<std::size_t> empty_;
};

}  // namespace diracbound
