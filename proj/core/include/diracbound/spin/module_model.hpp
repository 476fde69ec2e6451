#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "diracbound/exact/sparse.hpp"
#include "diracbound/lie/weight.hpp"
#include "diracbound/spin/weight_module.hpp"

namespace diracbound {

/// An irreducible module in a weight basis, acted on by matrices of the defining representation.
template <class F>
class ModuleModel {
 public:
  virtual ~ModuleModel() = default;
  virtual std::size_t dimension() const = 0;
  virtual const Weight& weight(std::size_t k) const = 0;
  virtual const std::vector<std::size_t>& weight_space(const Weight& mu) const = 0;
  /// rho(x) v for x given in the defining representation.
  virtual SparseVector<F> apply(const Matrix<F>& x, const SparseVector<F>& v) const = 0;
};

template <class F>
class WeightModuleModel final : public ModuleModel<F> {
 public:
  explicit WeightModuleModel(std::shared_ptr<const WeightModule<F>> m) : m_(std::move(m)) {
    for (std::size_t k = 0; k < m_->dimension(); ++k) spaces_[m_->weight_of(k)].push_back(k);
  }
  std::size_t dimension() const override { return m_->dimension(); }
  const Weight& weight(std::size_t k) const override { return m_->weight_of(k); }
  const std::vector<std::size_t>& weight_space(const Weight& mu) const override {
    auto it = spaces_.find(mu);
    return it == spaces_.end() ? empty_ : it->second;
  }
  SparseVector<F> apply(const Matrix<F>& x, const SparseVector<F>& v) const override {
    return m_->apply(m_->algebra().decompose(x), v);
  }
  const WeightModule<F>& module() const { return *m_; }

 private:
  std::shared_ptr<const WeightModule<F>> m_;
  std::map<Weight, std::vector<std::size_t>> spaces_;
  std::vector<std::size_t> empty_;
};

}  // namespace diracbound
