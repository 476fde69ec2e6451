#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "diracbound/exact/matrix.hpp"

namespace diracbound {

template <class F>
using SparseVector = std::map<std::size_t, F>;

/// y += c * x, dropping cancelled entries.
template <class F>
void axpy(SparseVector<F>& y, const F& c, const SparseVector<F>& x) {
  if (is_zero(c)) return;
  for (const auto& [k, v] : x) {
    auto [it, fresh] = y.try_emplace(k, c * v);
    if (!fresh) {
      it->second += c * v;
      if (is_zero(it->second)) y.erase(it);
    }
  }
}

/// Incrementally maintained row echelon form of sparse rows; each stored row has a
/// leading coefficient 1 at its pivot and no entries in earlier pivot columns.
template <class F>
class SparseEchelon {
 public:
  /// Reduces `row` against the basis; returns true if it was independent (and adds it).
  bool insert(SparseVector<F> row) {
    reduce(row);
    if (row.empty()) return false;
    const std::size_t p = row.begin()->first;
    const F inv = F(1) / row.begin()->second;
    for (auto& [k, v] : row) v *= inv;
    // keep the basis fully reduced in the new pivot column
    for (auto& [q, r] : rows_) {
      auto it = r.find(p);
      if (it != r.end()) {
        const F c = -it->second;
        axpy(r, c, row);
      }
    }
    rows_.emplace(p, std::move(row));
    return true;
  }

  void reduce(SparseVector<F>& row) const {
    for (auto it = row.begin(); it != row.end();) {
      auto basis = rows_.find(it->first);
      if (basis == rows_.end()) {
        ++it;
        continue;
      }
      const F c = -it->second;
      const std::size_t key = it->first;
      axpy(row, c, basis->second);
      it = row.upper_bound(key);
    }
  }

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseVector<F>>& rows() const { return rows_; }

  /// Basis of the solution space of {x : row . x = 0 for all rows} in `n` unknowns,
  /// one vector per free column with a 1 there.
  std::vector<SparseVector<F>> nullspace(std::size_t n) const {
    std::vector<SparseVector<F>> out;
    for (std::size_t f = 0; f < n; ++f) {
      if (rows_.count(f)) continue;
      SparseVector<F> v{{f, F(1)}};
      for (const auto& [p, r] : rows_) {
        auto it = r.find(f);
        if (it != r.end()) v[p] = -it->second;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::map<std::size_t, SparseVector<F>> rows_;
};

template <class F>
std::vector<SparseVector<F>> sparse_nullspace(const std::vector<SparseVector<F>>& rows, std::size_t n) {
  SparseEchelon<F> e;
  for (const auto& r : rows) e.insert(r);
  return e.nullspace(n);
}

}  // namespace diracbound
