#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diracbound/errors.hpp"
#include "diracbound/exact/matrix.hpp"
#include "diracbound/exact/sparse.hpp"
#include "diracbound/lie/representation.hpp"
#include "diracbound/spin/lie_algebra.hpp"

namespace diracbound {

/// A finite-dimensional module in a weight basis: per-weight Gram matrices and, for each
/// root alpha, the blocks of rho(E_alpha) between weight spaces.
template <class F>
class WeightModule {
 public:
  struct Space {
    Weight weight;
    std::size_t offset = 0;
    std::size_t dim = 0;
    Matrix<F> gram;
  };

  WeightModule() = default;
  WeightModule(const MatrixLieAlgebra<F>* algebra, std::vector<Space> spaces,
               std::vector<std::vector<Matrix<F>>> blocks)
      : algebra_(algebra), spaces_(std::move(spaces)), blocks_(std::move(blocks)) {
    std::size_t off = 0;
    for (std::size_t s = 0; s < spaces_.size(); ++s) {
      spaces_[s].offset = off;
      off += spaces_[s].dim;
      index_.emplace(spaces_[s].weight, s);
      for (std::size_t k = 0; k < spaces_[s].dim; ++k) space_of_.push_back(s);
    }
    dim_ = off;
  }

  /// Module given by dense matrices x -> rho(x); weight basis computed exactly.
  template <class Rep>
  static WeightModule from_dense(const MatrixLieAlgebra<F>& algebra, std::size_t dim, const Rep& rep) {
    std::vector<Matrix<F>> cartan;
    for (const auto& t : algebra.cartan()) cartan.push_back(rep(t));
    WeightDecomposition<F> wd = joint_weight_decomposition(cartan, dim);
    const Matrix<F>& s = wd.basis;
    const Matrix<F> s_inv = inverse(s);
    const Matrix<F> gram_full = s.adjoint() * s;
    std::vector<Space> spaces;
    for (std::size_t k = 0; k < wd.weights.size();) {
      std::size_t e = k;
      while (e < wd.weights.size() && wd.weights[e] == wd.weights[k]) ++e;
      spaces.push_back({wd.weights[k], k, e - k, gram_full.block(k, k, e - k, e - k)});
      k = e;
    }
    std::vector<std::vector<Matrix<F>>> blocks(algebra.roots().size(), std::vector<Matrix<F>>(spaces.size()));
    std::map<Weight, std::size_t> index;
    for (std::size_t sp = 0; sp < spaces.size(); ++sp) index.emplace(spaces[sp].weight, sp);
    for (std::size_t r = 0; r < algebra.roots().size(); ++r) {
      const Matrix<F> e = s_inv * rep(algebra.root_vector(r)) * s;
      for (std::size_t sp = 0; sp < spaces.size(); ++sp) {
        auto it = index.find(spaces[sp].weight + algebra.roots()[r]);
        if (it == index.end()) continue;
        const Space& tgt = spaces[it->second];
        blocks[r][sp] = e.block(tgt.offset, spaces[sp].offset, tgt.dim, spaces[sp].dim);
      }
    }
    return WeightModule(&algebra, std::move(spaces), std::move(blocks));
  }

  const MatrixLieAlgebra<F>& algebra() const { return *algebra_; }
  std::size_t dimension() const { return dim_; }
  const std::vector<Space>& spaces() const { return spaces_; }
  std::optional<std::size_t> space_index(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t space_of(std::size_t basis_index) const { return space_of_[basis_index]; }
  const Weight& weight_of(std::size_t basis_index) const { return spaces_[space_of_[basis_index]].weight; }
  /// Block of rho(E_alpha) from space s to space of weight + alpha (empty if absent).
  const Matrix<F>& block(std::size_t root, std::size_t space) const { return blocks_[root][space]; }

  WeightMultiset character() const {
    WeightMultiset ch;
    for (const auto& s : spaces_) ch[s.weight] += static_cast<long long>(s.dim);
    return ch;
  }

  /// rho(x) applied to a sparse vector; x given by its Cartan-Weyl coefficients.
  SparseVector<F> apply(const typename MatrixLieAlgebra<F>::CartanWeyl& x, const SparseVector<F>& v) const {
    SparseVector<F> out;
    const F i = FieldTraits<F>::i();
    for (const auto& [idx, val] : v) {
      const std::size_t s = space_of_[idx];
      const Space& sp = spaces_[s];
      const std::size_t local = idx - sp.offset;
      F h(0);
      for (std::size_t j = 0; j < x.cartan.size(); ++j)
        if (!is_zero(x.cartan[j]) && sp.weight.twice(j) != 0) h += x.cartan[j] * F(sp.weight[j]);
      if (!is_zero(h)) out[idx] += i * h * val;
      for (std::size_t r = 0; r < x.roots.size(); ++r) {
        if (is_zero(x.roots[r])) continue;
        const Matrix<F>& b = blocks_[r][s];
        if (b.empty()) continue;
        const std::size_t toff = spaces_[*space_index(sp.weight + algebra_->roots()[r])].offset;
        const F coef = x.roots[r] * val;
        for (std::size_t row = 0; row < b.rows(); ++row)
          if (!is_zero(b(row, local))) out[toff + row] += coef * b(row, local);
      }
    }
    for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
  }

  /// Full matrix of rho(x).
  Matrix<F> dense(const Matrix<F>& x) const {
    auto cw = algebra_->decompose(x);
    Matrix<F> m(dim_, dim_);
    for (std::size_t c = 0; c < dim_; ++c)
      for (const auto& [r, val] : apply(cw, SparseVector<F>{{c, F(1)}})) m(r, c) = val;
    return m;
  }

  /// Block-diagonal Gram matrix of the invariant Hermitian form.
  Matrix<F> gram() const {
    Matrix<F> g(dim_, dim_);
    for (const auto& s : spaces_) g.set_block(s.offset, s.offset, s.gram);
    return g;
  }

 private:
  const MatrixLieAlgebra<F>* algebra_ = nullptr;
  std::vector<Space> spaces_;
  std::vector<std::vector<Matrix<F>>> blocks_;
  std::map<Weight, std::size_t> index_;
  std::vector<std::size_t> space_of_;
  std::size_t dim_ = 0;
};

namespace detail {

/// Weight space of a tensor product V1 (x) V2: pieces V1[s1] (x) V2[s2] laid out consecutively,
/// each piece stored row-major as a dim1 x dim2 coefficient matrix.
struct TensorPiece {
  std::size_t s1;
  std::size_t s2;
  std::size_t offset;
  std::size_t d1;
  std::size_t d2;
};

template <class F>
class TensorSource {
 public:
  TensorSource(const WeightModule<F>& a, const WeightModule<F>& b) : a_(a), b_(b) {}

  const std::vector<TensorPiece>& layout(const Weight& mu) {
    auto it = layouts_.find(mu);
    if (it != layouts_.end()) return it->second.pieces;
    Layout l;
    std::size_t off = 0;
    for (std::size_t s1 = 0; s1 < a_.spaces().size(); ++s1) {
      auto s2 = b_.space_index(mu - a_.spaces()[s1].weight);
      if (!s2) continue;
      TensorPiece p{s1, *s2, off, a_.spaces()[s1].dim, b_.spaces()[*s2].dim};
      off += p.d1 * p.d2;
      l.index.emplace(s1, l.pieces.size());
      l.pieces.push_back(p);
    }
    l.dim = off;
    return layouts_.emplace(mu, std::move(l)).first->second.pieces;
  }
  std::size_t dim(const Weight& mu) {
    layout(mu);
    return layouts_.at(mu).dim;
  }

  /// (E_alpha (x) 1 + 1 (x) E_alpha) on a vector of weight mu.
  std::vector<F> apply_root(std::size_t root, const Weight& alpha, const Weight& mu, const std::vector<F>& v) {
    const Weight target = mu + alpha;
    layout(target);
    const Layout& tl = layouts_.at(target);
    std::vector<F> out(tl.dim, F(0));
    const auto& pieces = layout(mu);
    F t;
    for (const auto& p : pieces) {
      // E (x) 1: block from a-space s1 to a-space of weight + alpha, same b-space
      const Matrix<F>& ba = a_.block(root, p.s1);
      if (!ba.empty()) {
        auto s1t = *a_.space_index(a_.spaces()[p.s1].weight + alpha);
        auto it = tl.index.find(s1t);
        if (it != tl.index.end()) {
          const TensorPiece& q = tl.pieces[it->second];
          for (std::size_t r = 0; r < ba.rows(); ++r)
            for (std::size_t k = 0; k < p.d1; ++k) {
              if (is_zero(ba(r, k))) continue;
              for (std::size_t c = 0; c < p.d2; ++c) {
                const F& x = v[p.offset + k * p.d2 + c];
                if (is_zero(x)) continue;
                t = ba(r, k);
                t *= x;
                out[q.offset + r * q.d2 + c] += t;
              }
            }
        }
      }
      // 1 (x) E: same a-space, b-space shifted
      const Matrix<F>& bb = b_.block(root, p.s2);
      if (!bb.empty()) {
        auto it = tl.index.find(p.s1);
        if (it != tl.index.end()) {
          const TensorPiece& q = tl.pieces[it->second];
          for (std::size_t k = 0; k < p.d1; ++k)
            for (std::size_t c = 0; c < p.d2; ++c) {
              const F& x = v[p.offset + k * p.d2 + c];
              if (is_zero(x)) continue;
              for (std::size_t r = 0; r < bb.rows(); ++r) {
                if (is_zero(bb(r, c))) continue;
                t = bb(r, c);
                t *= x;
                out[q.offset + k * q.d2 + r] += t;
              }
            }
        }
      }
    }
    return out;
  }

  /// <u, v> for the product form.
  F inner(const Weight& mu, const std::vector<F>& u, const std::vector<F>& v) {
    F s(0);
    for (const auto& p : layout(mu)) {
      const Matrix<F>& g1 = a_.spaces()[p.s1].gram;
      const Matrix<F>& g2 = b_.spaces()[p.s2].gram;
      for (std::size_t i = 0; i < p.d1; ++i)
        for (std::size_t j = 0; j < p.d2; ++j) {
          const F& ui = u[p.offset + i * p.d2 + j];
          if (is_zero(ui)) continue;
          const F cu = conj(ui);
          for (std::size_t k = 0; k < p.d1; ++k) {
            if (is_zero(g1(i, k))) continue;
            for (std::size_t l = 0; l < p.d2; ++l) {
              const F& vk = v[p.offset + k * p.d2 + l];
              if (is_zero(vk) || is_zero(g2(j, l))) continue;
              s += cu * g1(i, k) * vk * g2(j, l);
            }
          }
        }
    }
    return s;
  }

  /// Vector of weight a.hw + b.hw given by the tensor of the two top vectors.
  std::vector<F> top_vector(const Weight& hw_a, const Weight& hw_b) {
    const Weight mu = hw_a + hw_b;
    std::vector<F> v(dim(mu), F(0));
    for (const auto& p : layout(mu))
      if (a_.spaces()[p.s1].weight == hw_a && b_.spaces()[p.s2].weight == hw_b) v[p.offset] = F(1);
    return v;
  }

 private:
  struct Layout {
    std::vector<TensorPiece> pieces;
    std::map<std::size_t, std::size_t> index;  // s1 -> piece
    std::size_t dim = 0;
  };
  const WeightModule<F>& a_;
  const WeightModule<F>& b_;
  std::map<Weight, Layout> layouts_;
};

/// Single module viewed as a source for component extraction.
template <class F>
class ModuleSource {
 public:
  explicit ModuleSource(const WeightModule<F>& m) : m_(m) {}
  std::size_t dim(const Weight& mu) {
    auto s = m_.space_index(mu);
    return s ? m_.spaces()[*s].dim : 0;
  }
  std::vector<F> apply_root(std::size_t root, const Weight& alpha, const Weight& mu, const std::vector<F>& v) {
    std::vector<F> out(dim(mu + alpha), F(0));
    auto s = m_.space_index(mu);
    if (!s || out.empty()) return out;
    const Matrix<F>& b = m_.block(root, *s);
    if (b.empty()) return out;
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (!is_zero(b(r, c)) && !is_zero(v[c])) out[r] += b(r, c) * v[c];
    return out;
  }
  F inner(const Weight& mu, const std::vector<F>& u, const std::vector<F>& v) {
    const Matrix<F>& g = m_.spaces()[*m_.space_index(mu)].gram;
    F s(0);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(u[i]) && !is_zero(v[k]) && !is_zero(g(i, k))) s += conj(u[i]) * g(i, k) * v[k];
    return s;
  }

 private:
  const WeightModule<F>& m_;
};

/// The irreducible submodule generated by a highest weight vector `top` of weight gamma.
/// Weight spaces are spanned by images of lowering operators; dimensions are checked
/// against the Freudenthal multiplicities.
template <class F, class Source>
WeightModule<F> extract_component(const MatrixLieAlgebra<F>& algebra, Source& src, const Weight& gamma,
                                  const std::vector<F>& top) {
  const RootSystem& rs = algebra.root_system();
  const WeightMultiset mults = weight_multiplicities(gamma, rs);
  // order weights by depth below gamma
  std::vector<std::pair<long long, Weight>> order;
  for (const auto& [w, m] : mults) {
    long long depth = 0;
    for (const auto& a : rs.positive_roots()) depth += rs.coroot_pairing(gamma - w, a);
    order.emplace_back(depth, w);
  }
  std::sort(order.begin(), order.end());

  struct Basis {
    std::vector<std::vector<F>> rows;  // reduced row echelon
    std::vector<std::size_t> pivots;
  };
  std::map<Weight, Basis> bases;
  const auto& simple = rs.simple_roots();
  for (const auto& [depth, mu] : order) {
    const std::size_t d = src.dim(mu);
    std::vector<std::vector<F>> candidates;
    if (depth == 0) {
      candidates.push_back(top);
    } else {
      for (const auto& a : simple) {
        auto it = bases.find(mu + a);
        if (it == bases.end()) continue;
        const std::size_t r = algebra.root_index(-a);
        for (const auto& v : it->second.rows) candidates.push_back(src.apply_root(r, -a, mu + a, v));
      }
    }
    Matrix<F> m(candidates.size(), d);
    for (std::size_t i = 0; i < candidates.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = candidates[i][j];
    Echelon<F> e = rref(std::move(m));
    const auto expected = static_cast<std::size_t>(mults.at(mu));
    if (e.pivots.size() != expected)
      throw ConsistencyError("generated weight space " + mu.str() + " has dimension " +
                             std::to_string(e.pivots.size()) + ", expected " + std::to_string(expected));
    Basis b;
    b.pivots = e.pivots;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      std::vector<F> row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = e.reduced(i, j);
      b.rows.push_back(std::move(row));
    }
    bases.emplace(mu, std::move(b));
  }

  std::vector<typename WeightModule<F>::Space> spaces;
  std::map<Weight, std::size_t> index;
  for (auto it = bases.rbegin(); it != bases.rend(); ++it) {
    const Basis& b = it->second;
    const std::size_t n = b.rows.size();
    Matrix<F> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = src.inner(it->first, b.rows[i], b.rows[j]);
    index.emplace(it->first, spaces.size());
    spaces.push_back({it->first, 0, n, std::move(g)});
  }
  std::vector<std::vector<Matrix<F>>> blocks(algebra.roots().size(), std::vector<Matrix<F>>(spaces.size()));
  for (std::size_t r = 0; r < algebra.roots().size(); ++r) {
    const Weight& alpha = algebra.roots()[r];
    for (std::size_t s = 0; s < spaces.size(); ++s) {
      const Weight& mu = spaces[s].weight;
      auto tgt = bases.find(mu + alpha);
      if (tgt == bases.end()) continue;
      const Basis& from = bases.at(mu);
      const Basis& to = tgt->second;
      Matrix<F> blk(to.rows.size(), from.rows.size());
      for (std::size_t c = 0; c < from.rows.size(); ++c) {
        std::vector<F> img = src.apply_root(r, alpha, mu, from.rows[c]);
        std::vector<F> check(img.size(), F(0));
        for (std::size_t k = 0; k < to.rows.size(); ++k) {
          const F coef = img[to.pivots[k]];
          blk(k, c) = coef;
          if (is_zero(coef)) continue;
          for (std::size_t j = 0; j < check.size(); ++j)
            if (!is_zero(to.rows[k][j])) check[j] += coef * to.rows[k][j];
        }
        if (check != img) throw ConsistencyError("generated subspace is not invariant under " + alpha.str());
      }
      blocks[r][s] = std::move(blk);
    }
  }
  return WeightModule<F>(&algebra, std::move(spaces), std::move(blocks));
}

}  // namespace detail

/// Irreducible modules V^gamma of a matrix Lie algebra, built recursively as Cartan
/// components of V^{gamma - omega} (x) V^{omega} from fundamental seeds.
template <class F>
class HighestWeightModules {
 public:
  using DenseRep = std::function<Matrix<F>(const Matrix<F>&)>;
  struct Seed {
    Weight highest_weight;
    std::size_t dimension;
    DenseRep rep;
  };

  HighestWeightModules(const MatrixLieAlgebra<F>& algebra, std::vector<Seed> seeds)
      : algebra_(algebra), seeds_(std::move(seeds)) {
    fundamentals_ = algebra_.root_system().fundamental_weights();
  }

  const MatrixLieAlgebra<F>& algebra() const { return algebra_; }

  std::shared_ptr<const WeightModule<F>> get(const Weight& gamma) {
    const RootSystem& rs = algebra_.root_system();
    require_dominant(rs, gamma);
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (auto it = cache_.find(gamma); it != cache_.end()) return it->second;
    std::shared_ptr<const WeightModule<F>> result;
    if (gamma.is_zero()) {
      result = std::make_shared<WeightModule<F>>(trivial());
    } else if (auto s = seed_for(gamma)) {
      result = std::make_shared<WeightModule<F>>(build_seed(*s));
    } else {
      // peel off the fundamental weight whose module is smallest
      std::optional<Weight> best;
      std::uint64_t best_dim = 0;
      for (const auto& w : fundamentals_) {
        Weight rest = gamma - w;
        if (!rs.is_dominant(rest) || !seed_for(w)) continue;
        std::uint64_t d = rs.dimension(w);
        if (!best || d < best_dim) {
          best = w;
          best_dim = d;
        }
      }
      if (!best) throw UnsupportedError("no seed module available to build " + gamma.str());
      auto left = get(gamma - *best);
      auto right = get(*best);
      detail::TensorSource<F> src(*left, *right);
      std::vector<F> top = src.top_vector(gamma - *best, *best);
      result = std::make_shared<WeightModule<F>>(detail::extract_component(algebra_, src, gamma, top));
    }
    if (result->dimension() != rs.dimension(gamma))
      throw ConsistencyError("module " + gamma.str() + " has wrong dimension");
    cache_.emplace(gamma, result);
    return result;
  }

 private:
  WeightModule<F> trivial() const {
    const std::size_t r = algebra_.cartan().size();
    std::vector<typename WeightModule<F>::Space> spaces{{Weight(r), 0, 1, Matrix<F>::identity(1)}};
    std::vector<std::vector<Matrix<F>>> blocks(algebra_.roots().size(), std::vector<Matrix<F>>(1));
    return WeightModule<F>(&algebra_, std::move(spaces), std::move(blocks));
  }

  std::optional<std::size_t> seed_for(const Weight& w) const {
    for (std::size_t k = 0; k < seeds_.size(); ++k)
      if (seeds_[k].highest_weight == w) return k;
    return std::nullopt;
  }

  WeightModule<F> build_seed(std::size_t k) {
    const Seed& s = seeds_[k];
    WeightModule<F> full = WeightModule<F>::from_dense(algebra_, s.dimension, s.rep);
    auto top = full.space_index(s.highest_weight);
    if (!top || full.spaces()[*top].dim != 1) throw ConsistencyError("seed lacks a unique top vector " + s.highest_weight.str());
    if (full.dimension() == algebra_.root_system().dimension(s.highest_weight)) return full;
    detail::ModuleSource<F> src(full);
    std::vector<F> v(1, F(1));
    return detail::extract_component(algebra_, src, s.highest_weight, v);
  }

  const MatrixLieAlgebra<F>& algebra_;
  std::vector<Seed> seeds_;
  std::vector<Weight> fundamentals_;
  std::map<Weight, std::shared_ptr<const WeightModule<F>>> cache_;
  std::recursive_mutex mutex_;
};

/// Action of a defining-representation matrix on the exterior power Lambda^k.
template <class F>
Matrix<F> exterior_power_action(const Matrix<F>& x, std::size_t k) {
  const std::size_t n = x.rows();
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      subsets.push_back(cur);
      return;
    }
    for (std::size_t a = start; a < n; ++a) {
      cur.push_back(a);
      rec(a + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index.emplace(subsets[i], i);
  Matrix<F> m(subsets.size(), subsets.size());
  for (std::size_t col = 0; col < subsets.size(); ++col) {
    const auto& s = subsets[col];
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t r = 0; r < n; ++r) {
        if (is_zero(x(r, s[p]))) continue;
        std::vector<std::size_t> t = s;
        t[p] = r;
        // sort with sign; repeated index kills the term
        int sign = 1;
        bool repeated = false;
        for (std::size_t i = 0; i < k && !repeated; ++i)
          for (std::size_t j = 0; j + 1 < k - i; ++j) {
            if (t[j] == t[j + 1]) {
              repeated = true;
              break;
            }
            if (t[j] > t[j + 1]) {
              std::swap(t[j], t[j + 1]);
              sign = -sign;
            }
          }
        if (repeated) continue;
        for (std::size_t j = 0; j + 1 < k; ++j)
          if (t[j] == t[j + 1]) repeated = true;
        if (repeated) continue;
        m(index.at(t), col) += sign == 1 ? x(r, s[p]) : -x(r, s[p]);
      }
  }
  return m;
}

}  // namespace diracbound
