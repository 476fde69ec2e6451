#include "diracbound/spin/spin_geometry.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "diracbound/spin/gelfand_tsetlin.hpp"

namespace diracbound {

namespace {

using CF = ComplexRational;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Weight leading_ones(std::size_t coords, std::size_t k) {
  Weight w(coords);
  for (std::size_t i = 0; i < k; ++i) w.twice(i) = 2;
  return w;
}

Weight half_spin(std::size_t coords, bool last_negative) {
  Weight w(coords);
  for (std::size_t i = 0; i < coords; ++i) w.twice(i) = 1;
  if (last_negative) w.twice(coords - 1) = -1;
  return w;
}

/// Fundamental seed modules: exterior powers of the defining representation and spin modules.
std::vector<HighestWeightModules<CF>::Seed> seeds(const CatalogPair& pair) {
  const RootSystem& rs = pair.embedding.g;
  const std::size_t n = pair.g.defining_dimension();
  const std::size_t l = rs.coordinates();
  std::vector<HighestWeightModules<CF>::Seed> out;
  auto exterior = [n](std::size_t k) {
    return [k](const Matrix<CF>& x) { return exterior_power_action(x, k); };
  };
  auto spin = [n](const Matrix<CF>& x) {
    static thread_local std::map<std::size_t, CliffordModule<CF>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, pauli_clifford_module<CF>(n)).first;
    return it->second.spin_lift(x);
  };
  switch (*rs.family()) {
    case Family::A:
      for (std::size_t k = 1; k < n; ++k) out.push_back({leading_ones(l, k), binomial(n, k), exterior(k)});
      break;
    case Family::B:
      for (std::size_t k = 1; k < l; ++k) out.push_back({leading_ones(l, k), binomial(n, k), exterior(k)});
      out.push_back({half_spin(l, false), std::uint64_t{1} << l, spin});
      break;
    case Family::D:
      for (std::size_t k = 1; k + 1 < l; ++k) out.push_back({leading_ones(l, k), binomial(n, k), exterior(k)});
      out.push_back({half_spin(l, false), std::uint64_t{1} << l, spin});
      out.push_back({half_spin(l, true), std::uint64_t{1} << l, spin});
      break;
    default:
      throw UnsupportedError(pair.id + ": no seed modules for " + rs.label());
  }
  return out;
}

Rational real_rational(const CF& x, const std::string& what) {
  if (!is_zero(x.b())) throw ConsistencyError(what + " is not real");
  return x.a();
}

}  // namespace

SpinGeometry::SpinGeometry(std::shared_ptr<const CatalogPair> pair) : pair_(std::move(pair)) {
  if (!pair_->symmetric) throw DomainError(pair_->id + " is not a symmetric pair");
  casimir_sigma_ = real_rational(diracbound::casimir_sigma(*pair_), "c_H^sigma");
  spinors_ = spinor_decomposition(*pair_);
  spinor_weights_ = spinor_basis_weights(*pair_);
  h_rho_orbit_ = h_roots().signed_rho_orbit();
}

std::map<Weight, long long> SpinGeometry::hom_components(const Weight& gamma) const {
  std::map<Weight, long long> out;
  if (equal_rank()) {
    const WeightMultiset dom = dominant_multiplicities(gamma, g_roots());
    for (const auto& c : spinors_.components) {
      long long m = equal_rank_branching_multiplicity(dom, g_roots(), h_roots(), h_rho_orbit_, c.highest_weight);
      if (m > 0) out[c.highest_weight] = m;
    }
  } else {
    BranchingResult b = branch(gamma, pair_->embedding);
    for (const auto& c : spinors_.components)
      if (long long m = b.multiplicity(c.highest_weight); m > 0) out[c.highest_weight] = m;
  }
  return out;
}

long long SpinGeometry::hom_dimension(const Weight& gamma) const {
  long long d = 0;
  auto comps = hom_components(gamma);
  for (const auto& c : spinors_.components) {
    auto it = comps.find(c.highest_weight);
    if (it != comps.end()) d += it->second * c.multiplicity;
  }
  return d;
}

std::shared_ptr<const WeightModule<CF>> SpinGeometry::module(const Weight& gamma) const {
  HighestWeightModules<CF>* m = nullptr;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!modules_) modules_ = std::make_unique<HighestWeightModules<CF>>(pair_->g, seeds(*pair_));
    m = modules_.get();
  }
  return m->get(gamma);
}

std::unique_ptr<ModuleModel<CF>> SpinGeometry::model(const Weight& gamma) const {
  require_dominant(g_roots(), gamma);
  if (g_roots().family() == Family::A) {
    std::vector<int> top;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      if (gamma.twice(j) % 2 != 0) throw DomainError("su(N) weight " + gamma.str() + " is not integral");
      top.push_back(static_cast<int>(gamma.twice(j) / 2));
    }
    top.push_back(0);
    return std::make_unique<GelfandTsetlinModel<CF>>(std::move(top));
  }
  return std::make_unique<WeightModuleModel<CF>>(module(gamma));
}

std::vector<Weight> SpinGeometry::component_order() const {
  std::vector<Weight> order;
  for (const auto& c : spinors_.components) order.push_back(c.highest_weight);
  auto charge = [](const Weight& w) {
    long long s = 0;
    for (auto x : w.twice_coords()) s += x;
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    if (charge(a) != charge(b)) return charge(a) > charge(b);
    return a > b;
  });
  return order;
}

DiracBlock dirac_block(const SpinGeometry& geo, const Weight& gamma) {
  const CatalogPair& pair = geo.pair();
  const RootSystem& grs = geo.g_roots();
  const RootSystem& hrs = geo.h_roots();
  require_dominant(grs, gamma);
  DiracBlock block;
  block.gamma = gamma;
  block.gamma_dual = grs.dual(gamma);
  block.expected = grs.casimir(block.gamma_dual) + geo.casimir_sigma();

  const auto comps = geo.hom_components(gamma);
  const long long expected_dim = geo.hom_dimension(gamma);
  if (expected_dim == 0) throw DomainError("Hom_H(V^" + gamma.str() + ", Sigma) is zero for " + pair.id);

  auto model = geo.model(block.gamma_dual);
  const std::size_t ds = pair.clifford.dimension();

  // restrict Gelfand-Tsetlin vectors to the h-types that can pair with spinor components
  std::function<bool(std::size_t)> keep = [](std::size_t) { return true; };
  std::set<Weight> wanted;
  for (const auto& [sigma, m] : comps) wanted.insert(hrs.dual(sigma));
  if (auto* gt = dynamic_cast<const GelfandTsetlinModel<CF>*>(model.get())) {
    const GelfandTsetlinBasis& b = gt->basis();
    const std::size_t n = b.n();
    keep = [&b, &wanted, n](std::size_t k) {
      const long mn = b.row_sum(k, n) - b.row_sum(k, n - 1);
      Weight w(n - 1);
      for (std::size_t j = 1; j < n; ++j) w.twice(j - 1) = 2 * (b.entry(k, n - 1, j) - mn);
      return wanted.count(w) > 0;
    };
  }

  std::map<Weight, std::vector<Weight>> by_h_weight;
  for (const auto& [mu, m] : weight_multiplicities(block.gamma_dual, grs))
    by_h_weight[pair.embedding.apply(mu)].push_back(mu);

  std::vector<std::size_t> columns;  // tensor index key * ds + s
  std::map<std::size_t, std::size_t> column_of;
  for (std::size_t s = 0; s < ds; ++s) {
    auto it = by_h_weight.find(-geo.spinor_weights()[s]);
    if (it == by_h_weight.end()) continue;
    for (const auto& mu : it->second)
      for (std::size_t key : model->weight_space(mu))
        if (keep(key)) {
          column_of.emplace(key * ds + s, columns.size());
          columns.push_back(key * ds + s);
        }
  }
  block.tensor_candidates = columns.size();

  // invariance: (E_beta (x) 1 + 1 (x) sigma(E_beta)) u = 0 for simple roots beta of h
  std::map<std::size_t, SparseVector<CF>> rows;
  for (const auto& beta : hrs.simple_roots()) {
    const Matrix<CF>& e = pair.h.root_vector(beta);
    const Matrix<CF> se = pair.spin(e);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::size_t key = columns[c] / ds;
      const std::size_t s = columns[c] % ds;
      for (const auto& [k2, a] : model->apply(e, SparseVector<CF>{{key, CF(1)}})) rows[k2 * ds + s][c] += a;
      for (std::size_t t = 0; t < ds; ++t)
        if (!is_zero(se(t, s))) rows[key * ds + t][c] += se(t, s);
    }
  }
  SparseEchelon<CF> echelon;
  for (auto& [idx, row] : rows) {
    for (auto it = row.begin(); it != row.end();) it = is_zero(it->second) ? row.erase(it) : std::next(it);
    echelon.insert(std::move(row));
  }
  std::vector<SparseVector<CF>> kernel = echelon.nullspace(columns.size());
  block.hom_dimension = kernel.size();
  if (static_cast<long long>(kernel.size()) != expected_dim)
    throw ConsistencyError(pair.id + ": invariant space for " + gamma.str() + " has dimension " +
                           std::to_string(kernel.size()) + ", branching predicts " + std::to_string(expected_dim));

  // free column of each invariant: the coordinate where it is 1 and the others vanish
  std::vector<std::size_t> free;
  std::vector<SparseVector<CF>> invariants;
  for (const auto& v : kernel) {
    std::size_t f = columns.size();
    for (const auto& [c, x] : v)
      if (!echelon.rows().count(c)) f = c;
    free.push_back(columns[f]);
    SparseVector<CF> u;
    for (const auto& [c, x] : v) u.emplace(columns[c], x);
    invariants.push_back(std::move(u));
  }

  const std::size_t d = invariants.size();
  block.matrix = Matrix<CF>(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::map<std::size_t, std::vector<CF>> by_key;
    for (const auto& [idx, x] : invariants[j]) {
      auto& v = by_key[idx / ds];
      if (v.empty()) v.assign(ds, CF(0));
      v[idx % ds] = x;
    }
    SparseVector<CF> du;
    for (std::size_t i = 0; i < pair.dimension(); ++i) {
      const Matrix<CF>& ci = pair.clifford.generators[i];
      for (const auto& [key, spinor] : by_key) {
        std::vector<CF> w(ds, CF(0));
        for (std::size_t t = 0; t < ds; ++t)
          for (std::size_t s = 0; s < ds; ++s)
            if (!is_zero(ci(t, s)) && !is_zero(spinor[s])) w[t] += ci(t, s) * spinor[s];
        for (const auto& [k2, a] : model->apply(pair.p[i], SparseVector<CF>{{key, CF(1)}}))
          for (std::size_t t = 0; t < ds; ++t)
            if (!is_zero(w[t])) {
              auto [it, fresh] = du.try_emplace(k2 * ds + t, a * w[t]);
              if (!fresh) {
                it->second += a * w[t];
                if (is_zero(it->second)) du.erase(it);
              }
            }
      }
    }
    SparseVector<CF> check;
    for (std::size_t k = 0; k < d; ++k) {
      auto it = du.find(free[k]);
      if (it == du.end()) continue;
      block.matrix(k, j) = it->second;
      axpy(check, it->second, invariants[k]);
    }
    if (check != du) throw ConsistencyError(pair.id + ": Dirac operator does not preserve the invariants of " + gamma.str());
  }
  block.square = block.matrix * block.matrix;
  block.scalar = block.square == Matrix<CF>::identity(d) * CF(block.expected);
  return block;
}

std::vector<Weight> admissible_weights(const SpinGeometry& geo, const Rational& bound) {
  const RootSystem& grs = geo.g_roots();
  const auto fundamentals = grs.fundamental_weights();
  std::vector<Weight> all{Weight(grs.coordinates())};
  std::set<Weight> seen(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    for (const auto& w : fundamentals) {
      Weight v = all[k] + w;
      if (grs.casimir(v) <= bound && seen.insert(v).second) all.push_back(v);
    }
  std::vector<Weight> out;
  for (const auto& g : all)
    if (geo.hom_dimension(g) > 0) out.push_back(g);
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    Rational ca = grs.casimir(a), cb = grs.casimir(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

SpectralData lambda1(const SpinGeometry& geo, std::size_t budget) {
  const RootSystem& grs = geo.g_roots();
  const auto fundamentals = grs.fundamental_weights();
  SpectralData data;
  data.casimir_sigma = geo.casimir_sigma();
  std::map<Weight, std::size_t> slot;
  for (const auto& w : geo.component_order()) {
    slot.emplace(w, data.components.size());
    data.components.push_back({w, std::nullopt, {}});
  }

  using Entry = std::pair<Rational, Weight>;
  auto later = [](const Entry& a, const Entry& b) { return a.first != b.first ? a.first > b.first : a.second > b.second; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
  std::set<Weight> seen;
  const Weight zero(grs.coordinates());
  queue.emplace(Rational(0), zero);
  seen.insert(zero);

  auto all_found = [&] {
    return std::all_of(data.components.begin(), data.components.end(), [](const ComponentValue& c) { return c.value.has_value(); });
  };
  auto worst = [&] {
    Rational m = 0;
    for (const auto& c : data.components) m = std::max(m, *c.value);
    return m;
  };
  auto summarize = [&] {
    std::optional<Rational> best;
    for (const auto& c : data.components)
      if (c.value && (!best || *c.value < *best)) best = c.value;
    data.minimizers.clear();
    if (!best) return;
    data.lambda1 = *best;
    std::set<Weight> mins;
    for (const auto& c : data.components)
      if (c.value && *c.value == *best) mins.insert(c.minimizers.begin(), c.minimizers.end());
    data.minimizers.assign(mins.begin(), mins.end());
  };

  while (!queue.empty()) {
    if (all_found() && queue.top().first + data.casimir_sigma > worst()) break;
    if (data.nodes >= budget) {
      summarize();
      throw ResourceError("lambda1 search exceeded the budget of " + std::to_string(budget) + " nodes", data);
    }
    auto [cas, gamma] = queue.top();
    queue.pop();
    ++data.nodes;
    const Rational value = cas + data.casimir_sigma;
    for (const auto& [sigma, m] : geo.hom_components(gamma)) {
      ComponentValue& c = data.components[slot.at(sigma)];
      if (!c.value || value < *c.value) {
        c.value = value;
        c.minimizers = {gamma};
      } else if (value == *c.value) {
        c.minimizers.push_back(gamma);
      }
    }
    for (const auto& w : fundamentals) {
      Weight v = gamma + w;
      if (seen.insert(v).second) queue.emplace(grs.casimir(v), v);
    }
  }
  summarize();
  if (data.minimizers.empty()) throw SearchError(geo.pair().id + ": no admissible weight found");
  return data;
}

VafaWittenReport vafa_witten_operator(const SpinGeometry& geo, const Weight& gamma, const std::vector<Rational>& mu,
                                      const Rational& lambda1_value, double tolerance) {
  const CatalogPair& pair = geo.pair();
  const std::size_t n = pair.dimension();
  if (mu.size() != n) throw DomainError("mu must have " + std::to_string(n) + " entries");
  for (const auto& m : mu)
    if (sgn(m) <= 0 || m > 1) throw DomainError("mu entry " + to_string(m) + " is outside (0, 1]");
  if (geo.hom_dimension(gamma) == 0) throw DomainError(gamma.str() + " is not admissible for " + pair.id);

  const Weight dual = geo.g_roots().dual(gamma);
  auto module = geo.module(dual);
  const std::size_t dv = module->dimension();
  const std::size_t ds = pair.clifford.dimension();
  Matrix<CF> c(dv * ds, dv * ds);
  for (std::size_t i = 0; i < n; ++i) c += kron(module->dense(pair.p[i]), pair.clifford.generators[i]) * CF(mu[i]);
  const Matrix<CF> gram = kron(module->gram(), Matrix<CF>::identity(ds));

  VafaWittenReport r;
  r.gamma = gamma;
  r.mu = mu;
  r.lambda1 = lambda1_value;

  // C is self-adjoint for the invariant form P = L L^*; L^* C L^{-*} is Hermitian
  Eigen::MatrixXcd p = to_eigen(gram);
  Eigen::LLT<Eigen::MatrixXcd> llt(p);
  if (llt.info() != Eigen::Success) throw PrecisionError("invariant form is not positive definite");
  Eigen::MatrixXcd l = llt.matrixL();
  Eigen::MatrixXcd h = l.adjoint() * to_eigen(c) * l.adjoint().inverse();
  h = (h + h.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  r.norm2 = std::max(ev.minCoeff() * ev.minCoeff(), ev.maxCoeff() * ev.maxCoeff());
  const double lam = lambda1_value.get_d();
  r.within_bound = r.norm2 <= lam + tolerance;
  r.equality = std::abs(r.norm2 - lam) <= tolerance;

  if (std::all_of(mu.begin(), mu.end(), [](const Rational& m) { return m == 1; })) {
    // P (lambda1 - C^2) is Hermitian; PSD with a kernel means max C^2 = lambda1 exactly
    Matrix<CF> m = gram * (Matrix<CF>::identity(dv * ds) * CF(lambda1_value) - c * c);
    r.exact_equality = is_positive_semidefinite(m) && rank(m) < m.rows();
  }
  return r;
}

long long twisted_kernel_dimension(const SpinGeometry& geo, const Weight& sigma1) {
  if (geo.pair().rank_difference() != 0)
    throw UnsupportedError(geo.pair().id + ": twisted kernel dimension needs equal rank");
  const RootSystem& hrs = geo.h_roots();
  require_dominant(hrs, sigma1);
  WeightMultiset product;
  for (const auto& [w, m] : weight_multiplicities(hrs.dual(sigma1), hrs))
    for (const auto& [s, k] : geo.spinors().weights) product[w + s] += m * k;
  const WeightMultiset parts = decompose_character(std::move(product), hrs);
  auto it = parts.find(Weight(hrs.coordinates()));
  return it == parts.end() ? 0 : it->second;
}

}  // namespace diracbound
