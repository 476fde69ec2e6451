#include "diracbound/lie/representation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "diracbound/errors.hpp"

namespace diracbound {

namespace {

/// Sum over positive roots of <w, alpha^vee>; equals the height on the root lattice up to a factor 2.
long long level(const Weight& w, const RootSystem& rs) {
  long long s = 0;
  for (const auto& a : rs.positive_roots()) {
    long long n = 2 * rs.inner_numerator(w, a);
    long long d = rs.inner_numerator(a, a);
    s += n / d;
  }
  return s;
}

}  // namespace

WeightMultiset dominant_multiplicities(const Weight& gamma, const RootSystem& rs) {
  require_dominant(rs, gamma);
  // dominant weights below gamma, reached through dominant weights by positive-root steps
  std::vector<Weight> doms{gamma};
  std::unordered_set<Weight, WeightHash> seen{gamma};
  for (std::size_t k = 0; k < doms.size(); ++k) {
    for (const auto& a : rs.positive_roots()) {
      Weight v = doms[k] - a;
      if (rs.is_dominant(v) && seen.insert(v).second) doms.push_back(v);
    }
  }
  std::vector<std::pair<long long, Weight>> order;
  order.reserve(doms.size());
  for (auto& d : doms) order.emplace_back(level(gamma - d, rs), d);
  std::sort(order.begin(), order.end());

  std::unordered_map<Weight, long long, WeightHash> mult;
  mult.reserve(doms.size() * 2);
  const Weight& rho = rs.rho();
  const long long top = rs.inner_numerator(gamma + rho, gamma + rho);
  for (const auto& [lvl, mu] : order) {
    if (lvl == 0) {
      mult[mu] = 1;
      continue;
    }
    long long sum = 0;
    for (const auto& a : rs.positive_roots()) {
      Weight v = mu + a;
      for (;;) {
        auto it = mult.find(rs.dominant_conjugate(v));
        if (it == mult.end()) break;
        sum += it->second * rs.inner_numerator(v, a);
        v += a;
      }
    }
    Weight mr = mu + rho;
    long long den = top - rs.inner_numerator(mr, mr);
    if (den <= 0 || (2 * sum) % den != 0)
      throw ConsistencyError("Freudenthal recursion produced a non-integral multiplicity at " + mu.str());
    long long m = 2 * sum / den;
    if (m <= 0) throw ConsistencyError("Freudenthal recursion produced a nonpositive multiplicity at " + mu.str());
    mult[mu] = m;
  }
  return WeightMultiset(mult.begin(), mult.end());
}

std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs) {
  std::vector<Weight> orbit{w};
  std::unordered_set<Weight, WeightHash> seen{w};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (std::size_t i = 0; i < rs.simple_roots().size(); ++i) {
      Weight v = rs.reflect(orbit[k], i);
      if (seen.insert(v).second) orbit.push_back(v);
    }
  return orbit;
}

WeightMultiset weight_multiplicities(const Weight& gamma, const RootSystem& rs) {
  WeightMultiset all;
  for (const auto& [mu, m] : dominant_multiplicities(gamma, rs))
    for (const auto& w : weyl_orbit(mu, rs)) all[w] = m;
  return all;
}

WeightMultiset decompose_character(WeightMultiset weights, const RootSystem& rs) {
  WeightMultiset result;
  for (auto it = weights.begin(); it != weights.end();) {
    if (it->second < 0) throw EmbeddingError("negative multiplicity in character at " + it->first.str());
    it = it->second == 0 ? weights.erase(it) : std::next(it);
  }
  while (!weights.empty()) {
    auto top = std::prev(weights.end());
    const Weight mu = top->first;
    const long long c = top->second;
    if (!rs.is_dominant(mu))
      throw EmbeddingError("highest remaining weight " + mu.str() + " is not dominant for " + rs.label());
    result[mu] += c;
    for (const auto& [w, m] : weight_multiplicities(mu, rs)) {
      auto it = weights.find(w);
      long long have = it == weights.end() ? 0 : it->second;
      long long left = have - c * m;
      if (left < 0)
        throw EmbeddingError("branching subtraction negative at " + w.str() + " while removing " + mu.str());
      if (left == 0) weights.erase(it);
      else it->second = left;
    }
  }
  return result;
}

std::uint64_t BranchingResult::total_dimension() const {
  std::uint64_t d = 0;
  for (const auto& [mu, m] : components) d += static_cast<std::uint64_t>(m) * embedding.h.dimension(mu);
  return d;
}

BranchingResult branch(const Weight& gamma, const CartanEmbedding& emb) {
  require_dominant(emb.g, gamma);
  WeightMultiset restricted;
  for (const auto& [w, m] : weight_multiplicities(gamma, emb.g)) restricted[emb.apply(w)] += m;
  BranchingResult r{decompose_character(std::move(restricted), emb.h), emb};
  if (r.total_dimension() != emb.g.dimension(gamma))
    throw EmbeddingError("branching of " + gamma.str() + " violates the dimension identity");
  return r;
}

long long equal_rank_branching_multiplicity(const WeightMultiset& dominant, const RootSystem& g, const RootSystem& h,
                                            const std::vector<std::pair<Weight, int>>& h_rho_orbit,
                                            const Weight& nu) {
  const Weight shift = nu + h.rho();
  long long n = 0;
  for (const auto& [w_rho, s] : h_rho_orbit) {
    auto it = dominant.find(g.dominant_conjugate(shift - w_rho));
    if (it != dominant.end()) n += s * it->second;
  }
  if (n < 0) throw EmbeddingError("negative branching multiplicity at " + nu.str());
  return n;
}

}  // namespace diracbound
