#pragma once

#include <cstdint>
#include <map>

#include "diracbound/lie/root_system.hpp"

namespace diracbound {

using WeightMultiset = std::map<Weight, long long>;

/// Multiplicities of the dominant weights of V^gamma (Freudenthal recursion).
WeightMultiset dominant_multiplicities(const Weight& gamma, const RootSystem& rs);

/// All weights of V^gamma with multiplicities.
WeightMultiset weight_multiplicities(const Weight& gamma, const RootSystem& rs);

/// The Weyl group orbit of w.
std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs);

inline Rational casimir(const Weight& gamma, const RootSystem& rs) { return rs.casimir(gamma); }
inline std::uint64_t dimension(const Weight& gamma, const RootSystem& rs) { return rs.dimension(gamma); }

/// Splits a Weyl-invariant weight multiset into irreducible characters by repeatedly
/// removing the character of the lexicographically highest remaining weight.
/// Throws EmbeddingError if a multiplicity would become negative.
WeightMultiset decompose_character(WeightMultiset weights, const RootSystem& rs);

struct BranchingResult {
  WeightMultiset components;  // h-dominant highest weight -> multiplicity
  CartanEmbedding embedding;

  long long multiplicity(const Weight& mu) const {
    auto it = components.find(mu);
    return it == components.end() ? 0 : it->second;
  }
  std::uint64_t total_dimension() const;
};

/// Restriction of V^gamma along the embedding.
BranchingResult branch(const Weight& gamma, const CartanEmbedding& emb);

/// Multiplicity of the h-irreducible nu in V^gamma for an equal-rank embedding with identity
/// Cartan map, by the alternating sum over the Weyl group of h. `dominant` are the dominant
/// weight multiplicities of V^gamma for g.
long long equal_rank_branching_multiplicity(const WeightMultiset& dominant, const RootSystem& g, const RootSystem& h,
                                            const std::vector<std::pair<Weight, int>>& h_rho_orbit,
                                            const Weight& nu);

}  // namespace diracbound
