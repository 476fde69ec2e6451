#pragma once

#include "diracbound/topology/cohomology.hpp"

namespace diracbound {

using Integer = mpz_class;

Integer binomial(int n, int k);

/// ch(Sigma^+) or ch(Sigma^-) on S^{2m}: 2^{m-1} +- w.
CohomologyClass spinor_chern_character(int m, int chirality);

/// ch(W) for W = Lambda^{0,m-1} T*M (x) tau^m on CP^{2m-1}.
CohomologyClass chern_character_W(int m);
/// ch(W*), i.e. ch(W) with a -> -a.
CohomologyClass chern_character_W_dual(int m);

/// 2^{m-1} (k - 1).
Integer sphere_threshold(int m, int k);

struct CpnThreshold {
  Integer threshold;                   // binom(2m-1, m-1) (k - 1)
  CohomologyClass obstruction_class;   // sum_{i<m} (-1)^i binom(2m, i) (e^{(m-i)a} - 1)
};
CpnThreshold cpn_threshold(int m, int k);

struct IndexReport {
  int m = 0;
  int k = 0;
  Rational ahat;      // A-hat(TN)[N]
  Integer degree;     // A-hat degree of f
  Rational index_plus;   // 2^{m-1} ahat + deg
  Rational index_minus;  // 2^{m-1} ahat - deg
  Rational kernel_bound;  // max(|2^m ahat|, 2 |deg|)
  Integer threshold;      // 2^{m-1} (k - 1)
  bool verdict = false;   // |deg| > threshold
  bool kernel_exceeds = false;  // kernel_bound > 2^m (k - 1)
};
IndexReport index_report(int m, int k, const Rational& ahat, const Integer& degree);

}  // namespace diracbound
