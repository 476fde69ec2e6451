#include "diracbound/topology/index.hpp"

#include "diracbound/errors.hpp"

namespace diracbound {

namespace {

void check_mk(int m, int k) {
  if (m < 1) throw DomainError("m must be at least 1");
  if (k < 1) throw DomainError("k must be at least 1");
}

Integer power_of_two(int e) {
  Integer r = 1;
  r <<= e;
  return r;
}

}  // namespace

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

CohomologyClass spinor_chern_character(int m, int chirality) {
  if (chirality != 1 && chirality != -1) throw DomainError("chirality must be +1 or -1");
  const TruncatedRing ring = TruncatedRing::sphere(m);
  return CohomologyClass(ring, {Rational(power_of_two(m - 1)), Rational(chirality)});
}

CohomologyClass chern_character_W(int m) {
  if (m < 1) throw DomainError("m must be at least 1");
  const TruncatedRing ring = TruncatedRing::projective(2 * m - 1);
  const CohomologyClass a = CohomologyClass::generator(ring);
  CohomologyClass ch(ring);
  for (int i = 0; i < m; ++i) {
    const int s = (m - 1 - i) % 2 == 0 ? 1 : -1;
    ch += (a * Rational(m - i)).exp() * Rational(binomial(2 * m, i) * s);
  }
  return ch;
}

CohomologyClass chern_character_W_dual(int m) { return chern_character_W(m).negate_generator(); }

Integer sphere_threshold(int m, int k) {
  check_mk(m, k);
  return power_of_two(m - 1) * (k - 1);
}

CpnThreshold cpn_threshold(int m, int k) {
  check_mk(m, k);
  const TruncatedRing ring = TruncatedRing::projective(2 * m - 1);
  const CohomologyClass a = CohomologyClass::generator(ring);
  const CohomologyClass one = CohomologyClass::constant(ring, Rational(1));
  CohomologyClass cls(ring);
  for (int i = 0; i < m; ++i) {
    const int s = i % 2 == 0 ? 1 : -1;
    cls += ((a * Rational(m - i)).exp() - one) * Rational(binomial(2 * m, i) * s);
  }
  return {binomial(2 * m - 1, m - 1) * (k - 1), std::move(cls)};
}

IndexReport index_report(int m, int k, const Rational& ahat, const Integer& degree) {
  check_mk(m, k);
  IndexReport r;
  r.m = m;
  r.k = k;
  r.ahat = ahat;
  r.degree = degree;
  const Rational half_rank(power_of_two(m - 1));
  r.index_plus = half_rank * ahat + Rational(degree);
  r.index_minus = half_rank * ahat - Rational(degree);
  const Rational a = abs(Rational(power_of_two(m) * ahat));
  const Rational d = Rational(2 * abs(degree));
  r.kernel_bound = a > d ? a : d;
  r.threshold = sphere_threshold(m, k);
  r.verdict = abs(degree) > r.threshold;
  r.kernel_exceeds = r.kernel_bound > Rational(power_of_two(m) * (k - 1));
  return r;
}

}  // namespace diracbound
