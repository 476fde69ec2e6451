#include "diracbound/lie/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include "diracbound/errors.hpp"

namespace diracbound {

Family parse_family(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'G': return Family::G;
    default: throw ConfigurationError(std::string("unsupported root system family '") + c + "'");
  }
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::G: return 'G';
  }
  return '?';
}

namespace {

Weight unit(std::size_t n, std::size_t i, long long c = 1) {
  Weight w(n);
  w.twice(i) = 2 * c;
  return w;
}

bool lex_positive(const Weight& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.twice(i) > 0) return true;
    if (w.twice(i) < 0) return false;
  }
  return false;
}

/// Determinant by exact elimination.
Rational determinant(Matrix<Rational> m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank, const Rational& gram_scale) {
  const bool ok = (family == Family::G) ? rank == 2 : rank >= 1;
  if (!ok || rank > 16)
    throw ConfigurationError(std::string("unsupported root system ") + family_letter(family) + std::to_string(rank));
  if (sgn(gram_scale) <= 0) throw ConfigurationError("gram scale must be positive");

  const std::size_t l = static_cast<std::size_t>(rank);
  RootSystem rs;
  rs.label_ = std::string(1, family_letter(family)) + std::to_string(rank);
  rs.family_ = family;
  rs.scale_ = gram_scale;
  std::vector<Weight> all;

  if (family == Family::A) {
    rs.coords_ = l;
    for (std::size_t a = 0; a <= l; ++a)
      for (std::size_t b = 0; b <= l; ++b) {
        if (a == b) continue;
        std::vector<long long> v(l + 1, 0);
        v[a] += 1;
        v[b] -= 1;
        std::vector<long long> norm(l);
        for (std::size_t i = 0; i < l; ++i) norm[i] = v[i] - v[l];
        all.push_back(Weight::integral(norm));
      }
    rs.gram_ = Matrix<Rational>(l, l);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j)
        rs.gram_(i, j) = 2 * ((i == j ? Rational(1) : Rational(0)) - make_rational(1, static_cast<long>(l + 1)));
  } else if (family == Family::G) {
    rs.coords_ = 2;
    // short roots e_a - e_b and long roots 3e_a - (e_1+e_2+e_3), normalised to a zero last coordinate
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        if (a == b) continue;
        std::vector<long long> v(3, 0);
        v[a] += 1;
        v[b] -= 1;
        all.push_back(Weight::integral({v[0] - v[2], v[1] - v[2]}));
      }
    for (std::size_t a = 0; a < 3; ++a)
      for (long long s : {1, -1}) {
        std::vector<long long> v(3, -s);
        v[a] = 2 * s;
        all.push_back(Weight::integral({v[0] - v[2], v[1] - v[2]}));
      }
    rs.gram_ = Matrix<Rational>(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) rs.gram_(i, j) = (i == j ? Rational(1) : Rational(0)) - make_rational(1, 3);
  } else {
    rs.coords_ = l;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j)
        for (long long si : {1, -1})
          for (long long sj : {1, -1}) all.push_back(unit(l, i, si) + unit(l, j, sj));
    if (family == Family::B)
      for (std::size_t i = 0; i < l; ++i) {
        all.push_back(unit(l, i, 1));
        all.push_back(unit(l, i, -1));
      }
    if (family == Family::C)
      for (std::size_t i = 0; i < l; ++i) {
        all.push_back(unit(l, i, 2));
        all.push_back(unit(l, i, -2));
      }
    rs.gram_ = Matrix<Rational>::identity(l);
  }

  for (auto& r : all)
    if (lex_positive(r)) rs.positive_.push_back(r);
  rs.finish();
  rs.verify();
  return rs;
}

RootSystem RootSystem::from_positive_roots(std::string label, std::size_t coordinates, std::vector<Weight> positive,
                                           Matrix<Rational> gram, const Rational& gram_scale) {
  RootSystem rs;
  rs.label_ = std::move(label);
  rs.coords_ = coordinates;
  for (const auto& r : positive) {
    if (r.size() != coordinates) throw ConfigurationError("root has wrong number of coordinates");
    if (!lex_positive(r)) throw ConfigurationError("root " + r.str() + " is not lexicographically positive");
  }
  rs.positive_ = std::move(positive);
  if (gram.rows() != coordinates || gram.cols() != coordinates) throw ConfigurationError("Gram matrix has wrong shape");
  rs.gram_ = std::move(gram);
  rs.scale_ = gram_scale;
  rs.finish();
  rs.verify();
  return rs;
}

void RootSystem::finish() {
  std::sort(positive_.begin(), positive_.end(), std::greater<>());
  positive_.erase(std::unique(positive_.begin(), positive_.end()), positive_.end());

  gram_denominator_ = 1;
  for (const auto& x : gram_.data()) {
    long long d = x.get_den().get_si();
    gram_denominator_ = std::lcm(gram_denominator_, d);
  }
  gram_int_.assign(coords_ * coords_, 0);
  for (std::size_t i = 0; i < coords_; ++i)
    for (std::size_t j = 0; j < coords_; ++j) {
      Rational v = gram_(i, j) * static_cast<long>(gram_denominator_);
      gram_int_[i * coords_ + j] = v.get_num().get_si();
    }

  std::set<Weight> pos(positive_.begin(), positive_.end());
  simple_.clear();
  for (const auto& a : positive_) {
    bool decomposable = false;
    for (const auto& b : positive_)
      if (b != a && pos.count(a - b)) {
        decomposable = true;
        break;
      }
    if (!decomposable) simple_.push_back(a);
  }

  rho_ = Weight(coords_);
  for (const auto& a : positive_) rho_ += a;
  for (std::size_t i = 0; i < coords_; ++i) {
    if (rho_.twice(i) % 2 != 0) throw ConfigurationError("rho is not in the half-integral lattice");
    rho_.twice(i) /= 2;
  }

  simple_covector_.clear();
  simple_norm_.clear();
  for (const auto& a : simple_) {
    std::vector<long long> cov(coords_, 0);
    for (std::size_t j = 0; j < coords_; ++j)
      for (std::size_t k = 0; k < coords_; ++k) cov[j] += gram_int_[j * coords_ + k] * a.twice(k);
    simple_covector_.push_back(std::move(cov));
    simple_norm_.push_back(inner_numerator(a, a));
  }
}

std::vector<Weight> RootSystem::roots() const {
  std::vector<Weight> r = positive_;
  for (const auto& a : positive_) r.push_back(-a);
  return r;
}

Matrix<Rational> RootSystem::cartan_matrix() const {
  const std::size_t r = simple_.size();
  Matrix<Rational> c(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c(i, j) = Rational(static_cast<long>(coroot_pairing(simple_[i], simple_[j])));
  return c;
}

long long RootSystem::inner_numerator(const Weight& a, const Weight& b) const {
  if (a.size() != coords_ || b.size() != coords_) throw DomainError("weight has wrong number of coordinates");
  long long s = 0;
  for (std::size_t i = 0; i < coords_; ++i) {
    if (a.twice(i) == 0) continue;
    long long row = 0;
    for (std::size_t j = 0; j < coords_; ++j) row += gram_int_[i * coords_ + j] * b.twice(j);
    s += a.twice(i) * row;
  }
  return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  Rational r(static_cast<long>(inner_numerator(a, b)));
  r /= static_cast<long>(4 * gram_denominator_);
  r *= scale_;
  r.canonicalize();
  return r;
}

long long RootSystem::simple_pairing(const Weight& w, std::size_t i) const {
  if (w.size() != coords_) throw DomainError("weight has wrong number of coordinates");
  long long s = 0;
  const auto& cov = simple_covector_[i];
  for (std::size_t j = 0; j < coords_; ++j) s += w.twice(j) * cov[j];
  s *= 2;
  if (s % simple_norm_[i] != 0) throw DomainError("weight " + w.str() + " is not in the weight lattice");
  return s / simple_norm_[i];
}

long long RootSystem::coroot_pairing(const Weight& w, const Weight& alpha) const {
  long long n = 2 * inner_numerator(w, alpha);
  long long d = inner_numerator(alpha, alpha);
  if (n % d != 0) throw DomainError("weight " + w.str() + " is not in the weight lattice");
  return n / d;
}

bool RootSystem::is_dominant(const Weight& w) const {
  if (w.size() != coords_) throw DomainError("weight has wrong number of coordinates");
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < coords_; ++j) s += w.twice(j) * simple_covector_[i][j];
    if (s < 0) return false;
  }
  return true;
}

Weight RootSystem::reflect(const Weight& w, std::size_t i) const {
  long long k = simple_pairing(w, i);
  Weight r = w;
  for (std::size_t j = 0; j < coords_; ++j) r.twice(j) -= k * simple_[i].twice(j);
  return r;
}

Weight RootSystem::dominant_conjugate(const Weight& w) const {
  Weight r = w;
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      long long k = simple_pairing(r, i);
      if (k < 0) {
        for (std::size_t j = 0; j < coords_; ++j) r.twice(j) -= k * simple_[i].twice(j);
        changed = true;
      }
    }
    if (!changed) return r;
  }
}

std::vector<std::pair<Weight, int>> RootSystem::signed_rho_orbit() const {
  std::vector<std::pair<Weight, int>> out;
  std::unordered_map<Weight, int, WeightHash> seen;
  std::deque<Weight> queue{rho_};
  seen.emplace(rho_, 1);
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    int s = seen[w];
    out.emplace_back(w, s);
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      Weight v = reflect(w, i);
      if (seen.emplace(v, -s).second) queue.push_back(v);
    }
  }
  return out;
}

std::vector<Weight> RootSystem::fundamental_weights() const {
  const std::size_t r = simple_.size();
  if (r != coords_) throw UnsupportedError("fundamental weights need a semisimple system of full rank");
  // columns: G alpha_j^vee; the fundamental weights are the rows of the inverse
  Matrix<Rational> m(coords_, r);
  for (std::size_t j = 0; j < r; ++j) {
    Rational norm = inner(simple_[j], simple_[j]) / scale_;
    for (std::size_t i = 0; i < coords_; ++i) {
      Rational s = 0;
      for (std::size_t k = 0; k < coords_; ++k) s += gram_(i, k) * simple_[j][k];
      m(i, j) = 2 * s / norm;
    }
  }
  Matrix<Rational> inv = inverse(m);
  std::vector<Weight> out;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> row(coords_);
    for (std::size_t k = 0; k < coords_; ++k) row[k] = inv(i, k);
    out.push_back(Weight::from_rationals(row));
  }
  return out;
}

void require_dominant(const RootSystem& rs, const Weight& gamma) {
  if (gamma.size() != rs.coordinates())
    throw DomainError("weight " + gamma.str() + " has wrong number of coordinates for " + rs.label());
  if (!rs.is_dominant(gamma)) throw DomainError("weight " + gamma.str() + " is not dominant for " + rs.label());
}

Rational RootSystem::casimir(const Weight& gamma) const {
  require_dominant(*this, gamma);
  return inner(gamma, gamma + 2 * rho_);
}

std::uint64_t RootSystem::dimension(const Weight& gamma) const {
  require_dominant(*this, gamma);
  Rational d = 1;
  Weight g = gamma + rho_;
  for (const auto& a : positive_) d *= Rational(static_cast<long>(inner_numerator(g, a))) / Rational(static_cast<long>(inner_numerator(rho_, a)));
  d.canonicalize();
  if (d.get_den() != 1) throw ConsistencyError("Weyl dimension is not an integer");
  return d.get_num().get_ui();
}

Weight RootSystem::dual(const Weight& gamma) const {
  require_dominant(*this, gamma);
  return dominant_conjugate(-gamma);
}

void RootSystem::verify() const {
  if (family_) {
    const std::size_t l = coords_;
    std::size_t expected = 0;
    switch (*family_) {
      case Family::A: expected = l * (l + 1) / 2; break;
      case Family::B:
      case Family::C: expected = l * l; break;
      case Family::D: expected = l * (l - 1); break;
      case Family::G: expected = 6; break;
    }
    if (positive_.size() != expected)
      throw ConsistencyError(label_ + ": wrong number of positive roots " + std::to_string(positive_.size()));
  }
  Weight sum(coords_);
  for (const auto& a : positive_) sum += a;
  if (sum != 2 * rho_) throw ConsistencyError(label_ + ": rho is not half the sum of positive roots");
  if (gram_ != gram_.transpose()) throw ConsistencyError(label_ + ": Gram matrix not symmetric");
  for (std::size_t k = 1; k <= coords_; ++k)
    if (sgn(determinant(gram_.block(0, 0, k, k))) <= 0)
      throw ConsistencyError(label_ + ": Gram matrix not positive definite");
  if (sgn(scale_) <= 0) throw ConsistencyError(label_ + ": nonpositive metric scale");
  for (std::size_t i = 0; i < simple_.size(); ++i)
    for (std::size_t j = 0; j < simple_.size(); ++j) {
      long long c = coroot_pairing(simple_[i], simple_[j]);
      if (i == j ? c != 2 : c > 0) throw ConsistencyError(label_ + ": simple roots do not form a Cartan matrix");
    }
}

Weight CartanEmbedding::apply(const Weight& w) const {
  if (w.size() != map.cols()) throw DomainError("weight has wrong number of coordinates for embedding");
  std::vector<Rational> out(map.rows(), Rational(0));
  for (std::size_t i = 0; i < map.rows(); ++i)
    for (std::size_t j = 0; j < map.cols(); ++j)
      if (w.twice(j) != 0 && sgn(map(i, j)) != 0) out[i] += map(i, j) * w[j];
  return Weight::from_rationals(out);
}

bool CartanEmbedding::is_identity() const {
  return map.rows() == map.cols() && map == Matrix<Rational>::identity(map.rows());
}

void CartanEmbedding::verify() const {
  if (map.rows() != h.coordinates() || map.cols() != g.coordinates())
    throw EmbeddingError("Cartan embedding has wrong shape");
  std::set<Weight> images;
  for (const auto& a : g.roots()) images.insert(apply(a));
  for (const auto& a : h.roots())
    if (!images.count(a)) throw EmbeddingError("root " + a.str() + " of " + h.label() + " is not a restricted root");
}

}  // namespace diracbound
