#include "diracbound/spin/symmetric_pair.hpp"

#include <regex>

namespace diracbound {

namespace {

using CF = ComplexRational;

Matrix<CF> unit(std::size_t n, std::size_t a, std::size_t b) {
  Matrix<CF> m(n, n);
  m(a, b) = CF(1);
  return m;
}

/// L_ab = E_ab - E_ba (0-based).
Matrix<CF> rotation(std::size_t n, std::size_t a, std::size_t b) { return unit(n, a, b) - unit(n, b, a); }

/// so(m) root system in the conventions used here (B_l, D_l, or the circle for m = 2).
RootSystem orthogonal_roots(std::size_t m) {
  if (m == 2) return RootSystem::from_positive_roots("D1", 1, {}, Matrix<Rational>::identity(1));
  if (m % 2 == 1) return RootSystem::build(Family::B, static_cast<int>(m / 2));
  return RootSystem::build(Family::D, static_cast<int>(m / 2));
}

Matrix<Rational> coordinate_projection(std::size_t rows, std::size_t cols) {
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m(i, i) = 1;
  return m;
}

}  // namespace

std::shared_ptr<const CatalogPair> sphere_pair(std::string id, int n_int) {
  if (n_int < 3) throw ConfigurationError("sphere pair needs N >= 3");
  const std::size_t n = static_cast<std::size_t>(n_int);
  auto pair = std::make_shared<CatalogPair>();
  pair->id = std::move(id);
  pair->description = "Spin(" + std::to_string(n) + ")/Spin(" + std::to_string(n - 1) + ")";

  std::vector<Matrix<CF>> hb;
  for (std::size_t a = 0; a + 1 < n; ++a)
    for (std::size_t b = a + 1; b + 1 < n; ++b) hb.push_back(rotation(n, a, b));
  for (std::size_t b = 0; b + 1 < n; ++b) pair->p.push_back(rotation(n, b, n - 1));
  std::vector<Matrix<CF>> gb = hb;
  gb.insert(gb.end(), pair->p.begin(), pair->p.end());

  std::vector<Matrix<CF>> g_cartan, h_cartan;
  for (std::size_t j = 0; 2 * j + 1 < n; ++j) g_cartan.push_back(rotation(n, 2 * j, 2 * j + 1));
  for (std::size_t j = 0; 2 * j + 2 < n; ++j) h_cartan.push_back(rotation(n, 2 * j, 2 * j + 1));

  RootSystem grs = orthogonal_roots(n);
  RootSystem hrs = orthogonal_roots(n - 1);
  pair->embedding = CartanEmbedding{grs, hrs, coordinate_projection(hrs.coordinates(), grs.coordinates())};
  pair->g = MatrixLieAlgebra<CF>("so(" + std::to_string(n) + ")", gb, g_cartan, grs);
  pair->h = MatrixLieAlgebra<CF>("so(" + std::to_string(n - 1) + ")", hb, h_cartan, hrs);
  pair->clifford = pauli_clifford_module<CF>(n - 1);
  pair->symmetric = true;
  pair->verify();
  return pair;
}

std::shared_ptr<const CatalogPair> projective_pair(std::string id, int n_int) {
  if (n_int < 2) throw ConfigurationError("projective pair needs N >= 2");
  const std::size_t n = static_cast<std::size_t>(n_int);
  const CF i = CF::root();
  auto pair = std::make_shared<CatalogPair>();
  pair->id = std::move(id);
  pair->description = "SU(" + std::to_string(n) + ")/S(U(" + std::to_string(n - 1) + ")xU(1))";

  std::vector<Matrix<CF>> cartan;
  for (std::size_t j = 0; j + 1 < n; ++j) cartan.push_back((unit(n, j, j) - unit(n, n - 1, n - 1)) * i);
  std::vector<Matrix<CF>> hb = cartan;
  for (std::size_t a = 0; a + 1 < n; ++a)
    for (std::size_t b = a + 1; b + 1 < n; ++b) {
      hb.push_back(unit(n, a, b) - unit(n, b, a));
      hb.push_back((unit(n, a, b) + unit(n, b, a)) * i);
    }
  for (std::size_t b = 0; b + 1 < n; ++b) {
    pair->p.push_back(unit(n, b, n - 1) - unit(n, n - 1, b));
    pair->p.push_back((unit(n, b, n - 1) + unit(n, n - 1, b)) * i);
  }
  std::vector<Matrix<CF>> gb = hb;
  gb.insert(gb.end(), pair->p.begin(), pair->p.end());

  RootSystem grs = RootSystem::build(Family::A, static_cast<int>(n - 1));
  std::vector<Weight> hpos;
  for (std::size_t a = 0; a + 1 < n; ++a)
    for (std::size_t b = a + 1; b + 1 < n; ++b) {
      Weight w(n - 1);
      w.twice(a) = 2;
      w.twice(b) = -2;
      hpos.push_back(w);
    }
  RootSystem hrs = RootSystem::from_positive_roots("u(" + std::to_string(n - 1) + ")", n - 1, hpos, grs.gram());
  pair->embedding = CartanEmbedding{grs, hrs, Matrix<Rational>::identity(n - 1)};
  pair->g = MatrixLieAlgebra<CF>("su(" + std::to_string(n) + ")", gb, cartan, grs);
  pair->h = MatrixLieAlgebra<CF>("u(" + std::to_string(n - 1) + ")", hb, cartan, hrs);
  pair->clifford = pauli_clifford_module<CF>(2 * (n - 1));
  pair->symmetric = true;
  pair->verify();
  return pair;
}

std::shared_ptr<const CatalogPair> build_pair(const std::string& id) {
  static const std::regex sphere(R"(S(\d+))");
  static const std::regex projective(R"(CP(\d+))");
  std::smatch m;
  if (std::regex_match(id, m, sphere)) {
    int d = std::stoi(m[1]);
    if (d < 2 || d > 8) throw ConfigurationError("sphere dimension out of range: " + id);
    return sphere_pair(id, d + 1);
  }
  if (std::regex_match(id, m, projective)) {
    int d = std::stoi(m[1]);
    if (d < 1 || d > 7) throw ConfigurationError("projective space dimension out of range: " + id);
    return projective_pair(id, d + 1);
  }
  throw ConfigurationError("unknown symmetric space '" + id + "'");
}

}  // namespace diracbound
