#include "diracbound/berger/berger.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>

#include "diracbound/spin/spin_geometry.hpp"
#include "diracbound/spin/weight_module.hpp"
#include "embedded_data.hpp"

namespace diracbound {

namespace {

using Q5 = QSqrt5;

Matrix<Rational> unit(std::size_t n, std::size_t a, std::size_t b) {
  Matrix<Rational> m(n, n);
  m(a, b) = 1;
  return m;
}

Matrix<Q5> lift(const Matrix<Rational>& m) { return embed_matrix<Q5>(m); }

std::vector<Matrix<Q5>> lift(const std::vector<Matrix<Rational>>& ms) {
  std::vector<Matrix<Q5>> out;
  for (const auto& m : ms) out.push_back(lift(m));
  return out;
}

Q5 inner(const Matrix<Q5>& x, const Matrix<Q5>& y) { return killing_half_trace(x, y); }

/// 1/(2 sqrt5) = sqrt5/10.
Q5 inverse_two_sqrt5() { return Q5(Rational(0), make_rational(1, 10)); }

std::string coords_string(const std::vector<Q5>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + "]";
}

std::vector<Rational> octonion_basis(std::size_t a) {
  std::vector<Rational> v(8, Rational(0));
  v[a] = 1;
  return v;
}

/// Coordinates of y against a basis with Gram inverse `ginv`.
std::vector<Q5> coordinates(const std::vector<Matrix<Q5>>& basis, const Matrix<Q5>& ginv, const Matrix<Q5>& y) {
  return basis_coordinates(basis, ginv, y);
}

Matrix<Q5> gram(const std::vector<Matrix<Q5>>& basis) {
  Matrix<Q5> g(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) g(a, b) = inner(basis[a], basis[b]);
  return g;
}

/// c * sqrt(radicand) > rhs for c > 0, by squaring.
bool scaled_root_exceeds(const Rational& c, const Rational& radicand, const Rational& rhs) {
  if (sgn(rhs) < 0) return true;
  return c * c * radicand > rhs * rhs;
}

Rational level(int p, int q) { return Rational(p * p + 3 * p + q * q + q) + make_rational(49, 20); }

}  // namespace

const BergerModel& berger_model() {
  static const BergerModel model = [] {
    BergerModel m;
    const std::vector<Matrix<Rational>> s = {
        unit(3, 0, 1) + unit(3, 1, 0), unit(3, 0, 2) + unit(3, 2, 0), unit(3, 1, 2) + unit(3, 2, 1),
        unit(3, 0, 0) - unit(3, 1, 1), unit(3, 0, 0) + unit(3, 1, 1) - unit(3, 2, 2) * Rational(2)};
    m.q = Matrix<Rational>(5, 5);
    for (std::size_t k = 0; k < 5; ++k) m.q(k, k) = trace_product(s[k], s[k]);
    auto rho = [&](const Matrix<Rational>& l) {
      Matrix<Rational> r(5, 5);
      for (std::size_t j = 0; j < 5; ++j) {
        const Matrix<Rational> y = commutator(l, s[j]);
        for (std::size_t i = 0; i < 5; ++i) r(i, j) = trace_product(y, s[i]) / m.q(i, i);
      }
      return r;
    };
    const Matrix<Rational> qinv = inverse(m.q);
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b) m.g.push_back(qinv * (unit(5, a, b) - unit(5, b, a)));
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}}) m.h.push_back(rho(unit(3, a, b) - unit(3, b, a)));

    Matrix<Rational> pairing(3, m.g.size());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < m.g.size(); ++k) pairing(i, k) = killing_half_trace(m.h[i], m.g[k]);
    const Matrix<Rational> ns = nullspace(pairing);
    for (std::size_t c = 0; c < ns.cols(); ++c) m.p.push_back(combine(m.g, ns.column(c)));

    // L_12 rotates the planes {S_1, S_4} and {S_2, S_3} with speeds 2 and 1
    const Matrix<Rational>& l12 = m.h[0];
    m.t1 = Matrix<Rational>(5, 5);
    m.t2 = Matrix<Rational>(5, 5);
    for (std::size_t i : {0, 3})
      for (std::size_t j : {0, 3}) m.t1(i, j) = l12(i, j) / 2;
    for (std::size_t i : {1, 2})
      for (std::size_t j : {1, 2}) m.t2(i, j) = l12(i, j);
    if (m.t1 * Rational(2) + m.t2 != l12) throw ConsistencyError("Berger model: L_12 is not 2 t1 + t2");

    Matrix<Rational> map(1, 2);
    map(0, 0) = 2;
    map(0, 1) = 1;
    m.embedding = CartanEmbedding{RootSystem::build(Family::B, 2), RootSystem::build(Family::B, 1, make_rational(1, 5)), map};
    m.embedding.verify();
    return m;
  }();
  return model;
}

BergerFrame solve_berger_frame(const BergerModel& model) {
  const std::vector<Matrix<Q5>> p = lift(model.p);
  const Matrix<Q5> gp_inv = inverse(gram(p));
  const Matrix<Q5> gp = gram(p);
  auto project = [&](const Matrix<Q5>& y) { return combine(p, coordinates(p, gp_inv, y)); };
  auto norm2 = [&](const std::vector<Q5>& v) {
    Q5 s(0);
    for (std::size_t a = 0; a < 7; ++a)
      for (std::size_t b = 0; b < 7; ++b) s += v[a] * gp(a, b) * v[b];
    return s;
  };
  auto normalize = [&](std::vector<Q5> v) -> std::optional<std::vector<Q5>> {
    Q5 r;
    if (!qsqrt5_sqrt(norm2(v), r) || is_zero(r)) return std::nullopt;
    for (auto& x : v) x /= r;
    return v;
  };

  const Matrix<Q5> th = lift(model.h[0]);
  Matrix<Q5> ad(7, 7);
  for (std::size_t j = 0; j < 7; ++j) {
    std::vector<Q5> c = coordinates(p, gp_inv, commutator(th, p[j]));
    for (std::size_t i = 0; i < 7; ++i) ad(i, j) = c[i];
  }
  auto plane = [&](int m) {
    Matrix<Q5> k = nullspace(ad * ad + Matrix<Q5>::identity(7) * Q5(Rational(m * m)));
    if (k.cols() != 2) throw ConsistencyError("Berger frame: weight plane " + std::to_string(m) + " is not two-dimensional");
    return k;
  };
  auto unit_in_plane = [&](const Matrix<Q5>& k) -> std::optional<std::vector<Q5>> {
    static const int order[] = {0, 1, -1, 2, -2, 3, -3};
    for (int a : order)
      for (int b : order)
        for (int c : order)
          for (int d : order) {
            if (a == 0 && b == 0 && c == 0 && d == 0) continue;
            const Q5 x{Rational(a), Rational(b)}, y{Rational(c), Rational(d)};
            std::vector<Q5> v(7);
            for (std::size_t i = 0; i < 7; ++i) v[i] = x * k(i, 0) + y * k(i, 1);
            if (auto u = normalize(v)) return u;
          }
    return std::nullopt;
  };

  const Matrix<Q5> zero = nullspace(ad);
  if (zero.cols() != 1) throw ConsistencyError("Berger frame: zero weight space of p is not a line");
  auto v1 = normalize(zero.column(0));
  auto v2 = unit_in_plane(plane(3));
  auto v3 = unit_in_plane(plane(2));
  if (!v3) v3 = unit_in_plane(plane(1));
  if (!v1 || !v2 || !v3) throw SearchError("Berger frame: no unit vector over Q(sqrt5) in the searched range");

  const Q5 sqrt5 = Q5::root();
  auto product = [&](const Matrix<Q5>& a, const Matrix<Q5>& b) { return project(commutator(a, b)) * sqrt5; };
  std::vector<Matrix<Q5>> e(7);
  e[0] = combine(p, *v1);
  e[1] = combine(p, *v2);
  e[2] = combine(p, *v3);
  e[3] = product(e[0], e[1]);
  e[4] = product(e[1], e[2]);
  e[5] = product(e[2], e[3]);
  e[6] = product(e[3], e[4]);

  const std::vector<Matrix<Q5>> g = lift(model.g);
  const Matrix<Q5> gg_inv = inverse(gram(g));
  BergerFrame frame;
  for (const auto& x : e) frame.coefficients.push_back(coordinates(g, gg_inv, x));
  return frame;
}

BergerFrame parse_berger_fixture(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigurationError(std::string("Berger fixture is not valid JSON: ") + ex.what());
  }
  if (j.value("format", "") != "diracbound-berger-frame")
    throw ConfigurationError("Berger fixture has an unknown format");
  BergerFrame frame;
  frame.clifford = j.value("clifford", "right");
  const auto& vectors = j.at("frame");
  if (!vectors.is_array() || vectors.size() != 7) throw ConfigurationError("Berger fixture must list 7 frame vectors");
  for (const auto& v : vectors) {
    if (!v.is_array() || v.size() != 10) throw ConfigurationError("Berger frame vectors need 10 coefficients");
    std::vector<Q5> row;
    for (const auto& c : v) {
      if (!c.is_array() || c.size() != 2) throw ConfigurationError("Berger coefficient must be [rational, rational]");
      row.emplace_back(parse_rational(c[0].get<std::string>()), parse_rational(c[1].get<std::string>()));
    }
    frame.coefficients.push_back(std::move(row));
  }
  return frame;
}

std::string berger_fixture_json(const BergerFrame& frame) {
  nlohmann::ordered_json j;
  j["format"] = "diracbound-berger-frame";
  j["version"] = 1;
  j["basis"] = "g_ab = Q^-1 (E_ab - E_ba), a < b, on traceless symmetric 3x3 matrices; entries [a, b] mean a + b sqrt5";
  j["clifford"] = frame.clifford;
  nlohmann::ordered_json vectors = nlohmann::ordered_json::array();
  for (const auto& row : frame.coefficients) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back({to_string(c.a()), to_string(c.b())});
    vectors.push_back(r);
  }
  j["frame"] = vectors;
  return j.dump(2) + "\n";
}

BergerFrame shipped_berger_frame() { return parse_berger_fixture(detail::embedded_berger_fixture_json()); }

BergerGeometry::BergerGeometry(const BergerModel& model, const BergerFrame& frame)
    : model_(std::make_shared<BergerModel>(model)) {
  if (frame.coefficients.size() != 7) throw ConfigurationError("Berger frame needs 7 vectors");
  const std::vector<Matrix<Q5>> g = lift(model.g);
  for (const auto& row : frame.coefficients) {
    if (row.size() != g.size()) throw ConfigurationError("Berger frame vector has the wrong length");
    e_.push_back(combine(g, row));
  }
  h_ = lift(model.h);
  for (std::size_t i = 1; i <= 7; ++i) {
    if (frame.clifford == "right") c_.push_back(lift(table_.right_multiplication(i)));
    else if (frame.clifford == "left") c_.push_back(lift(table_.left_multiplication(i)));
    else throw ConfigurationError("Berger frame: Clifford side must be 'right' or 'left'");
  }
  c_ijk_.assign(343, Q5(0));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      const Matrix<Q5> b = commutator(e_[i], e_[j]);
      for (std::size_t k = 0; k < 7; ++k) c_ijk_[(i * 7 + j) * 7 + k] = inner(b, e_[k]);
    }
  a_ = Matrix<Q5>(8, 8);
  const Q5 twelfth(make_rational(1, 12));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      for (std::size_t k = 0; k < 7; ++k)
        if (!is_zero(structure(i, j, k))) a_ += c_[i] * c_[j] * c_[k] * (structure(i, j, k) * twelfth);
}

std::vector<Q5> BergerGeometry::p_coordinates(const Matrix<Q5>& y) const {
  std::vector<Q5> c(7);
  for (std::size_t k = 0; k < 7; ++k) c[k] = inner(y, e_[k]);
  return c;
}

Matrix<Q5> BergerGeometry::bracket_p(std::size_t i, std::size_t j) const {
  Matrix<Q5> b(5, 5);
  for (std::size_t k = 0; k < 7; ++k)
    if (!is_zero(structure(i, j, k))) b += e_[k] * structure(i, j, k);
  return b;
}

Matrix<Q5> BergerGeometry::ad_tilde(const Matrix<Q5>& x) const {
  Matrix<Q5> s(8, 8);
  const Q5 quarter(make_rational(1, 4));
  for (std::size_t i = 0; i < 7; ++i) {
    const std::vector<Q5> c = p_coordinates(commutator(x, e_[i]));
    for (std::size_t j = 0; j < 7; ++j)
      if (!is_zero(c[j])) s += c_[i] * c_[j] * (c[j] * quarter);
  }
  return s;
}

Matrix<Q5> BergerGeometry::operator_a_adjoint_form() const {
  Matrix<Q5> a(8, 8);
  for (std::size_t i = 0; i < 7; ++i) a += c_[i] * ad_tilde(e_[i]);
  return a * Q5(make_rational(1, 3));
}

CheckReport BergerGeometry::verify_octonion_bracket() const {
  CheckReport r{"p-bracket equals octonion product over sqrt5", true, 0, {}};
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      ++r.checked;
      if (inner(e_[i], e_[j]) != Q5(Rational(i == j ? 1 : 0)))
        r.fail("<e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + "> = " + inner(e_[i], e_[j]).str());
    }
    for (std::size_t a = 0; a < h_.size(); ++a) {
      ++r.checked;
      if (!is_zero(inner(e_[i], h_[a]))) r.fail("e" + std::to_string(i + 1) + " is not orthogonal to h");
    }
  }
  const Q5 sqrt5 = Q5::root();
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      ++r.checked;
      std::vector<Q5> lhs(7);
      for (std::size_t k = 0; k < 7; ++k) lhs[k] = structure(i, j, k) * sqrt5;
      std::vector<Q5> rhs(7, Q5(0));
      const auto prod = table_.product(i + 1, j + 1);
      if (prod.index != 0) rhs[prod.index - 1] = Q5(Rational(prod.sign));
      if (lhs != rhs) {
        std::vector<Q5> diff(7);
        for (std::size_t k = 0; k < 7; ++k) diff[k] = lhs[k] - rhs[k];
        r.fail("(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + "): residual " + coords_string(diff));
      }
    }
  // h acts on p by derivations of the octonion product, i.e. through G2
  for (std::size_t a = 0; a < h_.size(); ++a) {
    Matrix<Q5> d(8, 8);
    for (std::size_t i = 0; i < 7; ++i) {
      const std::vector<Q5> c = p_coordinates(commutator(h_[a], e_[i]));
      for (std::size_t j = 0; j < 7; ++j) d(j + 1, i + 1) = c[j];
    }
    auto apply = [&](const std::vector<Q5>& v) {
      std::vector<Q5> out(8, Q5(0));
      for (std::size_t s = 0; s < 8; ++s)
        for (std::size_t t = 0; t < 8; ++t)
          if (!is_zero(d(t, s)) && !is_zero(v[s])) out[t] += d(t, s) * v[s];
      return out;
    };
    for (std::size_t i = 1; i < 8; ++i)
      for (std::size_t j = 1; j < 8; ++j) {
        ++r.checked;
        std::vector<Q5> x(8, Q5(0)), y(8, Q5(0));
        x[i] = Q5(1);
        y[j] = Q5(1);
        std::vector<Q5> lhs = apply(table_.multiply(x, y));
        std::vector<Q5> r1 = table_.multiply(apply(x), y), r2 = table_.multiply(x, apply(y));
        for (std::size_t k = 0; k < 8; ++k) r1[k] += r2[k];
        if (lhs != r1) r.fail("h_" + std::to_string(a + 1) + " is not a derivation on (e" + std::to_string(i) + ", e" + std::to_string(j) + ")");
      }
  }
  return r;
}

CheckReport BergerGeometry::verify_cayley_clifford() const {
  CheckReport r{"Clifford multiplication is Cayley multiplication", true, 0, {}};
  const Matrix<Q5> id = Matrix<Q5>::identity(8);
  for (std::size_t i = 0; i < 7; ++i) {
    ++r.checked;
    if (c_[i].transpose() != -c_[i]) r.fail("c" + std::to_string(i + 1) + " is not skew");
    for (std::size_t j = 0; j < 7; ++j) {
      ++r.checked;
      if (c_[i] * c_[j] + c_[j] * c_[i] != (i == j ? id * Q5(-2) : Matrix<Q5>(8, 8)))
        r.fail("Clifford relation fails for (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    }
  }
  const bool right = true;
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t s = 0; s < 8; ++s) {
      ++r.checked;
      std::vector<Rational> expected =
          right ? table_.multiply(octonion_basis(s), octonion_basis(i)) : table_.multiply(octonion_basis(i), octonion_basis(s));
      std::vector<Q5> col = c_[i - 1].column(s);
      for (std::size_t t = 0; t < 8; ++t)
        if (col[t] != Q5(expected[t])) {
          r.fail("c" + std::to_string(i) + " e" + std::to_string(s) + " differs from the Cayley product");
          break;
        }
    }
  // anticommutator through Cayley identities: (s e_j) e_i + (s e_i) e_j = -2 delta_ij s
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = 1; j <= 7; ++j)
      for (std::size_t s = 0; s < 8; ++s) {
        ++r.checked;
        auto a = table_.multiply(table_.multiply(octonion_basis(s), octonion_basis(j)), octonion_basis(i));
        auto b = table_.multiply(table_.multiply(octonion_basis(s), octonion_basis(i)), octonion_basis(j));
        for (std::size_t t = 0; t < 8; ++t) a[t] += b[t] + (i == j && t == s ? Rational(2) : Rational(0));
        if (std::any_of(a.begin(), a.end(), [](const Rational& x) { return !is_zero(x); }))
          r.fail("Cayley anticommutator fails for (" + std::to_string(i) + ", " + std::to_string(j) + ") on e" + std::to_string(s));
      }
  // the isotropy spin action is the derivation action of G2 on O = R + I
  for (std::size_t a = 0; a < h_.size(); ++a) {
    ++r.checked;
    Matrix<Q5> d(8, 8);
    for (std::size_t i = 0; i < 7; ++i) {
      const std::vector<Q5> c = p_coordinates(commutator(h_[a], e_[i]));
      for (std::size_t j = 0; j < 7; ++j) d(j + 1, i + 1) = c[j];
    }
    if (ad_tilde(h_[a]) != d) r.fail("spin action of h_" + std::to_string(a + 1) + " is not the octonion derivation");
  }
  return r;
}

CheckReport BergerGeometry::verify_structure_tensor() const {
  CheckReport r{"structure tensor", true, 0, {}};
  const Q5 minus_inv_sqrt5(Rational(0), make_rational(-1, 5));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      for (std::size_t k = 0; k < 7; ++k) {
        ++r.checked;
        const Q5& c = structure(i, j, k);
        if (c != -structure(j, i, k) || c != -structure(i, k, j) || c != structure(j, k, i))
          r.fail("c_" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1) + " is not totally antisymmetric");
        const auto ij = table_.multiply(octonion_basis(i + 1), octonion_basis(j + 1));
        const Rational re = table_.multiply(ij, octonion_basis(k + 1))[0];
        if (c != minus_inv_sqrt5 * Q5(re))
          r.fail("c_" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1) + " = " + c.str() +
                 " but -Re((e_i e_j) e_k)/sqrt5 = " + (minus_inv_sqrt5 * Q5(re)).str());
      }
  return r;
}

CheckReport BergerGeometry::verify_operator_a() const {
  CheckReport r{"operator A", true, 0, {}};
  auto check = [&](bool ok, const std::string& what) {
    ++r.checked;
    if (!ok) r.fail(what);
  };
  check(a_ == operator_a_adjoint_form(), "cubic and adjoint formulas for A disagree");
  check(a_.transpose() == a_, "A is not symmetric");
  for (std::size_t k = 0; k < h_.size(); ++k) {
    const Matrix<Q5> s = ad_tilde(h_[k]);
    check(a_ * s == s * a_, "A does not commute with the spin action of h_" + std::to_string(k + 1));
  }
  Matrix<Q5> expected = Matrix<Q5>::identity(8) * Q5(-1);
  expected(0, 0) = Q5(7);
  expected = expected * inverse_two_sqrt5();
  check(a_ == expected, "A is not (1/(2 sqrt5)) diag(7, -1, ..., -1)");
  const Matrix<Q5> id = Matrix<Q5>::identity(8);
  check(8 - rank(a_ - id * (Q5(7) * inverse_two_sqrt5())) == 1, "eigenvalue 7/(2 sqrt5) does not have multiplicity 1");
  check(8 - rank(a_ + id * inverse_two_sqrt5()) == 7, "eigenvalue -1/(2 sqrt5) does not have multiplicity 7");
  check(is_zero(trace(a_)), "tr A is not zero");
  return r;
}

std::shared_ptr<const ReductiveBlock> BergerGeometry::block(int p, int q) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = blocks_.find({p, q});
    if (it != blocks_.end()) return it->second;
  }
  auto b = std::make_shared<const ReductiveBlock>(reductive_block(*this, p, q));
  std::lock_guard<std::mutex> lock(mutex_);
  return blocks_.emplace(std::pair{p, q}, std::move(b)).first->second;
}

BergerRepresentation berger_representation(int p, int q) {
  if (q < 0 || p < q) throw DomainError("gamma_{p,q} needs p >= q >= 0");
  BergerRepresentation r{p, q, 0, {}};
  if (p == 0) {
    r.dimension = 1;
    r.action = [](const Matrix<Q5>&) { return Matrix<Q5>(1, 1); };
  } else if (p == 1 && q == 0) {
    r.dimension = 5;
    r.action = [](const Matrix<Q5>& x) { return x; };
  } else if (p == 1 && q == 1) {
    r.dimension = 10;
    r.action = [](const Matrix<Q5>& x) { return exterior_power_action(x, 2); };
  } else if (p == 2 && q == 0) {
    // Q-traceless part of Sym^2 R^5, basis e_a e_b with a <= b
    std::vector<std::pair<std::size_t, std::size_t>> mono;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a; b < 5; ++b) {
        index.emplace(std::pair{a, b}, mono.size());
        mono.emplace_back(a, b);
      }
    const Matrix<Rational>& qf = berger_model().q;
    Matrix<Q5> trace_row(1, mono.size());
    for (std::size_t a = 0; a < 5; ++a) trace_row(0, index.at({a, a})) = Q5(qf(a, a));
    const Matrix<Q5> basis = nullspace(trace_row);
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < basis.cols(); ++k)
      for (std::size_t i = 0; i < basis.rows(); ++i)
        if (basis(i, k) == Q5(1) && std::none_of(free.begin(), free.end(), [i](std::size_t f) { return f == i; })) {
          bool unit_row = true;
          for (std::size_t other = 0; other < basis.cols(); ++other)
            if (other != k && !is_zero(basis(i, other))) unit_row = false;
          if (unit_row) {
            free.push_back(i);
            break;
          }
        }
    r.dimension = basis.cols();
    r.action = [mono, index, basis, free](const Matrix<Q5>& x) {
      Matrix<Q5> m(mono.size(), mono.size());
      auto add = [&](std::size_t a, std::size_t b, std::size_t col, const Q5& c) {
        m(index.at({std::min(a, b), std::max(a, b)}), col) += c;
      };
      for (std::size_t col = 0; col < mono.size(); ++col) {
        const auto [a, b] = mono[col];
        for (std::size_t c = 0; c < 5; ++c) {
          if (!is_zero(x(c, a))) add(c, b, col, x(c, a));
          if (!is_zero(x(c, b))) add(a, c, col, x(c, b));
        }
      }
      const Matrix<Q5> image = m * basis;
      Matrix<Q5> out(free.size(), free.size());
      for (std::size_t i = 0; i < free.size(); ++i)
        for (std::size_t j = 0; j < free.size(); ++j) out(i, j) = image(free[i], j);
      return out;
    };
  } else {
    throw UnsupportedError("no model for gamma_{" + std::to_string(p) + "," + std::to_string(q) + "}");
  }
  return r;
}

Rational berger_reductive_square(int p, int q) {
  const CartanEmbedding& emb = berger_model().embedding;
  const Weight gamma = Weight::integral({p, q});
  return emb.g.norm2(gamma + emb.g.rho()) - emb.h.norm2(emb.h.rho());
}

ReductiveBlock reductive_block(const BergerGeometry& geo, int p, int q, bool kostant) {
  const BergerRepresentation rep = berger_representation(p, q);
  const std::size_t d = rep.dimension;
  const std::size_t n = d * 8;
  const Matrix<Q5> id_v = Matrix<Q5>::identity(d);
  const Matrix<Q5> id_s = Matrix<Q5>::identity(8);

  Matrix<Q5> cubic(n, n);
  for (std::size_t i = 0; i < 7; ++i) cubic += kron(rep.action(geo.frame()[i]), geo.clifford()[i]);
  const Matrix<Q5> a_full = kron(id_v, geo.operator_a());
  cubic += a_full;

  std::vector<Matrix<Q5>> diag;
  for (const auto& f : geo.h_basis()) diag.push_back(kron(rep.action(f), id_s) + kron(id_v, geo.ad_tilde(f)));
  Matrix<Q5> stacked(diag.size() * n, n);
  for (std::size_t a = 0; a < diag.size(); ++a) stacked.set_block(a * n, 0, diag[a]);
  const Matrix<Q5> inv = nullspace(stacked);

  ReductiveBlock b;
  b.p = p;
  b.q = q;
  b.hom_dimension = inv.cols();
  b.formula = level(p, q);
  b.casimir_route = berger_reductive_square(p, q);
  b.square_scalar = true;
  if (b.hom_dimension > 0) {
    auto c = solve(inv, cubic * inv);
    auto a = solve(inv, a_full * inv);
    if (!c || !a) throw ConsistencyError("cubic Dirac operator does not preserve the invariants");
    b.cubic = std::move(*c);
    b.a_block = std::move(*a);
    b.square_scalar = b.cubic * b.cubic == Matrix<Q5>::identity(b.hom_dimension) * Q5(b.formula);
  }
  if (kostant) {
    const Matrix<Q5> ginv = inverse(gram(geo.h_basis()));
    Matrix<Q5> omega(n, n);
    for (std::size_t a = 0; a < diag.size(); ++a)
      for (std::size_t c = 0; c < diag.size(); ++c)
        if (!is_zero(ginv(a, c))) omega -= diag[a] * diag[c] * ginv(a, c);
    b.kostant = cubic * cubic + omega == Matrix<Q5>::identity(n) * Q5(b.formula);
  }
  return b;
}

DLambdaResult d_lambda_minimum(const BergerGeometry& geo, const Rational& lambda, const Rational& bound) {
  if (bound < make_rational(249, 20))
    throw SearchError("incomplete certificate: the Casimir bound must reach 249/20");
  DLambdaResult r;
  r.lambda = lambda;
  r.bound = bound;
  const Rational mu = 3 * lambda - 1;
  std::optional<Rational> tail;
  bool found = false;
  for (int p = 0;; ++p) {
    if (level(p, 0) > bound) {
      if (!tail || level(p, 0) < *tail) tail = level(p, 0);
      break;
    }
    for (int q = 0; q <= p; ++q) {
      if (level(p, q) > bound) {
        if (!tail || level(p, q) < *tail) tail = level(p, q);
        continue;
      }
      auto b = geo.block(p, q);
      if (b->hom_dimension == 0) continue;
      const Matrix<Q5> d = b->cubic + b->a_block * Q5(mu);
      const Matrix<Q5> sq = d * d;
      if (sq != Matrix<Q5>::identity(sq.rows()) * sq(0, 0))
        throw UnsupportedError("(D^lambda)^2 is not scalar on gamma_{" + std::to_string(p) + "," + std::to_string(q) + "}");
      const Q5 value = sq(0, 0);
      r.blocks.push_back({{p, q}, value});
      if (!found || value < r.minimum) {
        r.minimum = value;
        r.minimizers = {{p, q}};
        found = true;
      } else if (value == r.minimum) {
        r.minimizers.emplace_back(p, q);
      }
    }
  }
  if (!found) throw SearchError("no contributing representation below the bound");
  r.tail_level = *tail;
  // |eigenvalue| >= sqrt(T) - |mu| |A| on the rest, |A| = 7/(2 sqrt5)
  const Q5 k = Q5(Rational(abs(mu) * 7)) * inverse_two_sqrt5();
  Q5 root;
  if (qsqrt5_sqrt(r.minimum, root)) {
    const Q5 gap = Q5(r.tail_level) - r.minimum - k * k - Q5(2) * k * root;
    r.tail_certified = sign(gap) > 0;
  }
  return r;
}

BergerInequalities berger_block_inequalities() {
  BergerInequalities r;
  // multiply through by 4 sqrt5
  r.gamma11 = Rational(26) - 1 > 21;
  r.gamma20 = scaled_root_exceeds(Rational(2), Rational(249), Rational(7 + 21));
  return r;
}

std::shared_ptr<const SymmetricPair<QSqrt5i>> berger_pair(const BergerGeometry& geo) {
  using C = QSqrt5i;
  auto widen = [](const Matrix<Q5>& m) { return embed_matrix<C>(m); };
  const BergerModel& model = geo.model();
  auto pair = std::make_shared<SymmetricPair<C>>();
  pair->id = "Berger";
  pair->description = "SO(5)/SO(3)";
  std::vector<Matrix<C>> hb, gb;
  for (const auto& f : geo.h_basis()) hb.push_back(widen(f));
  for (const auto& e : geo.frame()) pair->p.push_back(widen(e));
  gb = hb;
  gb.insert(gb.end(), pair->p.begin(), pair->p.end());
  pair->embedding = model.embedding;
  pair->g = MatrixLieAlgebra<C>("so(5)", gb, {widen(lift(model.t1)), widen(lift(model.t2))}, model.embedding.g);
  pair->h = MatrixLieAlgebra<C>("so(3)", hb, {hb.front()}, model.embedding.h);
  for (const auto& c : geo.clifford()) pair->clifford.generators.push_back(widen(c));
  pair->symmetric = false;
  pair->verify();
  return pair;
}

BergerReport berger_verify(const BergerFrame& frame) {
  BergerReport report;
  {
    CheckReport r{"octonion table", true, 0, {}};
    for (auto& f : OctonionTable().verify()) r.fail(f);
    r.checked = 1;
    report.checks.push_back(std::move(r));
  }
  const BergerGeometry geo(berger_model(), frame);
  report.checks.push_back(geo.verify_octonion_bracket());
  report.checks.push_back(geo.verify_cayley_clifford());
  report.checks.push_back(geo.verify_structure_tensor());
  report.checks.push_back(geo.verify_operator_a());

  // a corrupted frame can break the exact solves below; report that as a failed check
  auto guarded = [&report](CheckReport c, auto&& body) {
    try {
      body(c);
    } catch (const Error& ex) {
      c.fail(ex.what());
    }
    report.checks.push_back(std::move(c));
  };

  guarded({"reductive blocks", true, 0, {}}, [&](CheckReport& blocks) {
    const std::pair<int, int> gammas[] = {{0, 0}, {1, 0}, {1, 1}, {2, 0}};
    const std::size_t expected_hom[] = {1, 0, 1, 0};
    for (std::size_t k = 0; k < 4; ++k) {
      const auto [p, q] = gammas[k];
      const std::string label = "gamma_{" + std::to_string(p) + "," + std::to_string(q) + "}";
      auto b = geo.block(p, q);
      blocks.checked += 4;
      if (b->hom_dimension != expected_hom[k]) blocks.fail(label + ": Hom space has dimension " + std::to_string(b->hom_dimension));
      if (!b->square_scalar) blocks.fail(label + ": cubic Dirac square is not " + to_string(b->formula));
      if (!b->kostant) blocks.fail(label + ": Kostant identity fails on the full tensor space");
      if (b->formula != b->casimir_route) blocks.fail(label + ": closed form differs from |gamma+rho_G|^2 - |rho_H|^2");
      report.blocks.push_back(*b);
    }
  });

  guarded({"Riemannian Dirac eigenvalues", true, 0, {}}, [&](CheckReport& values) {
    {
      const Q5 half(make_rational(1, 2));
      auto b00 = geo.block(0, 0);
      auto b11 = geo.block(1, 1);
      if (b00->hom_dimension != 1 || b11->hom_dimension != 1)
        throw ConsistencyError("gamma_{0,0} and gamma_{1,1} need one-dimensional Hom spaces");
      const Q5 v00 = (b00->cubic + b00->a_block * half)(0, 0);
      ++values.checked;
      if (v00 != Q5(21) * inverse_two_sqrt5() * half) values.fail("trivial representation gives " + v00.str() + ", not 21/(4 sqrt5)");
      const Q5 v11 = (b11->cubic + b11->a_block * half)(0, 0);
      const Q5 abs11 = sign(v11) < 0 ? -v11 : v11;
      const Q5 triangle = (Q5(13) - half) * inverse_two_sqrt5();
      ++values.checked;
      if (abs11 < triangle) values.fail("gamma_{1,1} eigenvalue " + v11.str() + " is below the triangle bound");
      ++values.checked;
      if (!(triangle > v00)) values.fail("triangle bound on gamma_{1,1} does not exceed 21/(4 sqrt5)");
    }
    const BergerInequalities ineq = berger_block_inequalities();
    values.checked += 2;
    if (!ineq.gamma11) values.fail("13/(2 sqrt5) - 1/(4 sqrt5) > 21/(4 sqrt5) fails");
    if (!ineq.gamma20) values.fail("sqrt249/(2 sqrt5) - 7/(4 sqrt5) > 21/(4 sqrt5) fails");
  });

  guarded({"D^lambda sweep", true, 0, {}}, [&](CheckReport& sweep) {
    for (int k = 45; k <= 55; ++k) {
      const Rational lambda = make_rational(k, 100);
      DLambdaResult d = d_lambda_minimum(geo, lambda);
      const Q5 expected(make_rational(441, 20) * lambda * lambda);
      sweep.checked += 2;
      if (d.minimum != expected) sweep.fail("lambda = " + to_string(lambda) + ": minimum " + d.minimum.str() + " != " + expected.str());
      if (!d.tail_certified) sweep.fail("lambda = " + to_string(lambda) + ": tail bound not certified");
      report.sweep.push_back(std::move(d));
    }
    {
      const DLambdaResult at_half = d_lambda_minimum(geo, make_rational(1, 2));
      const DLambdaResult past = d_lambda_minimum(geo, make_rational(51, 100));
      ++sweep.checked;
      if (!(past.minimum > at_half.minimum)) sweep.fail("lambda_1((D^{51/100})^2) does not exceed lambda_1(D^2)");
    }
  });

  CheckReport spinors{"spinor decomposition", true, 0, {}};
  try {
    const auto pair = berger_pair(geo);
    const SpinorDecomposition dec = spinor_decomposition(*pair);
    std::vector<std::uint64_t> dims;
    for (const auto& c : dec.components) {
      dims.push_back(c.dimension);
      ++spinors.checked;
      if (c.multiplicity != 1) spinors.fail("component " + c.highest_weight.str() + " has multiplicity " + std::to_string(c.multiplicity));
    }
    std::sort(dims.begin(), dims.end());
    ++spinors.checked;
    if (dims != std::vector<std::uint64_t>{1, 7}) spinors.fail("spinor components do not have dimensions 1 and 7");
    ++spinors.checked;
    try {
      (void)casimir_sigma(*pair);
      spinors.fail("isotropy Casimir is scalar on a non-symmetric pair");
    } catch (const DomainError&) {
    }
  } catch (const Error& ex) {
    spinors.fail(ex.what());
  }
  report.checks.push_back(std::move(spinors));
  return report;
}

}  // namespace diracbound
