// One line per criterion; exit status is nonzero if any criterion fails.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "diracbound/berger/berger.hpp"
#include "diracbound/cli/catalog.hpp"
#include "diracbound/spin/spin_geometry.hpp"
#include "diracbound/topology/index.hpp"

using namespace diracbound;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (passed) detail << what;
    else detail << "; " << what;
    passed = false;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.passed) ++failures;
  std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title;
  std::cout << " (" << (o.note.empty() ? "" : o.note + ", ") << static_cast<int>(s * 1000) / 1000.0 << " s)";
  if (!o.passed) std::cout << " -- " << o.detail.str();
  std::cout << std::endl;
}

std::vector<Rational> component_values(const SpectralData& d) {
  std::vector<Rational> out;
  for (const auto& c : d.components) out.push_back(c.value.value_or(Rational(-1)));
  return out;
}

const std::vector<std::string> kSymmetric = {"S2", "S4", "S5", "S6", "CP3", "CP5"};

}  // namespace

int main() {
  criterion(1, "CP3 component table {24,16,16,24}, lambda1(CP3) = 16, lambda1(CP5) = 36", [](Outcome& o) {
    const SpectralData cp3 = lambda1(*catalog_geometry("CP3"));
    o.require(component_values(cp3) == std::vector<Rational>{24, 16, 16, 24}, "CP3 component values differ");
    o.require(cp3.lambda1 == 16, "lambda1(CP3) = " + to_string(cp3.lambda1));
    // 8m^2 - 4m(q+1) for q = 0..3 at m = 2, with the table symmetric in q -> 2m-1-q
    for (int q = 0; q < 4; ++q) {
      const int closed = 8 * 4 - 4 * 2 * (std::min(q, 3 - q) + 1);
      o.require(component_values(cp3)[q] == closed, "component q = " + std::to_string(q) + " differs from 8m^2 - 4m(q+1)");
    }
    const SpectralData cp5 = lambda1(*catalog_geometry("CP5"));
    o.require(cp5.lambda1 == 36, "lambda1(CP5) = " + to_string(cp5.lambda1));
  });

  criterion(2, "q = 0 component of CP^{2m-1} equals 8m^2 - 4m for m = 2, 3", [](Outcome& o) {
    for (int m : {2, 3}) {
      const SpectralData d = lambda1(*catalog_geometry("CP" + std::to_string(2 * m - 1)));
      o.require(!d.components.empty() && d.components.front().value == Rational(8 * m * m - 4 * m),
                "m = " + std::to_string(m));
    }
  });

  criterion(3, "(gamma D)^2 = (c_G^{gamma*} + c_H^sigma) Id exactly for Casimir <= 4 lambda1", [](Outcome& o) {
    std::size_t blocks = 0;
    std::string per_space;
    for (const auto& id : kSymmetric) {
      const std::size_t before = blocks;
      const auto geo = catalog_geometry(id);
      const Rational bound = lambda1(*geo).lambda1 * 4;
      for (const auto& gamma : admissible_weights(*geo, bound)) {
        const DiracBlock b = dirac_block(*geo, gamma);
        const auto residual = b.square - Matrix<ComplexRational>::identity(b.square.rows()) * ComplexRational(b.expected);
        o.require(residual.is_zero_matrix(), id + " gamma " + gamma.str());
        ++blocks;
      }
      per_space += (per_space.empty() ? "" : " ") + id + ":" + std::to_string(blocks - before);
      o.require(blocks > before, id + ": no admissible weights");
    }
    o.note = std::to_string(blocks) + " blocks, " + per_space;
  });

  criterion(4, "Vafa-Witten bound on S4, S6, CP3 with 1000 seeded mu; equality exactly at mu = 1", [](Outcome& o) {
    for (const std::string id : {"S4", "S6", "CP3"}) {
      const auto geo = catalog_geometry(id);
      const SpectralData d = lambda1(*geo);
      const Weight& gamma = d.minimizers.front();
      const std::size_t n = geo->pair().dimension();
      const auto ones = vafa_witten_operator(*geo, gamma, std::vector<Rational>(n, Rational(1)), d.lambda1);
      o.require(ones.exact_equality, id + ": mu = 1 is not an exact equality");
      std::mt19937_64 rng(20240607);
      std::uniform_int_distribution<long> num(1, 1000000);
      std::size_t violations = 0, equalities = 0;
      for (int s = 0; s < 1000; ++s) {
        std::vector<Rational> mu(n);
        bool all_one = true;
        for (auto& x : mu) {
          x = make_rational(num(rng), 1000000);
          all_one = all_one && x == 1;
        }
        const auto r = vafa_witten_operator(*geo, gamma, mu, d.lambda1);
        if (!r.within_bound) ++violations;
        if (r.equality && !all_one) ++equalities;
      }
      o.require(violations == 0, id + ": " + std::to_string(violations) + " violations");
      o.require(equalities == 0, id + ": " + std::to_string(equalities) + " sampled mu != 1 reach equality");
    }
  });

  criterion(5, "twisted kernel dimension 1 for every spinor component on S4, S6, CP3, CP5", [](Outcome& o) {
    for (const std::string id : {"S4", "S6", "CP3", "CP5"}) {
      const auto geo = catalog_geometry(id);
      for (const auto& c : geo->spinors().components) {
        const long long k = twisted_kernel_dimension(*geo, c.highest_weight);
        o.require(k == 1, id + " sigma " + c.highest_weight.str() + ": " + std::to_string(k));
      }
    }
  });

  criterion(6, "spinor multiplicities 2^[k/2], distinct components, 2 on S^{2m}, 2m on CP^{2m-1}", [](Outcome& o) {
    auto check = [&](const std::string& id, const SpinorDecomposition& s) {
      const long long expected = 1LL << (s.rank_difference / 2);
      for (std::size_t i = 0; i < s.components.size(); ++i) {
        o.require(s.components[i].multiplicity == expected, id + ": multiplicity of " + s.components[i].highest_weight.str());
        for (std::size_t j = 0; j < i; ++j)
          o.require(!(s.components[i].highest_weight == s.components[j].highest_weight), id + ": repeated component");
      }
    };
    for (const auto& e : catalog()) {
      if (!e.symmetric) continue;
      const SpinorDecomposition s = spinor_decomposition(*catalog_pair(e.id));
      check(e.id, s);
      if (e.recipe.rfind("sphere:", 0) == 0 && s.rank_difference == 0)
        o.require(s.components.size() == 2, e.id + ": expected 2 components");
      if (e.recipe.rfind("projective:", 0) == 0) {
        const int n = std::stoi(e.recipe.substr(11));  // CP^{n-1} = CP^{2m-1}
        o.require(s.components.size() == static_cast<std::size_t>(n), e.id + ": expected " + std::to_string(n) + " components");
      }
    }
    const BergerGeometry berger(berger_model(), shipped_berger_frame());
    check("Berger", spinor_decomposition(*berger_pair(berger)));
  });

  criterion(7, "Berger identities, A spectrum, reductive blocks, D^lambda sweep and strict increase", [](Outcome& o) {
    const BergerReport r = berger_verify(shipped_berger_frame());
    for (const auto& c : r.checks)
      o.require(c.passed, c.name + (c.residuals.empty() ? "" : ": " + c.residuals.front()));
    const BergerGeometry geo(berger_model(), shipped_berger_frame());
    const QSqrt5 unit(Rational(0), make_rational(1, 10));  // 1/(2 sqrt5)
    const auto id = Matrix<QSqrt5>::identity(8);
    const auto& a = geo.operator_a();
    o.require(8 - rank(a - id * (unit * QSqrt5(7))) == 1, "eigenvalue 7/(2 sqrt5) multiplicity");
    o.require(8 - rank(a + id * unit) == 7, "eigenvalue -1/(2 sqrt5) multiplicity");
    for (auto [p, q] : {std::pair{0, 0}, {1, 1}, {2, 0}}) {
      const ReductiveBlock b = reductive_block(geo, p, q);
      const Rational closed = Rational(p * p + 3 * p + q * q + q) + make_rational(49, 20);
      o.require(b.formula == closed && b.casimir_route == closed && b.kostant,
                "block (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
    for (int k = 45; k <= 55; ++k) {
      const Rational lambda = make_rational(k, 100);
      const DLambdaResult d = d_lambda_minimum(geo, lambda);
      o.require(d.minimum == QSqrt5(Rational(make_rational(441, 20) * lambda * lambda)) && d.tail_certified,
                "lambda = " + to_string(lambda));
    }
    o.require(d_lambda_minimum(geo, make_rational(51, 100)).minimum > d_lambda_minimum(geo, make_rational(1, 2)).minimum,
              "no strict increase past lambda = 1/2");
  });

  criterion(8, "ch(Sigma+-), ch(W), ch(W) + ch(W*) and both threshold tables", [](Outcome& o) {
    for (int m = 1; m <= 6; ++m) {
      const auto ring = TruncatedRing::sphere(m);
      const auto w = CohomologyClass::generator(ring);
      const auto half = CohomologyClass::constant(ring, Rational(1 << (m - 1)));
      o.require(spinor_chern_character(m, 1) == half + w && spinor_chern_character(m, -1) == half - w,
                "ch(Sigma) at m = " + std::to_string(m));
      const auto sum = chern_character_W(m) + chern_character_W_dual(m);
      o.require(sum == CohomologyClass::constant(sum.ring(), Rational(binomial(2 * m, m))), "ch(W) + ch(W*) at m = " + std::to_string(m));
    }
    const auto a = CohomologyClass::generator(TruncatedRing::projective(3));
    o.require(chern_character_W(2) == CohomologyClass::constant(a.ring(), 3) + a * Rational(2) - a * a * a * make_rational(2, 3),
              "ch(W) at m = 2");
    for (int m = 1; m <= 4; ++m)
      for (int k = 1; k <= 4; ++k) {
        o.require(sphere_threshold(m, k) == Integer(1 << (m - 1)) * (k - 1), "sphere threshold");
        Integer c = 1;  // binom(2m-1, m-1) by the product formula
        for (int i = 1; i <= m - 1; ++i) c = c * (2 * m - 1 - (m - 1) + i) / i;
        o.require(cpn_threshold(m, k).threshold == c * (k - 1), "CP threshold");
      }
  });

  return failures == 0 ? 0 : 1;
}
