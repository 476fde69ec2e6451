#include "diracbound/exact/rational.hpp"

#include <cctype>

#include "diracbound/errors.hpp"
#include "diracbound/exact/quadratic.hpp"

namespace diracbound {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw DomainError("malformed rational: " + std::string(text));
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator: " + std::string(text));
    result = Rational(n, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw DomainError("malformed decimal: " + std::string(text));
    mpz_class n(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
    result = Rational(n, d);
  } else {
    if (!all_digits(body)) throw DomainError("malformed rational: " + std::string(text));
    result = Rational(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

bool qsqrt5_sqrt(const QSqrt5& x, QSqrt5& root) {
  const Rational& p = x.a();
  const Rational& q = x.b();
  if (sgn(q) == 0) {
    Rational u;
    if (rational_sqrt(p, u)) {
      root = QSqrt5(u);
      return true;
    }
    Rational v;
    if (rational_sqrt(Rational(p / 5), v)) {
      root = QSqrt5(Rational(0), v);
      return true;
    }
    return false;
  }
  Rational n;
  if (!rational_sqrt(Rational(p * p - 5 * q * q), n)) return false;
  for (int s : {1, -1}) {
    Rational u2 = (p + s * n) / 2;
    Rational u;
    if (sgn(u2) <= 0 || !rational_sqrt(u2, u)) continue;
    Rational v = q / (2 * u);
    QSqrt5 r(u, v);
    if (r * r == x) {
      root = sign(r) < 0 ? -r : r;
      return true;
    }
  }
  return false;
}

}  // namespace diracbound
