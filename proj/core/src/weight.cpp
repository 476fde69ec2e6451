#include "diracbound/lie/weight.hpp"

#include <sstream>

#include "diracbound/errors.hpp"

namespace diracbound {

Weight Weight::doubled(std::vector<long long> twice) {
  Weight w;
  w.twice_ = std::move(twice);
  return w;
}

Weight Weight::integral(std::initializer_list<long long> coords) {
  return integral(std::vector<long long>(coords));
}

Weight Weight::integral(const std::vector<long long>& coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) w.twice_[i] = 2 * coords[i];
  return w;
}

Weight Weight::from_rationals(const std::vector<Rational>& coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Rational t = 2 * coords[i];
    if (t.get_den() != 1) throw DomainError("coordinate " + to_string(coords[i]) + " is not in (1/2)Z");
    if (!t.get_num().fits_slong_p()) throw DomainError("weight coordinate too large");
    w.twice_[i] = t.get_num().get_si();
  }
  return w;
}

Weight Weight::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') s.push_back(c);
  std::vector<Rational> coords;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  if (coords.empty()) throw DomainError("empty weight: " + text);
  return from_rationals(coords);
}

std::vector<Rational> Weight::rationals() const {
  std::vector<Rational> r;
  r.reserve(twice_.size());
  for (auto x : twice_) r.push_back(make_rational(static_cast<long>(x), 2));
  return r;
}

bool Weight::is_zero() const {
  for (auto x : twice_)
    if (x != 0) return false;
  return true;
}

bool Weight::is_integral() const {
  for (auto x : twice_)
    if (x % 2 != 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw DomainError("weight dimension mismatch");
  for (std::size_t i = 0; i < twice_.size(); ++i) twice_[i] += o.twice_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw DomainError("weight dimension mismatch");
  for (std::size_t i = 0; i < twice_.size(); ++i) twice_[i] -= o.twice_[i];
  return *this;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < twice_.size(); ++i) {
    if (i) s += ", ";
    s += twice_[i] % 2 == 0 ? std::to_string(twice_[i] / 2) : std::to_string(twice_[i]) + "/2";
  }
  return s + ")";
}

}  // namespace diracbound
