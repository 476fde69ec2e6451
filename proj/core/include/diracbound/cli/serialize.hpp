#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "diracbound/exact/quadratic.hpp"
#include "diracbound/lie/weight.hpp"

namespace diracbound {

using Json = nlohmann::ordered_json;

const std::string& library_version();

/// {"exact": "p/q", "decimal": x}
Json to_json(const Rational& q);
/// {"exact": "a + b*sqrt5", "decimal": x}
Json to_json(const QSqrt5& x);
/// "(3/2, 1/2)"
Json to_json(const Weight& w);
template <class T>
Json to_json(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

/// Exact value of a field written by to_json(Rational).
Rational rational_from_json(const Json& j);

/// One command invocation; `passed` drives the exit code and is not serialized.
struct ResultRecord {
  std::string command;
  std::string space;
  Json inputs = Json::object();
  Json result = Json::object();
  Json minimizers = Json::array();
  bool exact = true;
  bool passed = true;
  std::string version = library_version();
  double seconds = 0;

  /// Fields {command, space, inputs, result, exact, minimizers, version}, plus timing on request.
  Json to_json(bool timing = false) const;
  static ResultRecord from_json(const Json& j);
  /// Indented plain-text rendering.
  std::string text() const;
};

}  // namespace diracbound
