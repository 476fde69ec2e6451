#include "diracbound/cli/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "diracbound/errors.hpp"

#ifndef DIRACBOUND_VERSION
#define DIRACBOUND_VERSION "0.0.0"
#endif

namespace diracbound {

const std::string& library_version() {
  static const std::string v = DIRACBOUND_VERSION;
  return v;
}

Json to_json(const Rational& q) { return Json{{"exact", to_string(q)}, {"decimal", q.get_d()}}; }

Json to_json(const QSqrt5& x) {
  return Json{{"exact", x.str()}, {"decimal", x.a().get_d() + x.b().get_d() * std::sqrt(5.0)}};
}

Json to_json(const Weight& w) { return w.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_object()) return parse_rational(j.at("exact").get<std::string>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ConfigurationError("expected an exact rational field");
}

Json ResultRecord::to_json(bool timing) const {
  Json j;
  j["command"] = command;
  j["space"] = space.empty() ? Json(nullptr) : Json(space);
  j["inputs"] = inputs;
  j["result"] = result;
  j["exact"] = exact;
  j["minimizers"] = minimizers;
  j["version"] = version;
  if (timing) j["timing_seconds"] = seconds;
  return j;
}

ResultRecord ResultRecord::from_json(const Json& j) {
  ResultRecord r;
  r.command = j.at("command").get<std::string>();
  r.space = j.at("space").is_null() ? "" : j.at("space").get<std::string>();
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  r.exact = j.at("exact").get<bool>();
  r.minimizers = j.at("minimizers");
  r.version = j.at("version").get<std::string>();
  return r;
}

namespace {

bool is_number_field(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("decimal"); }

std::string scalar(const Json& j) {
  if (is_number_field(j)) {
    std::ostringstream ss;
    ss << j["exact"].get<std::string>();
    const std::string exact = j["exact"].get<std::string>();
    if (exact.find_first_of("/s") != std::string::npos) ss << " (" << j["decimal"].get<double>() << ")";
    return ss.str();
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_object()) return !j.is_array() || std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
  if (is_number_field(j)) return true;
  return false;
}

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (is_flat(v)) {
      out << pad << it.key() << ": ";
      if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
      } else {
        out << scalar(v);
      }
      out << "\n";
    } else if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(out, v, indent + 2);
    } else {
      out << pad << it.key() << ":\n";
      for (const auto& row : v) {
        if (row.is_object() && !is_number_field(row)) {
          out << pad << "  -";
          bool first = true;
          for (auto f = row.begin(); f != row.end(); ++f) {
            if (is_flat(f.value())) {
              out << (first ? " " : ", ") << f.key() << "=";
              if (f.value().is_array()) {
                out << "[";
                for (std::size_t i = 0; i < f.value().size(); ++i) out << (i ? "; " : "") << scalar(f.value()[i]);
                out << "]";
              } else {
                out << scalar(f.value());
              }
              first = false;
            }
          }
          out << "\n";
        } else {
          out << pad << "  - " << scalar(row) << "\n";
        }
      }
    }
  }
}

}  // namespace

std::string ResultRecord::text() const {
  std::ostringstream out;
  out << command;
  if (!space.empty()) out << " " << space;
  out << "\n";
  render(out, result, 2);
  if (!minimizers.empty()) {
    out << "  minimizers: ";
    for (std::size_t i = 0; i < minimizers.size(); ++i) out << (i ? ", " : "") << scalar(minimizers[i]);
    out << "\n";
  }
  return out.str();
}

}  // namespace diracbound
