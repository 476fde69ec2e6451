#include "diracbound/cli/catalog.hpp"

#include <map>
#include <mutex>
#include <nlohmann/json.hpp>

#include "diracbound/berger/berger.hpp"
#include "embedded_data.hpp"

namespace diracbound {

std::vector<CatalogEntry> parse_catalog(const std::string& json_text) {
  std::vector<CatalogEntry> out;
  try {
    const auto j = nlohmann::json::parse(json_text);
    for (const auto& e : j.at("entries")) {
      CatalogEntry c;
      c.id = e.at("id").get<std::string>();
      c.g = e.at("G").get<std::string>();
      c.h = e.at("H").get<std::string>();
      c.rank_difference = e.at("rank_difference").get<int>();
      c.recipe = e.at("recipe").get<std::string>();
      c.gram_scale = parse_rational(e.value("gram_scale", "1"));
      if (e.contains("expected_lambda1") && !e["expected_lambda1"].is_null())
        c.expected_lambda1 = parse_rational(e["expected_lambda1"].get<std::string>());
      c.symmetric = e.value("symmetric", true);
      c.g_spin = e.value("g_spin", true);
      out.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigurationError(std::string("malformed catalog: ") + ex.what());
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(detail::embedded_catalog_json());
  return entries;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

std::optional<std::pair<std::string, std::string>> split_product(const std::string& id) {
  const auto x = id.find('x');
  if (x == std::string::npos || x == 0 || x + 1 == id.size()) return std::nullopt;
  return std::pair{id.substr(0, x), id.substr(x + 1)};
}

namespace {

std::shared_ptr<const CatalogPair> build_from_recipe(const CatalogEntry& e) {
  const auto colon = e.recipe.find(':');
  const std::string kind = e.recipe.substr(0, colon);
  if (kind == "berger" || !e.symmetric) throw DomainError(e.id + " is not symmetric; use berger verify");
  if (colon == std::string::npos) throw ConfigurationError("catalog recipe '" + e.recipe + "' has no size");
  const int n = std::stoi(e.recipe.substr(colon + 1));
  if (kind == "sphere") return sphere_pair(e.id, n);
  if (kind == "projective") return projective_pair(e.id, n);
  throw ConfigurationError("unknown catalog recipe '" + e.recipe + "'");
}

struct Registry {
  std::mutex mutex;
  std::map<std::string, std::shared_ptr<const CatalogPair>> pairs;
  std::map<std::string, std::shared_ptr<const SpinGeometry>> geometries;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::shared_ptr<const CatalogPair> catalog_pair(const std::string& id) {
  Registry& r = registry();
  {
    std::lock_guard<std::mutex> lock(r.mutex);
    if (auto it = r.pairs.find(id); it != r.pairs.end()) return it->second;
  }
  std::shared_ptr<const CatalogPair> pair;
  if (const CatalogEntry* e = find_entry(id)) pair = build_from_recipe(*e);
  else if (split_product(id)) throw DomainError(id + " is a product; its factors are handled separately");
  else pair = build_pair(id);
  std::lock_guard<std::mutex> lock(r.mutex);
  return r.pairs.emplace(id, std::move(pair)).first->second;
}

std::shared_ptr<const SpinGeometry> catalog_geometry(const std::string& id) {
  auto pair = catalog_pair(id);
  Registry& r = registry();
  {
    std::lock_guard<std::mutex> lock(r.mutex);
    if (auto it = r.geometries.find(id); it != r.geometries.end()) return it->second;
  }
  auto geo = std::make_shared<const SpinGeometry>(pair);
  std::lock_guard<std::mutex> lock(r.mutex);
  return r.geometries.emplace(id, std::move(geo)).first->second;
}

std::vector<std::string> validate_catalog() {
  std::vector<std::string> problems;
  for (const auto& e : catalog()) {
    try {
      if (!e.g_spin) problems.push_back(e.id + ": not G-spin");
      if (e.gram_scale != 1) problems.push_back(e.id + ": gram_scale is " + to_string(e.gram_scale));
      int rank_difference = 0;
      if (e.symmetric) {
        rank_difference = catalog_pair(e.id)->rank_difference();
      } else {
        const BergerGeometry geo(berger_model(), shipped_berger_frame());
        rank_difference = berger_pair(geo)->rank_difference();
      }
      if (rank_difference != e.rank_difference)
        problems.push_back(e.id + ": rank difference " + std::to_string(rank_difference) + ", catalog says " +
                           std::to_string(e.rank_difference));
    } catch (const Error& ex) {
      problems.push_back(e.id + ": " + ex.what());
    }
  }
  return problems;
}

}  // namespace diracbound
