#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diracbound/spin/spin_geometry.hpp"

namespace diracbound {

struct CatalogEntry {
  std::string id;
  std::string g;
  std::string h;
  int rank_difference = 0;
  std::string recipe;  // "sphere:N", "projective:N" or "berger"
  Rational gram_scale{1};
  std::optional<Rational> expected_lambda1;
  bool symmetric = true;
  bool g_spin = true;

  std::string description() const { return g + "/" + h; }
};

std::vector<CatalogEntry> parse_catalog(const std::string& json_text);
/// Shipped catalog.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& id);

/// "CP3xS4" -> {"CP3", "S4"}.
std::optional<std::pair<std::string, std::string>> split_product(const std::string& id);

/// Pair for a catalog id or any sphere/projective id; memoised process-wide.
std::shared_ptr<const CatalogPair> catalog_pair(const std::string& id);
std::shared_ptr<const SpinGeometry> catalog_geometry(const std::string& id);

/// Builds every shipped entry and checks it against its record; returns the problems found.
std::vector<std::string> validate_catalog();

}  // namespace diracbound
