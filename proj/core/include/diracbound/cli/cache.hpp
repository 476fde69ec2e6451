#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace diracbound {

std::string sha256_hex(std::string_view data);

/// Content-addressed result files; writes go through a temporary file and a rename.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory);

  /// $DIRACBOUND_CACHE, else $XDG_CACHE_HOME/diracbound, else ~/.cache/diracbound.
  static std::filesystem::path default_directory();
  /// Hash of (space, operation, parameters, library version).
  static std::string key(std::string_view space, std::string_view operation, std::string_view parameters);

  const std::filesystem::path& directory() const { return dir_; }
  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;
  /// Removes every cached entry; returns how many were removed.
  std::size_t clear() const;

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
};

}  // namespace diracbound
