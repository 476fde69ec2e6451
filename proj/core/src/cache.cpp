#include "diracbound/cli/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "diracbound/cli/serialize.hpp"
#include "diracbound/errors.hpp"

namespace fs = std::filesystem;

namespace diracbound {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

ResultCache::ResultCache(fs::path directory) : dir_(std::move(directory)) {}

fs::path ResultCache::default_directory() {
  if (const char* env = std::getenv("DIRACBOUND_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "diracbound";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "diracbound";
  return fs::temp_directory_path() / "diracbound-cache";
}

std::string ResultCache::key(std::string_view space, std::string_view operation, std::string_view parameters) {
  std::string material;
  for (std::string_view part : {space, operation, parameters, std::string_view(library_version())}) {
    material += part;
    material += '\0';
  }
  return sha256_hex(material);
}

fs::path ResultCache::path_for(const std::string& key) const { return dir_ / key.substr(0, 2) / (key + ".json"); }

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ResultCache::put(const std::string& key, const std::string& value) const {
  static std::atomic<unsigned> counter{0};
  const fs::path target = path_for(key);
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (ec) throw Error("cannot create cache directory " + target.parent_path().string() + ": " + ec.message());
  const fs::path tmp = target.parent_path() / (key + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << value;
    if (!out.flush()) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot publish cache file " + target.string());
  }
}

std::size_t ResultCache::clear() const {
  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return 0;
  for (const auto& shard : fs::directory_iterator(dir_, ec)) {
    if (!shard.is_directory() || shard.path().filename().string().size() != 2) continue;
    for (const auto& f : fs::directory_iterator(shard.path(), ec))
      if (f.path().extension() == ".json" && fs::remove(f.path(), ec)) ++removed;
    fs::remove(shard.path(), ec);
  }
  return removed;
}

}  // namespace diracbound
