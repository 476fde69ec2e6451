#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "diracbound/cli/cache.hpp"
#include "diracbound/cli/serialize.hpp"
#include "diracbound/topology/index.hpp"

namespace diracbound {

struct CommandOptions {
  std::optional<std::filesystem::path> cache_dir;  // default: ResultCache::default_directory()
  bool use_cache = true;
  std::size_t budget = 100000;
  std::uint64_t seed = 42;
  std::size_t samples = 100;
};

/// mu-spec "ones", "random", "random:SEED:COUNT" or a comma-separated list; entries in (0, 1].
std::vector<std::vector<Rational>> parse_mu_spec(const std::string& spec, std::size_t n, const CommandOptions& opts);

ResultRecord cmd_lambda1(const std::string& space, const CommandOptions& opts = {});
ResultRecord cmd_vafa_witten(const std::string& space, const std::string& mu_spec, const CommandOptions& opts = {});
ResultRecord cmd_berger_verify(const std::optional<std::filesystem::path>& fixture = std::nullopt);
ResultRecord cmd_berger_solve(const std::optional<std::filesystem::path>& output = std::nullopt);
ResultRecord cmd_index_sphere(int m, int k, const Rational& ahat, const Integer& degree);
/// `pairing` is the A-hat pairing with the obstruction class, if known.
ResultRecord cmd_index_cpn(int m, int k, const std::optional<Rational>& pairing = std::nullopt);
ResultRecord cmd_catalog_list();
ResultRecord cmd_cache_clear(const CommandOptions& opts = {});

}  // namespace diracbound
