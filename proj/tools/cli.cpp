#include "cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "diracbound/cli/commands.hpp"

namespace diracbound {

namespace {

Integer parse_integer(const std::string& text) {
  try {
    return Integer(text);
  } catch (const std::invalid_argument&) {
    throw DomainError("'" + text + "' is not an integer");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Dirac eigenvalue bounds on homogeneous spaces", "diracbound"};
  app.require_subcommand(1);

  bool json = false;
  bool timing = false;
  bool no_cache = false;
  std::string cache_dir;
  CommandOptions opts;
  app.add_flag("--json", json, "Emit one JSON object");
  app.add_flag("--timing", timing, "Include wall-clock seconds in JSON output");
  app.add_option("--seed", opts.seed, "Seed for random mu samples");
  app.add_option("--samples", opts.samples, "Number of random mu samples");
  app.add_option("--budget", opts.budget, "Node budget of the lambda1 search");
  app.add_option("--cache-dir", cache_dir, "Cache directory (default $DIRACBOUND_CACHE)");
  app.add_flag("--no-cache", no_cache, "Do not read or write the result cache");

  std::string space;
  auto* l1 = app.add_subcommand("lambda1", "Smallest eigenvalue of D^2 on a symmetric space");
  l1->add_option("space", space, "Catalog id, e.g. CP3, S4 or CP3xS4")->required();
  l1->fallthrough();

  std::string mu_spec;
  auto* vw = app.add_subcommand("vafa-witten", "Compare the twisted comparison operator with lambda1");
  vw->add_option("space", space, "Catalog id")->required();
  vw->add_option("mu", mu_spec, "ones | random | random:SEED:COUNT | comma-separated list")->required();
  vw->fallthrough();

  std::string fixture, output;
  auto* berger = app.add_subcommand("berger", "Exact checks on SO(5)/SO(3)");
  berger->require_subcommand(1);
  auto* bverify = berger->add_subcommand("verify", "Run every exact identity and the D^lambda sweep");
  bverify->add_option("--fixture", fixture, "Frame fixture to check instead of the shipped one");
  bverify->fallthrough();
  auto* bsolve = berger->add_subcommand("solve", "Recompute the octonionic frame");
  bsolve->add_option("--output", output, "Write the fixture here");
  bsolve->fallthrough();
  berger->fallthrough();

  int m = 0, k = 0;
  std::string ahat = "0", deg = "0", pairing;
  auto* index = app.add_subcommand("index", "Index thresholds for maps to S^{2m} and CP^{2m-1}");
  index->require_subcommand(1);
  auto* isphere = index->add_subcommand("sphere", "Maps to S^{2m}");
  isphere->add_option("m", m, "Half the sphere dimension")->required()->check(CLI::PositiveNumber);
  isphere->add_option("k", k, "Number of eigenvalues")->required()->check(CLI::PositiveNumber);
  isphere->add_option("--ahat", ahat, "A-hat genus of N (rational)");
  isphere->add_option("--deg", deg, "A-hat degree of f (integer)");
  isphere->fallthrough();
  auto* icpn = index->add_subcommand("cpn", "Maps to CP^{2m-1}");
  icpn->add_option("m", m, "CP^{2m-1}")->required()->check(CLI::PositiveNumber);
  icpn->add_option("k", k, "Number of eigenvalues")->required()->check(CLI::PositiveNumber);
  icpn->add_option("--pairing", pairing, "A-hat pairing with the obstruction class (rational)");
  icpn->fallthrough();
  index->fallthrough();

  auto* cat = app.add_subcommand("catalog", "Shipped spaces");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List catalog entries")->fallthrough();
  cat->fallthrough();

  auto* cache = app.add_subcommand("cache", "Result cache");
  cache->require_subcommand(1);
  cache->add_subcommand("clear", "Delete cached results")->fallthrough();
  cache->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  if (!cache_dir.empty()) opts.cache_dir = cache_dir;
  opts.use_cache = !no_cache;

  try {
    ResultRecord r;
    if (l1->parsed()) r = cmd_lambda1(space, opts);
    else if (vw->parsed()) r = cmd_vafa_witten(space, mu_spec, opts);
    else if (bverify->parsed()) r = cmd_berger_verify(fixture.empty() ? std::nullopt : std::optional<std::filesystem::path>(fixture));
    else if (bsolve->parsed()) r = cmd_berger_solve(output.empty() ? std::nullopt : std::optional<std::filesystem::path>(output));
    else if (isphere->parsed()) r = cmd_index_sphere(m, k, parse_rational(ahat), parse_integer(deg));
    else if (icpn->parsed())
      r = cmd_index_cpn(m, k, pairing.empty() ? std::nullopt : std::optional<Rational>(parse_rational(pairing)));
    else if (cat->parsed()) r = cmd_catalog_list();
    else r = cmd_cache_clear(opts);

    if (json) out << r.to_json(timing).dump(2) << "\n";
    else out << r.text();
    if (!r.passed) {
      err << r.command << ": FAILED\n";
      return kExitFailure;
    }
    return kExitPass;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace diracbound
