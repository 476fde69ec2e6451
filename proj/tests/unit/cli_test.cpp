#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "diracbound/berger/berger.hpp"
#include "diracbound/cli/cache.hpp"
#include "diracbound/cli/catalog.hpp"
#include "diracbound/cli/commands.hpp"

using namespace diracbound;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = fs::temp_directory_path() / ("diracbound-" + tag + "-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "diracbound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

CommandOptions options(const fs::path& dir) {
  CommandOptions o;
  o.cache_dir = dir;
  return o;
}

}  // namespace

TEST(Catalog, ShippedEntriesValidate) {
  EXPECT_EQ(catalog().size(), 7u);
  for (const char* id : {"S2", "S4", "S5", "S6", "CP3", "CP5", "Berger"}) EXPECT_NE(find_entry(id), nullptr) << id;
  EXPECT_EQ(find_entry("T3"), nullptr);
  EXPECT_FALSE(find_entry("Berger")->symmetric);
  EXPECT_FALSE(find_entry("Berger")->expected_lambda1.has_value());
  const auto problems = validate_catalog();
  EXPECT_TRUE(problems.empty()) << (problems.empty() ? "" : problems.front());
}

TEST(Catalog, ParserRejectsBadInput) {
  EXPECT_THROW(parse_catalog("[1"), ConfigurationError);
  EXPECT_THROW(parse_catalog(R"({"entries": [{"id": "S4"}]})"), ConfigurationError);
}

TEST(Catalog, ProductIds) {
  EXPECT_EQ(split_product("CP3xS4"), std::make_optional(std::make_pair(std::string("CP3"), std::string("S4"))));
  EXPECT_FALSE(split_product("CP3").has_value());
  EXPECT_FALSE(split_product("xS4").has_value());
  EXPECT_THROW(catalog_pair("Berger"), DomainError);
}

TEST(Cache, Sha256KnownAnswer) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Cache, PutGetClear) {
  TempDir dir("cache");
  const ResultCache cache(dir.path());
  const std::string k1 = ResultCache::key("S4", "lambda1", "budget=1");
  const std::string k2 = ResultCache::key("S4", "lambda1", "budget=2");
  EXPECT_NE(k1, k2);
  EXPECT_EQ(k1.size(), 64u);
  EXPECT_FALSE(cache.get(k1).has_value());
  cache.put(k1, "one");
  cache.put(k2, "two");
  cache.put(k2, "three");
  EXPECT_EQ(cache.get(k1), std::optional<std::string>("one"));
  EXPECT_EQ(cache.get(k2), std::optional<std::string>("three"));
  EXPECT_EQ(cache.clear(), 2u);
  EXPECT_FALSE(cache.get(k1).has_value());
  EXPECT_EQ(cache.clear(), 0u);
}

TEST(Commands, Lambda1CachedAndUncachedAgree) {
  TempDir dir("lambda1");
  CommandOptions opts = options(dir.path());
  const ResultRecord first = cmd_lambda1("CP3", opts);
  const ResultRecord second = cmd_lambda1("CP3", opts);
  opts.use_cache = false;
  const ResultRecord fresh = cmd_lambda1("CP3", opts);
  EXPECT_EQ(first.to_json().dump(), second.to_json().dump());
  EXPECT_EQ(first.to_json().dump(), fresh.to_json().dump());
  EXPECT_EQ(first.result["lambda1"]["exact"], "16");
  EXPECT_TRUE(first.result["matches_expected"].get<bool>());
  EXPECT_TRUE(second.passed);
  EXPECT_EQ(cmd_cache_clear(options(dir.path())).result["removed"], 1);
}

TEST(Commands, ProductIsAdditive) {
  TempDir dir("product");
  const ResultRecord r = cmd_lambda1("S4xS5", options(dir.path()));
  EXPECT_EQ(r.result["lambda1"]["exact"], "41/4");
  EXPECT_THROW(cmd_lambda1("Berger", options(dir.path())), DomainError);
}

TEST(Commands, MuSpecParsing) {
  CommandOptions opts;
  EXPECT_EQ(parse_mu_spec("ones", 3, opts), (std::vector<std::vector<Rational>>{{1, 1, 1}}));
  EXPECT_EQ(parse_mu_spec("1/2,1,0.25", 3, opts).front(), (std::vector<Rational>{make_rational(1, 2), 1, make_rational(1, 4)}));
  const auto a = parse_mu_spec("random:7:5", 4, opts), b = parse_mu_spec("random:7:5", 4, opts);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 5u);
  for (const auto& mu : a)
    for (const auto& x : mu) {
      EXPECT_GT(x, 0);
      EXPECT_LE(x, 1);
    }
  opts.samples = 3;
  EXPECT_EQ(parse_mu_spec("random", 2, opts).size(), 3u);
  EXPECT_THROW(parse_mu_spec("1.5,1", 2, opts), DomainError);
  EXPECT_THROW(parse_mu_spec("0,1", 2, opts), DomainError);
  EXPECT_THROW(parse_mu_spec("1,1", 3, opts), DomainError);
  EXPECT_THROW(parse_mu_spec("random:x:1", 2, opts), DomainError);
  EXPECT_THROW(parse_mu_spec("half", 2, opts), DomainError);
}

TEST(Commands, VafaWittenReplayIsDeterministic) {
  TempDir dir("vw");
  CommandOptions opts = options(dir.path());
  opts.samples = 20;
  const ResultRecord a = cmd_vafa_witten("S4", "random", opts);
  const ResultRecord b = cmd_vafa_witten("S4", "random", opts);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.result["violations"], 0);
  EXPECT_TRUE(a.passed);
  const ResultRecord ones = cmd_vafa_witten("S4", "ones", opts);
  EXPECT_TRUE(ones.result["exact_equality"].get<bool>());
  EXPECT_EQ(ones.result["equalities"], 1);
}

TEST(Commands, IndexRecords) {
  const ResultRecord s = cmd_index_sphere(2, 3, Rational(1), Integer(5));
  EXPECT_EQ(s.result["threshold"]["exact"], "4");
  EXPECT_EQ(s.result["kernel_bound"]["exact"], "10");
  EXPECT_EQ(s.result["ch_sigma_plus"], "2 + w");
  const ResultRecord c = cmd_index_cpn(2, 2);
  EXPECT_EQ(c.result["threshold"]["exact"], "3");
  EXPECT_EQ(c.result["ch_W"], "3 + 2a - (2/3)a^3");
  EXPECT_EQ(c.result["ch_W_plus_dual"], "6");
  EXPECT_TRUE(cmd_index_cpn(2, 2, Rational(4)).result["verdict"].get<bool>());
}

TEST(Commands, RecordRoundTrip) {
  const ResultRecord s = cmd_index_sphere(3, 2, Rational(0), Integer(1));
  const ResultRecord back = ResultRecord::from_json(s.to_json());
  EXPECT_EQ(back.to_json().dump(), s.to_json().dump());
  EXPECT_FALSE(s.to_json().contains("timing_seconds"));
  EXPECT_TRUE(s.to_json(true).contains("timing_seconds"));
}

TEST(Cli, ExitCodes) {
  TempDir dir("cli");
  const std::string cache = dir.path().string();
  EXPECT_EQ(run({"index", "sphere", "2", "3", "--ahat", "1", "--deg", "5"}).code, kExitPass);
  EXPECT_EQ(run({"catalog", "list"}).code, kExitPass);
  const CliRun berger = run({"lambda1", "Berger", "--cache-dir", cache});
  EXPECT_EQ(berger.code, kExitUsage);
  EXPECT_NE(berger.err.find("not symmetric"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"lambda1"}).code, kExitUsage);
  EXPECT_EQ(run({"vafa-witten", "S4", "1.5,1,1,1", "--cache-dir", cache}).code, kExitUsage);
  EXPECT_EQ(run({"index", "sphere", "0", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"index", "sphere", "2", "3", "--deg", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, TamperedFixtureExitsWithFailure) {
  TempDir dir("fixture");
  BergerFrame f = shipped_berger_frame();
  f.coefficients[0][3] += QSqrt5(1);
  const fs::path path = dir.path() / "frame.json";
  std::ofstream(path) << berger_fixture_json(f);
  const CliRun r = run({"berger", "verify", "--fixture", path.string()});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("FAILED"), std::string::npos);
  EXPECT_EQ(run({"berger", "verify", "--fixture", (dir.path() / "missing.json").string()}).code, kExitUsage);
}

TEST(Cli, JsonOutput) {
  TempDir dir("json");
  const CliRun r = run({"--json", "--cache-dir", dir.path().string(), "lambda1", "S4"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const Json j = Json::parse(r.out);
  for (const char* key : {"command", "space", "inputs", "result", "exact", "minimizers", "version"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["result"]["lambda1"]["exact"], "4");
  EXPECT_EQ(j["version"], library_version());
  EXPECT_FALSE(j.contains("timing_seconds"));
  const CliRun t = run({"--json", "--timing", "--no-cache", "index", "cpn", "2", "2"});
  EXPECT_TRUE(Json::parse(t.out).contains("timing_seconds"));
}
