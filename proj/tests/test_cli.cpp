#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "boxgap/cli.hpp"
#include "boxgap/io.hpp"

using boxgap::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "boxgap_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("constants") {
  auto r = call({"constants", "--preset", "paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("D_high = 1.3687") != std::string::npos);
  CHECK(r.out.find("D_low = 1.3038") != std::string::npos);
  auto t = call({"constants", "--preset", "tiny"});
  CHECK(t.code == 1);
  CHECK_FALSE(t.err.empty());
}

TEST_CASE("usage errors") {
  auto r = call({"boxdim", "--no-such-flag"});
  CHECK(r.code == 1);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"count", "--preset", "huge"}).code == 1);
  CHECK(call({"count", "--family", "nope"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("config file") {
  auto path = tmp("cfg.json");
  boxgap::write_file(path.string(), R"({"m": 2, "n": 6, "p": 3})");
  auto r = call({"count", "--config", path.string(), "--nmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("N,value,log_value,rate\n", 0) == 0);
  boxgap::write_file(path.string(), R"({"m": 5, "n": 4, "p": 3})");
  auto bad = call({"count", "--config", path.string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("n > m") != std::string::npos);
  CHECK(call({"count", "--config", tmp("missing.json").string()}).code == 1);
}

TEST_CASE("count") {
  auto r = call({"count", "--preset", "paper", "--family", "loops", "--nmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n1,2,") != std::string::npos);
  CHECK(r.out.find("\n2,14,") != std::string::npos);
  CHECK(r.out.find("\n3,48,") != std::string::npos);
}

TEST_CASE("boxdim paper scales") {
  auto path = tmp("s.csv");
  auto r = call({"boxdim", "--preset", "paper", "--scales", "paper", "--nmax", "2", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::istringstream in(slurp(path));
  auto recs = boxgap::parse_scale_csv(in);
  std::vector<std::int64_t> ks;
  for (const auto& rec : recs) ks.push_back(rec.k);
  CHECK(ks == std::vector<std::int64_t>{4, 13, 47, 169});
}

TEST_CASE("boxdim grid oracle") {
  auto dp = call({"boxdim", "--preset", "tiny", "--kmax", "6"});
  auto grid = call({"boxdim", "--preset", "tiny", "--kmax", "6", "--oracle", "grid"});
  CHECK(dp.code == 0);
  CHECK(grid.code == 0);
  CHECK(grid.out.find("6,12,") != std::string::npos);
  auto over = call({"boxdim", "--preset", "paper", "--kmax", "8", "--oracle", "grid", "--budget", "1000"});
  CHECK(over.code == 2);
}

TEST_CASE("render") {
  auto path = tmp("r.pbm");
  auto r = call({"render", "--preset", "paper", "--depth", "2", "--width", "48", "--height", "36", "--out", path.string()});
  CHECK(r.code == 0);
  auto bytes = slurp(path);
  CHECK(bytes.rfind("P4\n48 36\n", 0) == 0);
  CHECK(bytes.size() == 9 + 6 * 36);
  CHECK(call({"render", "--preset", "paper", "--depth", "9", "--out", path.string()}).code == 2);
  CHECK(call({"render", "--preset", "paper"}).code == 1);
  CHECK(call({"render", "--preset", "paper", "--depth", "1", "--out", "/nonexistent-dir/x.pbm"}).code == 1);
}

TEST_CASE("report and verify") {
  auto r = call({"report", "--preset", "paper", "--nmax", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1.368742517") != std::string::npos);
  auto v = call({"verify", "--preset", "tiny", "--nmax", "8", "--check", "counts"});
  CHECK(v.code == 0);
  CHECK(v.out.find("ok   counts") != std::string::npos);
  auto all = call({"verify", "--preset", "small", "--nmax", "6"});
  CHECK(all.code == 0);
  CHECK(all.out.find("all 7 checks passed") != std::string::npos);
}
