// Acceptance suite: one line per criterion, nonzero exit if any fails.
// --freeze rewrites the golden files instead of comparing against them.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "boxgap/boxdim.hpp"
#include "boxgap/cli.hpp"
#include "boxgap/combinatorics.hpp"
#include "boxgap/format.hpp"
#include "boxgap/geometry.hpp"
#include "boxgap/io.hpp"
#include "boxgap/verify.hpp"

using namespace boxgap;

namespace {

namespace fs = std::filesystem;

bool g_freeze = false;
fs::path g_golden = BOXGAP_GOLDEN_DIR;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return {};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Compares against a golden file, or writes it under --freeze.
Outcome golden(const std::string& name, const std::string& actual) {
  const fs::path path = g_golden / name;
  if (g_freeze) {
    write_file(path.string(), actual);
    return {true, "froze " + name};
  }
  if (!fs::exists(path)) return {false, "missing golden " + name + " (run with --freeze)"};
  if (slurp(path) != actual) return {false, name + " differs from golden"};
  return {true, name + " matches"};
}

struct Cli {
  int code;
  std::string out;
};

Cli cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

BigCount pow_big(unsigned long base, unsigned long e) {
  BigCount v;
  mpz_ui_pow_ui(v.get_mpz_t(), base, e);
  return v;
}

Outcome both(const verify::CheckResult& a, const verify::CheckResult& b) {
  return {a.passed && b.passed, a.detail + "; " + b.detail};
}

std::string four(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Outcome c1_constants() {
  auto r = cli({"constants", "--preset", "paper"});
  if (r.code != 0) return {false, "exit " + std::to_string(r.code)};
  double high = 0, low = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("D_high = ", 0) == 0) high = std::stod(line.substr(9));
    if (line.rfind("D_low = ", 0) == 0) low = std::stod(line.substr(8));
  }
  const double th = std::round(high * 1e4) / 1e4, tl = std::round(low * 1e4) / 1e4;
  bool ok = std::fabs(th - 1.3687) < 1e-9 && std::fabs(tl - 1.3038) < 1e-9;
  return {ok, "D_high=" + format_real(high) + " (" + four(th) + "), D_low=" + format_real(low) + " (" + four(tl) + ")"};
}

Outcome c2_counts() { return both(verify::counts(GridConfig::tiny(), 16), verify::counts(GridConfig::paper(), 7)); }

Outcome c3_columns() {
  return both(verify::columns(GridConfig::tiny(), 8, 14), verify::columns(GridConfig::paper(), 4, 8));
}

Outcome c4_block_bound() {
  BoxdimEngine engine(169, GridConfig::paper());
  const auto paper = GridConfig::paper();
  const auto l13 = l_of_k(13, paper), l169 = l_of_k(169, paper);
  bool a = engine.n_hat(13) >= pow_big(10, 13) * pow_big(2, static_cast<unsigned long>(47 - 26));
  bool b = engine.n_hat(169) >= pow_big(10, 169) * pow_big(2, static_cast<unsigned long>(l169 - 338));
  std::ostringstream os;
  os << "l(13)=" << l13 << " n_hat(13)>=10^13*2^21: " << (a ? "yes" : "no") << "; l(169)=" << l169
     << " n_hat(169)>=10^169*2^" << (l169 - 338) << ": " << (b ? "yes" : "no");
  return {a && b && l13 == 47, os.str()};
}

Outcome c5_entropy() {
  const auto paper = GridConfig::paper();
  auto loops = entropy_series(build_count_table(Family::Loops, 2000, paper), 2000);
  auto ends = entropy_series(build_count_table(Family::EndsAtHub, 2000, paper), 2000);
  const double cap = std::log(4.0);
  bool bounds = true;
  double worst_g = 0, worst_i = 0;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (loops[i].n < 100) continue;
    worst_g = std::max(worst_g, loops[i].rate);
    bounds = bounds && loops[i].rate <= cap + 0.1;
  }
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (ends[i].n < 100) continue;
    worst_i = std::max(worst_i, ends[i].rate);
    bounds = bounds && ends[i].rate <= cap + 0.15;
  }
  auto at = [](const std::vector<EntropyPoint>& s, std::int64_t n) { return s[static_cast<std::size_t>(n - 1)].rate; };
  bool mono = true;
  std::ostringstream os;
  os << "max G rate " << format_real(worst_g) << " <= " << format_real(cap + 0.1) << ", max I rate "
     << format_real(worst_i) << " <= " << format_real(cap + 0.15) << (bounds ? " (bounds hold)" : " (bound violated)");
  for (const auto* s : {&loops, &ends}) {
    const double a = at(*s, 500), b = at(*s, 1000), c = at(*s, 2000);
    mono = mono && a >= b && b >= c;
    os << "; " << (s == &loops ? "G" : "I") << " at 500/1000/2000: " << format_real(a) << ", " << format_real(b)
       << ", " << format_real(c);
  }
  os << (mono ? " (non-increasing)" : " (increasing: monotone clause fails)");
  return {bounds && mono, os.str()};
}

Outcome c6_oscillation() {
  const auto paper = GridConfig::paper();
  BoxdimEngine engine(2197, paper);
  std::vector<ScaleRecord> series;
  for (std::int64_t k = 1; k <= 2197; ++k) series.push_back(engine.record(k));
  auto ps = paper_scales(3);
  std::vector<ScaleRecord> rows;
  std::ostringstream os;
  bool bound = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& high = series[static_cast<std::size_t>(ps.k[i] - 1)];
    const auto& low = series[static_cast<std::size_t>(ps.k_prime[i] - 1)];
    rows.push_back(low);
    rows.push_back(high);
    auto check = check_block_lower_bound(engine, ps.k[i]);
    bound = bound && check.applicable && check.holds;
    os << "N=" << i + 1 << " r(" << high.k << ")=" << format_real(high.ratio) << " r(" << low.k
       << ")=" << format_real(low.ratio) << "; ";
  }
  std::ostringstream scales_csv, series_csv;
  export_csv(rows, scales_csv);
  export_csv(series, series_csv);
  auto g1 = golden("paper_scales.csv", scales_csv.str());
  auto g2 = golden("series_k2197.fnv", hex64(fnv1a64(series_csv.str())) + "\n");
  os << g1.detail << ", " << g2.detail << "; block bound at k=13,169,2197: " << (bound ? "holds" : "FAILS");
  return {g1.passed && g2.passed && bound, os.str()};
}

Outcome c7_bracket() {
  return both(verify::grid_bracket(GridConfig::tiny(), 10, 10.0), verify::grid_bracket(GridConfig::paper(), 2, 10.0));
}

Outcome c8_power_sums() {
  auto r = verify::power_sums({2, 13}, 30, 200);
  return {r.passed, r.detail};
}

Outcome c9_determinism() {
  const fs::path dir = fs::temp_directory_path() / "boxgap_acceptance";
  fs::create_directories(dir);
  std::vector<std::vector<std::string>> commands = {
      {"report", "--preset", "paper", "--nmax", "2", "--out", (dir / "report.md").string()},
      {"boxdim", "--preset", "paper", "--kmax", "300", "--out", (dir / "series.csv").string()},
      {"boxdim", "--preset", "tiny", "--kmax", "8", "--oracle", "grid", "--out", (dir / "grid.csv").string()},
      {"render", "--preset", "paper", "--depth", "5", "--width", "864", "--height", "864", "--out",
       (dir / "render.pbm").string()},
  };
  std::vector<std::string> first;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < commands.size(); ++i) {
      auto r = cli(commands[i]);
      if (r.code != 0) return {false, commands[i][0] + " exit " + std::to_string(r.code) + ": " + r.out};
      auto bytes = slurp(commands[i].back());
      if (pass == 0) first.push_back(bytes);
      else if (bytes != first[i]) return {false, commands[i][0] + " output differs between runs"};
    }
  }
  auto direct = encode_pnm(rasterize(5, 864, 864, GridConfig::paper()));
  if (direct != first.back()) return {false, "CLI render differs from library render"};
  const std::string hash = hex64(fnv1a64(direct));
  auto g = golden("render_paper_d5_864.fnv", hash + "\n");
  return {g.passed, "report/boxdim/render byte-identical over 2 runs; render fnv1a64=" + hash + ", " + g.detail};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--freeze") g_freeze = true;
    else if (a == "--golden" && i + 1 < argc) g_golden = argv[++i];
  }
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> fn;
    double limit_s;
  };
  const std::vector<Criterion> criteria = {
      {1, "constants", c1_constants, 1},
      {2, "count oracle equivalence", c2_counts, 120},
      {3, "column oracle equivalence", c3_columns, 300},
      {4, "block lower bound", c4_block_bound, 60},
      {5, "entropy surrogates", c5_entropy, 300},
      {6, "ratio series and golden scales", c6_oscillation, 1800},
      {7, "geometry bracket", c7_bracket, 600},
      {8, "power sum identities", c8_power_sums, 60},
      {9, "determinism", c9_determinism, 600},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.limit_s;
    bool ok = o.passed && in_time;
    if (!ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.limit_s);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
              << timing << (in_time ? "" : ", over time limit") << "]" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
