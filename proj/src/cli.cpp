#include "boxgap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "boxgap/boxdim.hpp"
#include "boxgap/combinatorics.hpp"
#include "boxgap/error.hpp"
#include "boxgap/format.hpp"
#include "boxgap/geometry.hpp"
#include "boxgap/io.hpp"
#include "boxgap/shift_model.hpp"
#include "boxgap/verify.hpp"

namespace boxgap::cli {

namespace {

struct RunConfig {
  std::string preset = "paper";
  std::string config_path;
  double budget = 0.0;  // 0: BOXGAP_BUDGET or the default
  bool verbose = false;

  std::int64_t nmax = 0;
  std::int64_t kmax = 0;
  std::string scales = "all";
  std::string oracle = "dp";
  std::string family = "sigma";
  std::string out;
  std::int64_t depth = 3;
  int width = 864;
  int height = 864;
  std::string check;

  GridConfig grid() const {
    return config_path.empty() ? GridConfig::preset(preset) : GridConfig::from_json_file(config_path);
  }
  double effective_budget() const { return budget > 0 ? budget : enumeration_budget(); }
};

void emit(const RunConfig& rc, const std::string& text, std::ostream& out) {
  if (rc.out.empty())
    out << text;
  else
    write_file(rc.out, text);
}

int cmd_constants(const RunConfig& rc, std::ostream& out) {
  auto c = dimension_constants(rc.grid());
  out << "D_high = " << format_real(c.d_high) << "\n";
  out << "D_low = " << format_real(c.d_low) << "\n";
  out << "gap = " << format_real(c.d_high - c.d_low) << "\n";
  return 0;
}

int cmd_count(const RunConfig& rc, std::ostream& out) {
  auto cfg = rc.grid();
  const std::int64_t nmax = rc.nmax > 0 ? rc.nmax : 20;
  auto table = build_count_table(parse_family(rc.family), nmax, cfg);
  std::ostringstream os;
  export_count_csv(table, os);
  emit(rc, os.str(), out);
  return 0;
}

std::vector<std::int64_t> scale_list(const RunConfig& rc, const GridConfig& cfg) {
  if (rc.scales == "all") {
    const std::int64_t kmax = rc.kmax > 0 ? rc.kmax : 100;
    std::vector<std::int64_t> ks(static_cast<std::size_t>(kmax));
    for (std::int64_t k = 1; k <= kmax; ++k) ks[static_cast<std::size_t>(k - 1)] = k;
    return ks;
  }
  auto ps = paper_scales(rc.nmax > 0 ? rc.nmax : 2, cfg.p());
  std::set<std::int64_t> ks(ps.k.begin(), ps.k.end());
  ks.insert(ps.k_prime.begin(), ps.k_prime.end());
  if (rc.kmax > 0) ks.erase(ks.upper_bound(rc.kmax), ks.end());
  return {ks.begin(), ks.end()};
}

int cmd_boxdim(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  auto cfg = rc.grid();
  auto ks = scale_list(rc, cfg);
  std::vector<ScaleRecord> records;
  if (!ks.empty()) {
    if (rc.oracle == "grid") {
      for (auto k : ks) {
        ScaleRecord r;
        r.k = k;
        r.l = l_of_k(k, cfg);
        r.n_hat = grid_box_count(k, cfg, rc.effective_budget());
        r.ratio = log_count(r.n_hat) / (static_cast<double>(k) * std::log(static_cast<double>(cfg.n())));
        records.push_back(std::move(r));
      }
    } else {
      auto start = std::chrono::steady_clock::now();
      BoxdimEngine engine(ks.back(), cfg);
      for (auto k : ks) records.push_back(engine.record(k));
      if (rc.verbose)
        err << "boxdim: " << ks.size() << " scales in "
            << format_real(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()) << " s\n";
    }
  }
  std::ostringstream os;
  export_csv(records, os);
  emit(rc, os.str(), out);
  return 0;
}

int cmd_render(const RunConfig& rc, std::ostream& out) {
  if (rc.out.empty()) throw DomainError("render: --out is required");
  auto raster = rasterize(rc.depth, rc.width, rc.height, rc.grid(), rc.effective_budget());
  auto bytes = encode_pnm(raster);
  write_file(rc.out, bytes);
  out << rc.out << " " << raster.width() << "x" << raster.height() << " set=" << raster.count()
      << " fnv1a64=" << hex64(fnv1a64(bytes)) << "\n";
  return 0;
}

int cmd_report(const RunConfig& rc, std::ostream& out) {
  auto rep = gap_report(rc.nmax > 0 ? rc.nmax : 2, rc.grid(), rc.kmax);
  emit(rc, render_report(rep), out);
  return 0;
}

std::string repro_line(const std::vector<std::string>& args, const std::string& check) {
  std::string line = "boxgap";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--check") {
      ++i;
      continue;
    }
    if (args[i].rfind("--check=", 0) == 0) continue;
    line += " " + args[i];
  }
  return line + " --check " + check;
}

int cmd_verify(const RunConfig& rc, const std::vector<std::string>& args, std::ostream& out) {
  auto cfg = rc.grid();
  auto plan = verify::plan_for(cfg, rc.nmax > 0 ? rc.nmax : 10);
  std::vector<std::string> names = verify::check_names();
  if (!rc.check.empty()) names = {rc.check};
  for (const auto& name : names) {
    auto r = verify::run_check(name, cfg, plan);
    out << (r.passed ? "ok   " : "FAIL ") << r.name << ": " << r.detail;
    if (rc.verbose) out << " (" << format_real(r.seconds) << " s)";
    out << "\n";
    if (!r.passed) {
      out << "repro: " << repro_line(args, name) << "\n";
      return 1;
    }
  }
  out << "all " << names.size() << " checks passed\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Box-counting gap experiments for a coded subshift", "boxgap"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--preset", rc.preset, "built-in config: paper, tiny, small")
        ->check(CLI::IsMember({"paper", "tiny", "small"}));
    sub->add_option("--config", rc.config_path, "JSON config {\"m\":..,\"n\":..,\"p\":..}");
    sub->add_option("--budget", rc.budget, "enumeration cap (default: BOXGAP_BUDGET or 1e8)");
    sub->add_flag("-v,--verbose", rc.verbose, "timings on stderr");
  };

  auto* verify_cmd = app.add_subcommand("verify", "run the oracle equivalence suite");
  common(verify_cmd);
  verify_cmd->add_option("--nmax", rc.nmax, "largest word length for the suite");
  verify_cmd->add_option("--check", rc.check, "run a single check")->check(CLI::IsMember(verify::check_names()));

  auto* count_cmd = app.add_subcommand("count", "count table as CSV");
  common(count_cmd);
  count_cmd->add_option("--family", rc.family, "sigma, loops, ends_at_hub, starts_at_hub")
      ->check(CLI::IsMember({"sigma", "loops", "ends_at_hub", "starts_at_hub"}));
  count_cmd->add_option("--nmax", rc.nmax, "largest N (default 20)");
  count_cmd->add_option("--out", rc.out, "CSV path (default stdout)");

  auto* boxdim_cmd = app.add_subcommand("boxdim", "box-count series as CSV");
  common(boxdim_cmd);
  boxdim_cmd->add_option("--kmax", rc.kmax, "largest scale k");
  boxdim_cmd->add_option("--nmax", rc.nmax, "largest N for --scales paper (default 2)");
  boxdim_cmd->add_option("--scales", rc.scales, "all or paper")->check(CLI::IsMember({"all", "paper"}));
  boxdim_cmd->add_option("--oracle", rc.oracle, "dp or grid")->check(CLI::IsMember({"dp", "grid"}));
  boxdim_cmd->add_option("--out", rc.out, "CSV path (default stdout)");

  auto* render_cmd = app.add_subcommand("render", "rasterize cylinders to a P4 bitmap");
  common(render_cmd);
  render_cmd->add_option("--depth", rc.depth, "cylinder depth (default 3)");
  render_cmd->add_option("--width", rc.width, "pixels (default 864)");
  render_cmd->add_option("--height", rc.height, "pixels (default 864)");
  render_cmd->add_option("--out", rc.out, "output .pbm path")->required();

  auto* constants_cmd = app.add_subcommand("constants", "closed-form dimension limits");
  common(constants_cmd);

  auto* report_cmd = app.add_subcommand("report", "markdown gap report");
  common(report_cmd);
  report_cmd->add_option("--nmax", rc.nmax, "paper scales up to p^nmax (default 2)");
  report_cmd->add_option("--kmax", rc.kmax, "series length override");
  report_cmd->add_option("--out", rc.out, "markdown path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (*verify_cmd) return cmd_verify(rc, args, out);
    if (*count_cmd) return cmd_count(rc, out);
    if (*boxdim_cmd) return cmd_boxdim(rc, out, err);
    if (*render_cmd) return cmd_render(rc, out);
    if (*constants_cmd) return cmd_constants(rc, out);
    if (*report_cmd) return cmd_report(rc, out);
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace boxgap::cli
