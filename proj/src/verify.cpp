#include "boxgap/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "boxgap/boxdim.hpp"
#include "boxgap/combinatorics.hpp"
#include "boxgap/error.hpp"
#include "boxgap/geometry.hpp"
#include "boxgap/oracle.hpp"
#include "boxgap/shift_model.hpp"

namespace boxgap::verify {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckResult finish(std::string name, const Timer& t, std::string fail = {}, std::string ok = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = fail.empty();
  r.detail = r.passed ? std::move(ok) : std::move(fail);
  r.seconds = t.seconds();
  return r;
}

// Role string: same value for all words differing only in hub a-values or
// block b-values.
std::string role_key(const Word& w) {
  std::string key;
  for (const auto& s : w.symbols()) key.push_back(static_cast<char>('0' + static_cast<int>(s.role())));
  return key;
}

}  // namespace

CheckResult counts(const GridConfig& cfg, std::int64_t nmax) {
  Timer t;
  auto dp = build_language_tables(nmax, cfg);
  auto brute = oracle::count_by_enumeration(nmax, cfg);
  const std::pair<Family, const std::vector<std::uint64_t>*> fams[] = {
      {Family::Sigma, &brute.sigma},
      {Family::Loops, &brute.loops},
      {Family::EndsAtHub, &brute.ends_at_hub},
      {Family::StartsAtHub, &brute.starts_at_hub},
  };
  for (std::int64_t n = 0; n <= nmax; ++n) {
    for (const auto& [fam, values] : fams) {
      const BigCount& got = dp.of(fam)[static_cast<std::size_t>(n)];
      std::uint64_t want = (*values)[static_cast<std::size_t>(n)];
      if (got != BigCount(std::to_string(want))) {
        return finish("counts", t,
                      std::string(family_name(fam)) + " N=" + std::to_string(n) + ": dp=" + got.get_str() +
                          " enumeration=" + std::to_string(want));
      }
    }
  }
  return finish("counts", t, {},
                "4 families, N<=" + std::to_string(nmax) + ", sigma(" + std::to_string(nmax) +
                    ")=" + dp.sigma.back().get_str());
}

CheckResult legality(const GridConfig& cfg, std::int64_t len) {
  Timer t;
  const auto alphabet = full_alphabet(cfg);
  std::uint64_t checked = 0;
  std::string fail;
  std::vector<Symbol> cur;
  std::function<void()> visit = [&]() {
    if (!fail.empty()) return;
    Word w(cur);
    bool scanner = is_legal(w, cfg);
    bool graph = oracle::is_subword(w, cfg);
    ++checked;
    if (scanner != graph) {
      fail = w.str() + ": scanner=" + (scanner ? "legal" : "illegal") + " graph=" + (graph ? "legal" : "illegal");
      return;
    }
    // Illegal words have only illegal extensions (factor sets are closed).
    if (!graph || static_cast<std::int64_t>(cur.size()) == len) return;
    for (const auto& s : alphabet) {
      cur.push_back(s);
      visit();
      cur.pop_back();
    }
  };
  visit();
  if (!fail.empty()) return finish("legality", t, fail);
  for (std::int64_t n = 0; n <= len; ++n) {
    if (enumerate_words(n, cfg) != oracle::subwords(n, cfg))
      return finish("legality", t, "enumerate_words(" + std::to_string(n) + ") differs from graph subwords");
  }
  return finish("legality", t, {}, std::to_string(checked) + " words, length<=" + std::to_string(len));
}

CheckResult forced(const GridConfig& cfg, std::int64_t kmax) {
  Timer t;
  BoxdimEngine engine(kmax, cfg);
  for (std::int64_t k = 1; k <= kmax; ++k) {
    std::map<std::int64_t, BigCount> tally;
    for (const auto& w : oracle::subwords(k, cfg)) {
      auto graph = oracle::forced_by_graph(w, cfg);
      std::int64_t f = forced_distance(w, cfg);
      if (!graph || *graph != f)
        return finish("forced", t,
                      w.str() + ": scanner=" + std::to_string(f) + " graph=" + (graph ? std::to_string(*graph) : "none"));
      tally[f] += 1;
    }
    if (tally != engine.histogram(k).buckets)
      return finish("forced", t, "histogram k=" + std::to_string(k) + " differs from the forced-distance tally");
  }
  return finish("forced", t, {}, "k<=" + std::to_string(kmax));
}

CheckResult columns(const GridConfig& cfg, std::int64_t kmax, std::int64_t lmax) {
  Timer t;
  std::uint64_t words = 0;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    std::map<std::pair<std::string, std::int64_t>, BigCount> brute;
    for (const auto& w : enumerate_words(k, cfg)) {
      ++words;
      const std::int64_t f = forced_distance(w, cfg);
      const std::string key = role_key(w);
      for (std::int64_t l = k; l <= lmax; ++l) {
        auto it = brute.find({key, l});
        if (it == brute.end()) it = brute.emplace(std::make_pair(key, l), column_count_brute(w, l, cfg)).first;
        BigCount closed = column_count_closed(f, k, l, cfg.m());
        if (closed != it->second)
          return finish("columns", t,
                        w.str() + " l=" + std::to_string(l) + ": closed=" + closed.get_str() +
                            " brute=" + it->second.get_str());
      }
    }
  }
  return finish("columns", t, {},
                std::to_string(words) + " words, k<=" + std::to_string(kmax) + ", l<=" + std::to_string(lmax));
}

CheckResult n_hat_sum(const GridConfig& cfg, std::int64_t kmax) {
  Timer t;
  BoxdimEngine engine(kmax, cfg);
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const std::int64_t l = l_of_k(k, cfg);
    std::map<std::string, BigCount> brute;
    BigCount sum = 0;
    for (const auto& w : enumerate_words(k, cfg)) {
      auto key = role_key(w);
      auto it = brute.find(key);
      if (it == brute.end()) it = brute.emplace(key, column_count_brute(w, l, cfg)).first;
      sum += it->second;
    }
    BigCount dp = engine.n_hat(k);
    if (sum != dp)
      return finish("n_hat", t, "k=" + std::to_string(k) + ": dp=" + dp.get_str() + " brute=" + sum.get_str());
  }
  return finish("n_hat", t, {}, "k<=" + std::to_string(kmax));
}

namespace {

// Sum of multinomials over partitions of c into powers of p.
BigCount reorder_sum(std::int64_t c, int p) {
  std::vector<std::int64_t> powers;
  for (std::int64_t v = 1; v <= c; v *= p) {
    powers.push_back(v);
    if (v > c / p) break;
  }
  BigCount total = 0;
  std::vector<std::int64_t> mult;
  std::function<void(std::size_t, std::int64_t)> visit = [&](std::size_t idx, std::int64_t left) {
    if (left == 0) {
      total += reorder_count(mult);
      return;
    }
    if (idx == powers.size()) return;
    const std::int64_t part = powers[powers.size() - 1 - idx];
    for (std::int64_t k = left / part; k >= 0; --k) {
      if (k > 0) mult.push_back(k);
      visit(idx + 1, left - k * part);
      if (k > 0) mult.pop_back();
    }
  };
  visit(0, c);
  return total;
}

}  // namespace

CheckResult power_sums(const std::vector<int>& bases, std::int64_t cmax_enum, std::int64_t cmax_reorder) {
  Timer t;
  for (int p : bases) {
    auto table = ordered_power_sums_table(std::max(cmax_enum, cmax_reorder), p);
    for (std::int64_t c = 0; c <= cmax_enum; ++c) {
      auto want = oracle::compositions_by_enumeration(c, p);
      if (table[static_cast<std::size_t>(c)] != BigCount(std::to_string(want)))
        return finish("power_sums", t,
                      "p=" + std::to_string(p) + " c=" + std::to_string(c) + ": S_c=" +
                          table[static_cast<std::size_t>(c)].get_str() + " compositions=" + std::to_string(want));
    }
    for (std::int64_t c = 0; c <= cmax_reorder; ++c) {
      BigCount sum = reorder_sum(c, p);
      if (sum != table[static_cast<std::size_t>(c)])
        return finish("power_sums", t,
                      "p=" + std::to_string(p) + " c=" + std::to_string(c) + ": S_c=" +
                          table[static_cast<std::size_t>(c)].get_str() + " reorder sum=" + sum.get_str());
    }
  }
  return finish("power_sums", t, {},
                "c<=" + std::to_string(cmax_enum) + " by enumeration, c<=" + std::to_string(cmax_reorder) +
                    " by reorder sums");
}

CheckResult grid_bracket(const GridConfig& cfg, std::int64_t kmax, double factor) {
  Timer t;
  BoxdimEngine engine(kmax, cfg);
  double worst = 1.0;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    BigCount grid = grid_box_count(k, cfg);
    BigCount dp = engine.n_hat(k);
    double ratio = std::exp(log_count(grid) - log_count(dp));
    worst = std::max(worst, std::max(ratio, 1.0 / ratio));
    if (ratio > factor || ratio < 1.0 / factor) {
      std::ostringstream os;
      os << "k=" << k << ": grid=" << grid.get_str() << " n_hat=" << dp.get_str() << " ratio=" << ratio;
      return finish("grid_bracket", t, os.str());
    }
  }
  std::ostringstream os;
  os << "k<=" << kmax << ", worst factor " << worst;
  return finish("grid_bracket", t, {}, os.str());
}

Plan plan_for(const GridConfig& cfg, std::int64_t nmax) {
  auto largest = [&](std::int64_t cap, const std::function<double(std::int64_t)>& cost, double limit) {
    std::int64_t k = 0;
    while (k < cap && cost(k + 1) <= limit) ++k;
    return k;
  };
  auto sigma = [&](std::int64_t k) { return std::exp(log_count(count_sigma(k, cfg))); };
  const double full = static_cast<double>(cfg.m()) * cfg.n();
  Plan plan{};
  plan.count_n = nmax;
  plan.legality_len = largest(nmax, [&](std::int64_t k) { return sigma(k - 1) * full; }, 2e5);
  plan.forced_k = largest(nmax, sigma, 2e5);
  plan.columns_k = largest(std::min<std::int64_t>(nmax, 6), sigma, 2e4);
  plan.columns_l = plan.columns_k + 4;
  plan.grid_k = largest(nmax, [&](std::int64_t k) { return std::pow(cfg.m(), static_cast<double>(l_of_k(k, cfg))); }, 1e6);
  return plan;
}

std::vector<std::string> check_names() {
  return {"counts", "legality", "forced", "columns", "n_hat", "power_sums", "grid_bracket"};
}

CheckResult run_check(const std::string& name, const GridConfig& cfg, const Plan& plan) {
  if (name == "counts") return counts(cfg, plan.count_n);
  if (name == "legality") return legality(cfg, plan.legality_len);
  if (name == "forced") return forced(cfg, plan.forced_k);
  if (name == "columns") return columns(cfg, plan.columns_k, plan.columns_l);
  if (name == "n_hat") return n_hat_sum(cfg, std::min(plan.columns_k, plan.forced_k));
  if (name == "power_sums") return power_sums({2, cfg.p()}, 30, 200);
  if (name == "grid_bracket") return grid_bracket(cfg, plan.grid_k, 10.0);
  throw DomainError("unknown check '" + name + "'");
}

}  // namespace boxgap::verify
