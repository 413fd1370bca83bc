#include "boxgap/boxdim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "boxgap/error.hpp"
#include "boxgap/format.hpp"
#include "boxgap/shift_model.hpp"

namespace boxgap {

namespace {

BigCount big_pow(unsigned long base, std::int64_t exponent) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace

std::int64_t l_of_k(std::int64_t k, const GridConfig& cfg) {
  if (k < 1) throw DomainError("l_of_k: k must be >= 1");
  const auto m = static_cast<unsigned long>(cfg.m());
  const BigCount target = big_pow(static_cast<unsigned long>(cfg.n()), k);
  auto l = static_cast<std::int64_t>(
      std::ceil(static_cast<double>(k) * std::log(cfg.n()) / std::log(cfg.m())));
  while (big_pow(m, l) < target) ++l;
  while (l > 0 && big_pow(m, l - 1) >= target) --l;
  return l;
}

BigCount column_count_closed(std::int64_t f, std::int64_t k, std::int64_t l, int hubs) {
  if (k < 0 || l < k || f < 0) throw DomainError("column_count_closed: requires 0 <= k <= l and f >= 0");
  return big_pow(static_cast<unsigned long>(hubs), std::max<std::int64_t>(0, l - k - f));
}

BigCount column_count_brute(const Word& word, std::int64_t l, const GridConfig& cfg, double budget) {
  auto start = scan(word, cfg);
  if (!start) throw DomainError("column_count_brute: illegal word " + word.str());
  const auto k = static_cast<std::int64_t>(word.size());
  if (l < k) throw DomainError("column_count_brute: l < |word|");
  const std::int64_t extra = l - k;
  const double paths = std::pow(static_cast<double>(cfg.m() + 2), static_cast<double>(extra));
  if (paths > budget)
    throw InfeasibleError("oracle infeasible: column_count_brute would walk about " +
                              format_real(paths) + " extension paths",
                          paths);

  // One representative per (role, first coordinate): all block symbols share
  // role and projection, so their extension sets project identically.
  std::vector<Symbol> choices;
  for (int a = 1; a <= cfg.m(); ++a) choices.push_back({a, 1});
  choices.push_back({1, 2});
  choices.push_back({1, 3});

  // Projection suffixes as base-m integers; the word's own projection is fixed.
  std::vector<bool> seen(static_cast<std::size_t>(std::pow(cfg.m(), extra)), false);
  std::uint64_t distinct = 0;
  std::function<void(const Scanner&, std::int64_t, std::uint64_t)> visit =
      [&](const Scanner& sc, std::int64_t left, std::uint64_t code) {
        if (left == 0) {
          if (!seen[code]) {
            seen[code] = true;
            ++distinct;
          }
          return;
        }
        for (const auto& s : choices) {
          Scanner next = sc;
          if (next.step(s.role()))
            visit(next, left - 1, code * static_cast<std::uint64_t>(cfg.m()) + static_cast<std::uint64_t>(s.a - 1));
        }
      };
  visit(*start, extra, 0);
  return BigCount(static_cast<unsigned long>(distinct));
}

BigCount column_count_brute(const Word& word, std::int64_t l, const GridConfig& cfg) {
  return column_count_brute(word, l, cfg, enumeration_budget());
}

BigCount ForcedHistogram::total() const {
  BigCount sum = 0;
  for (const auto& [f, count] : buckets) sum += count;
  return sum;
}

BoxdimEngine::BoxdimEngine(std::int64_t kmax, const GridConfig& cfg)
    : cfg_(cfg), kmax_(kmax), tables_(build_language_tables(kmax, cfg)) {
  if (kmax < 1) throw DomainError("BoxdimEngine: kmax must be >= 1");
  gpow_.resize(static_cast<std::size_t>(kmax + 1));
  gpow_[0] = 1;
  for (std::size_t i = 1; i < gpow_.size(); ++i) gpow_[i] = gpow_[i - 1] * static_cast<unsigned long>(cfg.g());
}

void BoxdimEngine::check_k(std::int64_t k) const {
  if (k < 1 || k > kmax_)
    throw DomainError("BoxdimEngine: k=" + std::to_string(k) + " outside [1, " + std::to_string(kmax_) + "]");
}

ForcedHistogram BoxdimEngine::histogram(std::int64_t k) const {
  check_k(k);
  const int p = cfg_.p();
  const auto& ends = tables_.ends_at_hub;
  auto at = [](const std::vector<BigCount>& v, std::int64_t i) -> const BigCount& {
    return v[static_cast<std::size_t>(i)];
  };

  std::vector<std::int64_t> blocks;
  for (std::int64_t q = 1; q <= k; q *= p) blocks.push_back(q);

  ForcedHistogram h;
  h.k = k;
  h.buckets[0] = at(ends, k);

  // A nonempty forced-0 prefix of length k - x, then an unfinished C-word of
  // length x with a visible start.
  for (std::int64_t x = 1; x < k; ++x) {
    const BigCount& prefix = at(ends, k - x);
    h.buckets[2 * tau(x, p) - x] += prefix * at(gpow_, x);
    for (auto block : blocks) {
      if (block > x - 1) break;
      if (2 * block > x) h.buckets[2 * block - x] += prefix * at(gpow_, block);
    }
  }

  // Words whose only block run touches the left edge.
  h.buckets[tau(k, p)] += at(gpow_, k);
  for (std::int64_t v = 1; v < k; ++v) {
    std::int64_t z = k - v;
    std::int64_t f = tau(std::max(v, z), p) - z;
    if (f > 0) h.buckets[f] += at(gpow_, v);
  }
  return h;
}

BigCount BoxdimEngine::n_hat(std::int64_t k) const {
  const auto l = l_of_k(k, cfg_);
  const auto hist = histogram(k);
  const auto m = static_cast<unsigned long>(cfg_.m());
  BigCount total = 0;
  for (const auto& [f, count] : hist.buckets) {
    auto e = std::max<std::int64_t>(0, l - k - f);
    if (m == 2) {
      BigCount shifted;
      mpz_mul_2exp(shifted.get_mpz_t(), count.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
      total += shifted;
    } else {
      total += count * big_pow(m, e);
    }
  }
  return total;
}

ScaleRecord BoxdimEngine::record(std::int64_t k) const {
  ScaleRecord r;
  r.k = k;
  r.l = l_of_k(k, cfg_);
  r.n_hat = n_hat(k);
  r.ratio = log_count(r.n_hat) / (static_cast<double>(k) * std::log(static_cast<double>(cfg_.n())));
  return r;
}

ForcedHistogram forced_histogram(std::int64_t k, const GridConfig& cfg) { return BoxdimEngine(k, cfg).histogram(k); }

BigCount n_hat(std::int64_t k, const GridConfig& cfg) { return BoxdimEngine(k, cfg).n_hat(k); }

DimensionConstants dimension_constants(const GridConfig& cfg) {
  if (!cfg.is_paper_instance())
    throw ConfigError("dimension_constants: closed forms exist only for (m,n,p) = (2,12,13)");
  const double log2 = std::log(2.0), log4 = std::log(4.0), log10 = std::log(10.0), log12 = std::log(12.0);
  const double s = 1.0 / std::sqrt(13.0);
  DimensionConstants c;
  c.d_high = log10 / log12 + log2 * (1.0 / log2 - 2.0 / log12);
  c.d_low = (s * log10 + (1.0 - s) * log4) / log12 + log2 * (1.0 / log2 - (1.0 + s) / log12);
  return c;
}

PaperScales paper_scales(std::int64_t nmax, int p) {
  if (nmax < 1) throw DomainError("paper_scales: nmax must be >= 1");
  PaperScales out;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    BigCount k = big_pow(static_cast<unsigned long>(p), n);
    // Smallest q with q^2 >= p^(2n-1).
    BigCount square = big_pow(static_cast<unsigned long>(p), 2 * n - 1), q, rem;
    mpz_sqrtrem(q.get_mpz_t(), rem.get_mpz_t(), square.get_mpz_t());
    if (sgn(rem) != 0) ++q;
    if (!k.fits_slong_p() || !q.fits_slong_p()) throw DomainError("paper_scales: scale overflows int64");
    out.k.push_back(k.get_si());
    out.k_prime.push_back(q.get_si());
  }
  return out;
}

LowerBoundCheck check_block_lower_bound(const BoxdimEngine& engine, std::int64_t k) {
  const auto& cfg = engine.config();
  LowerBoundCheck c;
  c.k = k;
  c.l = l_of_k(k, cfg);
  c.applicable = c.l >= 2 * k;
  if (c.applicable) {
    BigCount bound = big_pow(static_cast<unsigned long>(cfg.g()), k) *
                     big_pow(static_cast<unsigned long>(cfg.m()), c.l - 2 * k);
    c.holds = engine.n_hat(k) >= bound;
  }
  return c;
}

GapReport gap_report(std::int64_t nmax, const GridConfig& cfg, std::int64_t kmax) {
  auto scales = paper_scales(nmax, cfg.p());
  if (kmax <= 0) kmax = scales.k.back();
  BoxdimEngine engine(kmax, cfg);

  GapReport rep{cfg, {}, {}, false, {}, 0.0, 0, 0.0, 0};
  rep.series.reserve(static_cast<std::size_t>(kmax));
  for (std::int64_t k = 1; k <= kmax; ++k) rep.series.push_back(engine.record(k));

  for (std::size_t i = 0; i < scales.k.size(); ++i) {
    auto high = scales.k[i], low = scales.k_prime[i];
    if (high > kmax || low > kmax) break;
    rep.paper_rows.push_back({static_cast<std::int64_t>(i + 1), rep.series[static_cast<std::size_t>(high - 1)],
                              rep.series[static_cast<std::size_t>(low - 1)], check_block_lower_bound(engine, high)});
  }
  if (cfg.is_paper_instance()) {
    rep.has_constants = true;
    rep.constants = dimension_constants(cfg);
  }
  auto [lo, hi] = std::minmax_element(rep.series.begin(), rep.series.end(),
                                      [](const ScaleRecord& a, const ScaleRecord& b) { return a.ratio < b.ratio; });
  rep.min_ratio = lo->ratio;
  rep.argmin_k = lo->k;
  rep.max_ratio = hi->ratio;
  rep.argmax_k = hi->k;
  return rep;
}

std::string render_report(const GapReport& rep) {
  std::ostringstream out;
  const auto& cfg = rep.cfg;
  out << "# Box-counting gap report\n\n";
  out << "Configuration: m=" << cfg.m() << ", n=" << cfg.n() << ", p=" << cfg.p() << "\n";
  out << "Scales: k = 1.." << rep.series.size() << " (delta = " << cfg.n() << "^-k)\n\n";

  out << "## Scale families\n\n";
  out << "| N | k = p^N | l | ratio | block bound | k' = ceil(p^(N-1/2)) | l' | ratio' |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : rep.paper_rows) {
    const char* bound = !row.bound.applicable ? "n/a" : (row.bound.holds ? "holds" : "FAILS");
    out << "| " << row.n << " | " << row.high.k << " | " << row.high.l << " | " << format_real(row.high.ratio)
        << " | " << bound << " | " << row.low.k << " | " << row.low.l << " | " << format_real(row.low.ratio)
        << " |\n";
  }
  out << "\n## Observed range\n\n";
  out << "max ratio = " << format_real(rep.max_ratio) << " at k = " << rep.argmax_k << "\n";
  out << "min ratio = " << format_real(rep.min_ratio) << " at k = " << rep.argmin_k << "\n\n";

  out << "## Asymptotic constants\n\n";
  if (rep.has_constants) {
    out << "D_high = " << format_real(rep.constants.d_high) << "\n";
    out << "D_low = " << format_real(rep.constants.d_low) << "\n";
    out << "D_high - D_low = " << format_real(rep.constants.d_high - rep.constants.d_low) << "\n\n";
    out << "The constants are limits along k = p^N and k' = ceil(p^(N-1/2)) as N grows; finite-k ratios\n"
           "carry O(1/k) corrections and are not expected to match them.\n";
  } else {
    out << "Closed forms are only available for (m,n,p) = (2,12,13).\n";
  }
  out << "\nn_hat counts columns of width m^-l over each length-k cylinder; it matches the\n"
         "minimal cover by diameter-delta sets only up to a bounded factor.\n";
  return out.str();
}

}  // namespace boxgap
