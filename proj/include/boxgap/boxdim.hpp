#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boxgap/combinatorics.hpp"
#include "boxgap/config.hpp"
#include "boxgap/word.hpp"

namespace boxgap {

/// Minimal l with m^l >= n^k, by exact integer comparison. Requires k >= 1.
std::int64_t l_of_k(std::int64_t k, const GridConfig& cfg);

/// M(i, l): distinct first-coordinate strings among legal length-l
/// extensions of `word`, by enumeration. Throws DomainError if the word is
/// illegal or l < |word|, InfeasibleError above `budget` extension paths.
BigCount column_count_brute(const Word& word, std::int64_t l, const GridConfig& cfg, double budget);
BigCount column_count_brute(const Word& word, std::int64_t l, const GridConfig& cfg);

/// hubs^max(0, l - k - f): columns met by a length-k word with forced distance f.
BigCount column_count_closed(std::int64_t f, std::int64_t k, std::int64_t l, int hubs = 2);

struct ForcedHistogram {
  std::int64_t k = 0;
  std::map<std::int64_t, BigCount> buckets;  // forced distance -> number of words

  BigCount total() const;
};

struct ScaleRecord {
  std::int64_t k = 0;
  std::int64_t l = 0;
  BigCount n_hat;
  double ratio = 0.0;  // log(n_hat) / (k log n)

  friend bool operator==(const ScaleRecord&, const ScaleRecord&) = default;
};

/// Shares the count tables between many scales k <= kmax.
class BoxdimEngine {
 public:
  BoxdimEngine(std::int64_t kmax, const GridConfig& cfg);

  std::int64_t kmax() const noexcept { return kmax_; }
  const GridConfig& config() const noexcept { return cfg_; }
  const LanguageTables& tables() const noexcept { return tables_; }

  ForcedHistogram histogram(std::int64_t k) const;
  BigCount n_hat(std::int64_t k) const;
  ScaleRecord record(std::int64_t k) const;

 private:
  void check_k(std::int64_t k) const;

  GridConfig cfg_;
  std::int64_t kmax_;
  LanguageTables tables_;
  std::vector<BigCount> gpow_;
};

ForcedHistogram forced_histogram(std::int64_t k, const GridConfig& cfg);
BigCount n_hat(std::int64_t k, const GridConfig& cfg);

struct DimensionConstants {
  double d_high;
  double d_low;
};

/// Closed-form limits along the two scale families. Paper instance only;
/// ConfigError otherwise.
DimensionConstants dimension_constants(const GridConfig& cfg);

struct PaperScales {
  std::vector<std::int64_t> k;        // p^N
  std::vector<std::int64_t> k_prime;  // ceil(p^(N - 1/2))
};

/// Scales for N = 1..nmax. Throws DomainError for nmax < 1.
PaperScales paper_scales(std::int64_t nmax, int p = 13);

/// g^k * m^(l - 2k): the count of columns met by full-length block words at
/// scale k, an exact lower bound for n_hat when l >= 2k.
struct LowerBoundCheck {
  std::int64_t k = 0;
  std::int64_t l = 0;
  bool applicable = false;  // l >= 2k
  bool holds = false;
};

LowerBoundCheck check_block_lower_bound(const BoxdimEngine& engine, std::int64_t k);

struct PaperScaleRow {
  std::int64_t n;
  ScaleRecord high;  // k = p^N
  ScaleRecord low;   // k = ceil(p^(N - 1/2))
  LowerBoundCheck bound;
};

struct GapReport {
  GridConfig cfg;
  std::vector<ScaleRecord> series;  // k = 1..kmax
  std::vector<PaperScaleRow> paper_rows;
  bool has_constants = false;
  DimensionConstants constants{};
  double max_ratio = 0.0;
  std::int64_t argmax_k = 0;
  double min_ratio = 0.0;
  std::int64_t argmin_k = 0;
};

/// Series up to p^nmax (or `kmax` when positive) plus the paper-scale rows
/// whose scales fit in the series.
GapReport gap_report(std::int64_t nmax, const GridConfig& cfg, std::int64_t kmax = 0);

/// Markdown rendering; byte-deterministic.
std::string render_report(const GapReport& report);

}  // namespace boxgap
