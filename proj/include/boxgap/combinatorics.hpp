#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "boxgap/config.hpp"

namespace boxgap {

/// Exact nonnegative integer count.
using BigCount = mpz_class;

/// Natural log of a positive count from its top bits and bit length;
/// -infinity for zero. Relative error well below 1e-12.
double log_count(const BigCount& value);

enum class Family : std::uint8_t {
  Sigma,        // all legal words
  Loops,        // labels of v -> v paths
  EndsAtHub,    // forced distance 0
  StartsAtHub,  // prefixes of concatenations of C-words
};

const char* family_name(Family f) noexcept;
Family parse_family(std::string_view name);

/// All four families for 0 <= N <= nmax, built together since they share
/// partial sums.
struct LanguageTables {
  std::vector<BigCount> loops;
  std::vector<BigCount> ends_at_hub;
  std::vector<BigCount> starts_at_hub;
  std::vector<BigCount> sigma;

  std::int64_t nmax() const noexcept { return static_cast<std::int64_t>(loops.size()) - 1; }
  const std::vector<BigCount>& of(Family f) const;
};

/// Default memory cap for dense tables (2 GiB).
inline constexpr double kTableMemoryCap = 2.0 * 1024 * 1024 * 1024;

/// Throws InfeasibleError if the projected table memory exceeds `memory_cap`.
LanguageTables build_language_tables(std::int64_t nmax, const GridConfig& cfg,
                                     double memory_cap = kTableMemoryCap);

/// Projected bytes held by build_language_tables(nmax, cfg).
double projected_table_bytes(std::int64_t nmax, const GridConfig& cfg);

class CountTable {
 public:
  CountTable(Family family, const GridConfig& cfg, std::vector<BigCount> values);

  Family family() const noexcept { return family_; }
  const GridConfig& config() const noexcept { return cfg_; }
  std::int64_t nmax() const noexcept { return static_cast<std::int64_t>(values_.size()) - 1; }
  const BigCount& at(std::int64_t n) const { return values_.at(static_cast<std::size_t>(n)); }
  std::span<const BigCount> values() const noexcept { return values_; }

 private:
  Family family_;
  GridConfig cfg_;
  std::vector<BigCount> values_;
};

CountTable build_count_table(Family family, std::int64_t nmax, const GridConfig& cfg);

BigCount count_loops(std::int64_t n, const GridConfig& cfg);
BigCount count_ends_at_hub(std::int64_t n, const GridConfig& cfg);
BigCount count_sigma(std::int64_t n, const GridConfig& cfg);
BigCount count_starts_at_hub(std::int64_t n, const GridConfig& cfg);

/// Number of compositions of c into parts that are powers of p.
BigCount ordered_power_sums(std::int64_t c, int p);
BigCount ordered_power_sums(std::int64_t c, const GridConfig& cfg);
std::vector<BigCount> ordered_power_sums_table(std::int64_t cmax, int p);

/// (m_1 + ... + m_k)! / (m_1! ... m_k!); 1 for an empty list.
/// Throws DomainError for a multiplicity < 1.
BigCount reorder_count(std::span<const std::int64_t> multiplicities);

struct EntropyPoint {
  std::int64_t n;
  double log_value;
  double rate;  // log_value / n
};

/// (N, log value, log value / N) for 1 <= N <= nmax, skipping zero values.
std::vector<EntropyPoint> entropy_series(const CountTable& table, std::int64_t nmax);

}  // namespace boxgap
