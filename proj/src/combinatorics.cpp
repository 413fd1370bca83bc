#include "boxgap/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "boxgap/error.hpp"

namespace boxgap {

double log_count(const BigCount& value) {
  if (sgn(value) <= 0) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::Sigma: return "sigma";
    case Family::Loops: return "loops";
    case Family::EndsAtHub: return "ends_at_hub";
    case Family::StartsAtHub: return "starts_at_hub";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "sigma") return Family::Sigma;
  if (name == "loops") return Family::Loops;
  if (name == "ends_at_hub") return Family::EndsAtHub;
  if (name == "starts_at_hub") return Family::StartsAtHub;
  throw ConfigError("unknown family '" + std::string(name) +
                    "' (expected sigma, loops, ends_at_hub or starts_at_hub)");
}

const std::vector<BigCount>& LanguageTables::of(Family f) const {
  switch (f) {
    case Family::Sigma: return sigma;
    case Family::Loops: return loops;
    case Family::EndsAtHub: return ends_at_hub;
    case Family::StartsAtHub: return starts_at_hub;
  }
  return sigma;
}

namespace {

std::vector<std::int64_t> powers_up_to(std::int64_t limit, int p) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 1; q <= limit; q *= p) out.push_back(q);
  return out;
}

// Sum of table[lo..hi] via prefix sums (prefix[i] = table[0] + ... + table[i-1]).
BigCount range_sum(const std::vector<BigCount>& prefix, std::int64_t lo, std::int64_t hi) {
  if (lo < 0) lo = 0;
  if (hi < lo) return 0;
  return prefix[static_cast<std::size_t>(hi + 1)] - prefix[static_cast<std::size_t>(lo)];
}

}  // namespace

double projected_table_bytes(std::int64_t nmax, const GridConfig& cfg) {
  // Counts at length N have at most N*log2(m + n) bits. Ten dense arrays of
  // that size are alive at once (four outputs, prefix sums, helper sums).
  double bits_per_symbol = std::log2(static_cast<double>(cfg.m() + cfg.n()));
  double n = static_cast<double>(nmax);
  double per_array = (n * n / 2.0) * bits_per_symbol / 8.0 + (n + 1) * 32.0;
  auto levels = static_cast<double>(powers_up_to(std::max<std::int64_t>(nmax, 1), cfg.p()).size());
  return per_array * (10.0 + levels);
}

LanguageTables build_language_tables(std::int64_t nmax, const GridConfig& cfg, double memory_cap) {
  if (nmax < 0) throw DomainError("build_language_tables: negative nmax");
  if (double bytes = projected_table_bytes(nmax, cfg); bytes > memory_cap)
    throw InfeasibleError("count tables up to N=" + std::to_string(nmax) + " need about " +
                              std::to_string(bytes / (1024.0 * 1024.0)) + " MiB (cap " +
                              std::to_string(memory_cap / (1024.0 * 1024.0)) + " MiB)",
                          bytes);

  const auto size = static_cast<std::size_t>(nmax + 1);
  const unsigned long m = static_cast<unsigned long>(cfg.m());
  const unsigned long g = static_cast<unsigned long>(cfg.g());
  const auto blocks = powers_up_to(std::max<std::int64_t>(nmax, 1), cfg.p());

  std::vector<BigCount> gpow(size + 1);
  gpow[0] = 1;
  for (std::size_t i = 1; i < gpow.size(); ++i) gpow[i] = gpow[i - 1] * g;

  // Loops: a hub symbol, or a block of length P followed by its tail.
  std::vector<BigCount> loops(size);
  loops[0] = 1;
  for (std::size_t n = 1; n < size; ++n) {
    BigCount v = loops[n - 1] * m;
    for (auto block : blocks) {
      auto len = static_cast<std::size_t>(2 * block);
      if (len > n) break;
      v += gpow[static_cast<std::size_t>(block)] * loops[n - len];
    }
    loops[n] = std::move(v);
  }

  std::vector<BigCount> loop_prefix(size + 1);
  for (std::size_t i = 0; i < size; ++i) loop_prefix[i + 1] = loop_prefix[i] + loops[i];

  // edge_block[r][n] = sum_{v=1}^{min(P, n)} g^v * loops[n - v] with P = blocks[r]:
  // a left-edge block suffix of length v completed by a full tail of length P.
  std::vector<std::vector<BigCount>> edge_block(blocks.size(), std::vector<BigCount>(size));
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    auto block = static_cast<std::size_t>(blocks[r]);
    auto& e = edge_block[r];
    for (std::size_t n = 1; n < size; ++n) {
      e[n] = g * (loops[n - 1] + e[n - 1]);
      if (n >= block + 1) e[n] -= gpow[block + 1] * loops[n - 1 - block];
    }
  }

  // Forced-distance-0 words by first run: hub, tail run, or block run + full tail.
  std::vector<BigCount> ends(size);
  ends[0] = 1;
  for (std::size_t j = 1; j < size; ++j) {
    BigCount v = m * loops[j - 1] + 1;
    v += loop_prefix[j] - loops[0];  // tail run of length z < j, then a loop of length j - z
    for (std::size_t r = 0; r < blocks.size(); ++r) {
      auto block = static_cast<std::size_t>(blocks[r]);
      if (block >= j) break;
      v += edge_block[r][j - block];
    }
    ends[j] = std::move(v);
  }

  std::vector<BigCount> ends_prefix(size + 1);
  for (std::size_t i = 0; i < size; ++i) ends_prefix[i + 1] = ends_prefix[i] + ends[i];

  // Prefixes from the hub vertex: loop, then an unfinished C-word
  // (a visible block of any length, or a full block P with a tail 1 <= z < P).
  std::vector<BigCount> starts(size);
  BigCount loop_then_block = 0;  // sum_{x=1}^{n} loops[n - x] g^x
  for (std::size_t n = 0; n < size; ++n) {
    if (n >= 1) loop_then_block = g * (loops[n - 1] + loop_then_block);
    BigCount v = loops[n] + loop_then_block;
    for (auto block : blocks) {
      auto s = static_cast<std::int64_t>(n);
      if (s - block - 1 < 0) break;
      v += gpow[static_cast<std::size_t>(block)] * range_sum(loop_prefix, s - 2 * block + 1, s - block - 1);
    }
    starts[n] = std::move(v);
  }

  // All legal words: forced-0 words, a nonempty forced-0 prefix followed by an
  // unfinished visible C-word, or an unfinished left-edge word.
  std::vector<BigCount> sigma(size);
  sigma[0] = 1;
  BigCount ends_then_block = 0;  // sum_{x=1}^{k-1} ends[k - x] g^x
  BigCount geometric = 0;        // sum_{v=1}^{k-1} g^v
  for (std::size_t k = 1; k < size; ++k) {
    if (k >= 2) {
      ends_then_block = g * (ends[k - 1] + ends_then_block);
      geometric += gpow[k - 1];
    }
    auto s = static_cast<std::int64_t>(k);
    BigCount v = ends[k] + ends_then_block;
    for (auto block : blocks) {
      if (s - block - 1 < 1) break;
      v += gpow[static_cast<std::size_t>(block)] *
           range_sum(ends_prefix, std::max<std::int64_t>(1, s - 2 * block + 1), s - block - 1);
    }
    v += gpow[k] + geometric;
    // Left-edge block v then a tail of full length P >= v ends at the hub; those
    // words are already in ends[k].
    for (auto block : blocks) {
      if (block > s - 1) break;
      if (2 * block >= s) v -= gpow[static_cast<std::size_t>(s - block)];
    }
    sigma[k] = std::move(v);
  }

  return {std::move(loops), std::move(ends), std::move(starts), std::move(sigma)};
}

CountTable::CountTable(Family family, const GridConfig& cfg, std::vector<BigCount> values)
    : family_(family), cfg_(cfg), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("CountTable: empty value list");
}

CountTable build_count_table(Family family, std::int64_t nmax, const GridConfig& cfg) {
  auto tables = build_language_tables(nmax, cfg);
  switch (family) {
    case Family::Sigma: return CountTable(family, cfg, std::move(tables.sigma));
    case Family::Loops: return CountTable(family, cfg, std::move(tables.loops));
    case Family::EndsAtHub: return CountTable(family, cfg, std::move(tables.ends_at_hub));
    case Family::StartsAtHub: return CountTable(family, cfg, std::move(tables.starts_at_hub));
  }
  throw DomainError("build_count_table: unknown family");
}

namespace {

BigCount single(Family f, std::int64_t n, const GridConfig& cfg) {
  if (n < 0) throw DomainError(std::string("count_") + family_name(f) + ": negative length");
  return build_count_table(f, n, cfg).at(n);
}

}  // namespace

BigCount count_loops(std::int64_t n, const GridConfig& cfg) { return single(Family::Loops, n, cfg); }
BigCount count_ends_at_hub(std::int64_t n, const GridConfig& cfg) { return single(Family::EndsAtHub, n, cfg); }
BigCount count_sigma(std::int64_t n, const GridConfig& cfg) { return single(Family::Sigma, n, cfg); }
BigCount count_starts_at_hub(std::int64_t n, const GridConfig& cfg) { return single(Family::StartsAtHub, n, cfg); }

std::vector<BigCount> ordered_power_sums_table(std::int64_t cmax, int p) {
  if (cmax < 0) throw DomainError("ordered_power_sums: negative argument");
  if (p < 2) throw DomainError("ordered_power_sums: base must be >= 2");
  auto parts = powers_up_to(std::max<std::int64_t>(cmax, 1), p);
  std::vector<BigCount> s(static_cast<std::size_t>(cmax + 1));
  s[0] = 1;
  for (std::int64_t c = 1; c <= cmax; ++c) {
    BigCount v = 0;
    for (auto part : parts) {
      if (part > c) break;
      v += s[static_cast<std::size_t>(c - part)];
    }
    s[static_cast<std::size_t>(c)] = std::move(v);
  }
  return s;
}

BigCount ordered_power_sums(std::int64_t c, int p) { return ordered_power_sums_table(c, p).back(); }

BigCount ordered_power_sums(std::int64_t c, const GridConfig& cfg) { return ordered_power_sums(c, cfg.p()); }

BigCount reorder_count(std::span<const std::int64_t> multiplicities) {
  BigCount result = 1;
  unsigned long total = 0;
  for (auto k : multiplicities) {
    if (k < 1) throw DomainError("reorder_count: multiplicities must be >= 1");
    total += static_cast<unsigned long>(k);
    BigCount binom;
    mpz_bin_uiui(binom.get_mpz_t(), total, static_cast<unsigned long>(k));
    result *= binom;
  }
  return result;
}

std::vector<EntropyPoint> entropy_series(const CountTable& table, std::int64_t nmax) {
  if (nmax > table.nmax())
    throw DomainError("entropy_series: table filled to N=" + std::to_string(table.nmax()) +
                      ", requested " + std::to_string(nmax));
  std::vector<EntropyPoint> out;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    const auto& v = table.at(n);
    if (sgn(v) == 0) continue;
    double lv = log_count(v);
    out.push_back({n, lv, lv / static_cast<double>(n)});
  }
  return out;
}

}  // namespace boxgap
