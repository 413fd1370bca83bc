#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boxgap/config.hpp"

namespace boxgap::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first mismatch, or a short summary
  double seconds = 0.0;
};

/// DP count tables vs path enumeration for every family, 0 <= N <= nmax.
CheckResult counts(const GridConfig& cfg, std::int64_t nmax);

/// Scanner legality vs graph membership over the full alphabet, lengths <= len;
/// enumerate_words vs graph subwords for the same lengths.
CheckResult legality(const GridConfig& cfg, std::int64_t len);

/// forced_distance vs graph distance for every legal word of length <= kmax,
/// and the DP forced histogram vs the tally of those distances.
CheckResult forced(const GridConfig& cfg, std::int64_t kmax);

/// column_count_closed(forced(i), |i|, l) == column_count_brute(i, l) for all
/// legal i with |i| <= kmax and |i| <= l <= lmax.
CheckResult columns(const GridConfig& cfg, std::int64_t kmax, std::int64_t lmax);

/// n_hat(k) == sum over Sigma_k of column_count_brute(i, l_of_k(k)), k <= kmax.
CheckResult n_hat_sum(const GridConfig& cfg, std::int64_t kmax);

/// ordered_power_sums vs explicit compositions for c <= cmax_enum, and the sum
/// of reorder_count over partitions into powers of p for c <= cmax_reorder.
CheckResult power_sums(const std::vector<int>& bases, std::int64_t cmax_enum, std::int64_t cmax_reorder);

/// n_hat(k)/factor <= grid_box_count(k) <= factor*n_hat(k) for 1 <= k <= kmax.
CheckResult grid_bracket(const GridConfig& cfg, std::int64_t kmax, double factor);

struct Plan {
  std::int64_t count_n;
  std::int64_t legality_len;
  std::int64_t forced_k;
  std::int64_t columns_k;
  std::int64_t columns_l;
  std::int64_t grid_k;
};

/// Limits for the whole suite at size nmax, capped to stay within seconds.
Plan plan_for(const GridConfig& cfg, std::int64_t nmax);

std::vector<std::string> check_names();

/// Runs one named check under `plan`. Throws DomainError for an unknown name.
CheckResult run_check(const std::string& name, const GridConfig& cfg, const Plan& plan);

}  // namespace boxgap::verify
