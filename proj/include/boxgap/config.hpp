#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace boxgap {

/// Construction parameters of the coded subshift.
///
/// `m` hub symbols (a,1) give the horizontal base, `n` is the vertical base,
/// and block runs have lengths that are powers of `p`. The n-2 block symbols
/// are (1,3)..(1,n); (1,2) is the tail symbol.
class GridConfig {
 public:
  /// Throws ConfigError naming the violated invariant.
  static GridConfig make(int m, int n, int p);

  static GridConfig paper() { return make(2, 12, 13); }
  static GridConfig tiny() { return make(2, 4, 2); }
  static GridConfig small() { return make(2, 6, 3); }

  /// One of "paper", "tiny", "small".
  static GridConfig preset(std::string_view name);

  /// {"m": int, "n": int, "p": int}
  static GridConfig from_json(std::string_view text);
  static GridConfig from_json_file(const std::string& path);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  int g() const noexcept { return n_ - 2; }

  bool is_paper_instance() const noexcept { return m_ == 2 && n_ == 12 && p_ == 13; }

  std::string to_json() const;

  friend bool operator==(const GridConfig&, const GridConfig&) = default;

 private:
  GridConfig(int m, int n, int p) : m_(m), n_(n), p_(p) {}

  int m_;
  int n_;
  int p_;
};

/// Smallest power of cfg.p() that is >= x. Throws DomainError for x <= 0.
std::int64_t tau(std::int64_t x, const GridConfig& cfg);
std::int64_t tau(std::int64_t x, int p);

bool is_power_of(std::int64_t x, int p) noexcept;

}  // namespace boxgap
