#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boxgap/config.hpp"

namespace boxgap {

enum class Role : std::uint8_t {
  Hub,     // (a,1)
  Tail,    // (1,2)
  Block,   // (1,b), b >= 3
  Unused,  // (a,b) with a >= 2, b >= 2: in the alphabet but on no edge
};

const char* role_name(Role r) noexcept;

struct Symbol {
  int a = 1;
  int b = 1;

  constexpr Role role() const noexcept {
    if (b == 1) return Role::Hub;
    if (a != 1) return Role::Unused;
    return b == 2 ? Role::Tail : Role::Block;
  }

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Symbols that label some edge of the presentation, in (a,b) order.
std::vector<Symbol> legal_alphabet(const GridConfig& cfg);

/// Every symbol (a,b), 1 <= a <= m, 1 <= b <= n, in (a,b) order.
std::vector<Symbol> full_alphabet(const GridConfig& cfg);

struct Run {
  Role role;
  std::int64_t length;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Finite word with its maximal-run decomposition.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols);

  /// Parses "(1,3)(1,2)(2,1)"; whitespace between symbols is ignored.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Run> runs() const noexcept { return runs_; }

  Word prefix(std::size_t len) const;
  Word suffix(std::size_t len) const;
  Word operator+(const Word& rhs) const;

  std::string str() const;

  friend bool operator==(const Word& x, const Word& y) { return x.symbols_ == y.symbols_; }
  friend auto operator<=>(const Word& x, const Word& y) { return x.symbols_ <=> y.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  std::vector<Run> runs_;
};

/// x repeated `count` times.
Word repeat(Symbol x, std::size_t count);

}  // namespace boxgap
