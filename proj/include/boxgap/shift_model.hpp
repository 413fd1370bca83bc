#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boxgap/config.hpp"
#include "boxgap/word.hpp"

namespace boxgap {

/// Deterministic left-to-right scan over the run structure of a word.
///
/// The state records what the observed prefix allows next. Runs touching the
/// left edge of the window may extend into a hidden prefix, so they carry
/// their own phases (Edge*). Legality only depends on symbol roles.
class Scanner {
 public:
  enum class Phase : std::uint8_t {
    Start,          // empty word
    Free,           // at the hub vertex: after a hub symbol or a completed tail
    Block,          // visible block start, `first` symbols so far
    Tail,           // visible block of length `first` = p^r, `second` tail symbols so far
    EdgeBlock,      // whole word is a block run of length `first`
    EdgeTail,       // whole word is a tail run of length `second`
    EdgeBlockTail,  // block run `first` at the left edge, then `second` tail symbols
  };

  explicit Scanner(const GridConfig& cfg) : p_(cfg.p()) {}

  /// Advances by one symbol of role r. Returns false (state unchanged) if the
  /// extended word is illegal.
  bool step(Role r);

  /// Minimal number of further symbols before a hub symbol may follow.
  std::int64_t forced() const;

  Phase phase() const noexcept { return phase_; }
  std::int64_t first() const noexcept { return first_; }
  std::int64_t second() const noexcept { return second_; }

  friend bool operator==(const Scanner&, const Scanner&) = default;

 private:
  int p_;
  Phase phase_ = Phase::Start;
  std::int64_t first_ = 0;
  std::int64_t second_ = 0;
};

enum class WordClass : std::uint8_t { A, B, C, D, E, HubPure };

const char* class_name(WordClass c) noexcept;

struct ParseOutcome {
  bool legal = false;
  std::int64_t forced = 0;  // meaningful only when legal
  WordClass class_tag = WordClass::A;
};

/// Legal-alphabet membership for cfg (coordinates in range, role not Unused).
bool symbol_is_legal(const Symbol& s, const GridConfig& cfg) noexcept;

/// Scans a whole word; nullopt when illegal.
std::optional<Scanner> scan(const Word& word, const GridConfig& cfg);

bool is_legal(const Word& word, const GridConfig& cfg);

/// Throws DomainError for an illegal word.
std::int64_t forced_distance(const Word& word, const GridConfig& cfg);

/// Throws DomainError for an illegal word.
WordClass classify(const Word& word, const GridConfig& cfg);

ParseOutcome parse(const Word& word, const GridConfig& cfg);

/// Default cap on brute-force enumeration sizes; BOXGAP_BUDGET overrides.
double enumeration_budget();

/// All legal words of length n in lexicographic (a,b) order.
/// Throws InfeasibleError when #Sigma_n exceeds `budget`.
std::vector<Word> enumerate_words(std::int64_t n, const GridConfig& cfg, double budget);
std::vector<Word> enumerate_words(std::int64_t n, const GridConfig& cfg);

}  // namespace boxgap
