#pragma once

// Brute-force reference implementations built directly on the labelled
// graph presentation (hub vertex v plus one chain of states per block
// length). Nothing here uses Scanner; these are the independent side of
// every equivalence check.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "boxgap/config.hpp"
#include "boxgap/word.hpp"

namespace boxgap::oracle {

/// Finite truncation of the presentation G: blocks of length p^r <= max_block.
class PresentationGraph {
 public:
  PresentationGraph(const GridConfig& cfg, std::int64_t max_block);

  /// Graph that is exact for windows and extensions up to `length` symbols.
  static PresentationGraph for_length(const GridConfig& cfg, std::int64_t length);

  std::size_t state_count() const noexcept { return dist_.size(); }
  static constexpr int kHub = 0;

  /// Successor states along edges labelled with role r.
  const std::vector<int>& successors(int state, Role r) const;

  /// Length of the shortest path from `state` back to the hub vertex.
  std::int64_t distance_to_hub(int state) const { return dist_[static_cast<std::size_t>(state)]; }

  const GridConfig& config() const noexcept { return cfg_; }

 private:
  GridConfig cfg_;
  std::vector<std::int64_t> dist_;
  std::vector<std::vector<int>> next_[3];  // indexed by Role (Hub, Tail, Block)
};

using StateSet = std::vector<bool>;

/// Image of `from` under one symbol; empty if the symbol is on no edge.
StateSet advance(const PresentationGraph& graph, const StateSet& from, const Symbol& s);
bool any(const StateSet& set);

/// Every state as a possible start (a hidden prefix may end anywhere).
StateSet all_states(const PresentationGraph& graph);
StateSet hub_only(const PresentationGraph& graph);

struct Counts {
  std::vector<std::uint64_t> sigma;          // factors of length N
  std::vector<std::uint64_t> loops;          // labels of v -> v paths
  std::vector<std::uint64_t> ends_at_hub;    // labels of some path ending at v
  std::vector<std::uint64_t> starts_at_hub;  // labels of some path starting at v
};

/// Counts by visiting every symbol string that labels a path, N <= nmax.
Counts count_by_enumeration(std::int64_t nmax, const GridConfig& cfg);

/// All words of length n labelling some path, lexicographic.
std::vector<Word> subwords(std::int64_t n, const GridConfig& cfg);

/// Membership of an arbitrary word (any symbols) in the factor set.
bool is_subword(const Word& word, const GridConfig& cfg);

/// Minimum over all paths labelled by `word` of the distance from the path's
/// end to the hub vertex; nullopt if no path carries the label.
std::optional<std::int64_t> forced_by_graph(const Word& word, const GridConfig& cfg);

/// Distinct first-coordinate strings of length-l words extending `word`.
std::set<std::vector<int>> projected_extensions(const PresentationGraph& graph, const StateSet& from,
                                                const Word& word, std::int64_t extra);

std::uint64_t columns_by_graph(const Word& word, std::int64_t l, const GridConfig& cfg);

/// Compositions of c into powers of p, by explicit enumeration.
std::uint64_t compositions_by_enumeration(std::int64_t c, int p);

}  // namespace boxgap::oracle
