#include "boxgap/oracle.hpp"

#include <algorithm>
#include <functional>

#include "boxgap/error.hpp"

namespace boxgap::oracle {

namespace {

int role_index(Role r) {
  switch (r) {
    case Role::Hub: return 0;
    case Role::Tail: return 1;
    case Role::Block: return 2;
    case Role::Unused: break;
  }
  return -1;
}

bool in_range(const Symbol& s, const GridConfig& cfg) {
  return s.a >= 1 && s.a <= cfg.m() && s.b >= 1 && s.b <= cfg.n();
}

}  // namespace

PresentationGraph::PresentationGraph(const GridConfig& cfg, std::int64_t max_block) : cfg_(cfg) {
  // State 0 is v. A block of length L owns states for "i block symbols read"
  // (1 <= i <= L) and "j tail symbols read" (1 <= j < L).
  std::vector<std::int64_t> lengths;
  for (std::int64_t L = 1; L <= max_block; L *= cfg.p()) lengths.push_back(L);

  dist_.push_back(0);
  struct Chain {
    std::int64_t length;
    int block_base;  // state of i block symbols read is block_base + i - 1
    int tail_base;   // state of j tail symbols read is tail_base + j - 1
  };
  std::vector<Chain> chains;
  for (auto L : lengths) {
    Chain c{L, static_cast<int>(dist_.size()), 0};
    for (std::int64_t i = 1; i <= L; ++i) dist_.push_back((L - i) + L);
    c.tail_base = static_cast<int>(dist_.size());
    for (std::int64_t j = 1; j < L; ++j) dist_.push_back(L - j);
    chains.push_back(c);
  }
  for (auto& table : next_) table.assign(dist_.size(), {});

  auto hub = role_index(Role::Hub), tail = role_index(Role::Tail), block = role_index(Role::Block);
  next_[hub][kHub].push_back(kHub);
  for (const auto& c : chains) {
    next_[block][kHub].push_back(c.block_base);
    for (std::int64_t i = 1; i < c.length; ++i)
      next_[block][static_cast<std::size_t>(c.block_base + i - 1)].push_back(static_cast<int>(c.block_base + i));
    int last_block = static_cast<int>(c.block_base + c.length - 1);
    next_[tail][static_cast<std::size_t>(last_block)].push_back(c.length == 1 ? kHub : c.tail_base);
    for (std::int64_t j = 1; j < c.length; ++j) {
      int from = static_cast<int>(c.tail_base + j - 1);
      next_[tail][static_cast<std::size_t>(from)].push_back(j + 1 == c.length ? kHub : from + 1);
    }
  }
}

PresentationGraph PresentationGraph::for_length(const GridConfig& cfg, std::int64_t length) {
  // Any window of `length` symbols fits inside blocks of length tau(length);
  // one more factor of p is slack.
  return PresentationGraph(cfg, tau(std::max<std::int64_t>(length, 1), cfg) * cfg.p());
}

const std::vector<int>& PresentationGraph::successors(int state, Role r) const {
  static const std::vector<int> none;
  int idx = role_index(r);
  if (idx < 0) return none;
  return next_[idx][static_cast<std::size_t>(state)];
}

StateSet advance(const PresentationGraph& graph, const StateSet& from, const Symbol& s) {
  StateSet out(graph.state_count(), false);
  if (!in_range(s, graph.config())) return out;
  for (std::size_t q = 0; q < from.size(); ++q)
    if (from[q])
      for (int t : graph.successors(static_cast<int>(q), s.role())) out[static_cast<std::size_t>(t)] = true;
  return out;
}

bool any(const StateSet& set) { return std::find(set.begin(), set.end(), true) != set.end(); }

StateSet all_states(const PresentationGraph& graph) { return StateSet(graph.state_count(), true); }

StateSet hub_only(const PresentationGraph& graph) {
  StateSet s(graph.state_count(), false);
  s[PresentationGraph::kHub] = true;
  return s;
}

Counts count_by_enumeration(std::int64_t nmax, const GridConfig& cfg) {
  auto graph = PresentationGraph::for_length(cfg, nmax);
  auto size = static_cast<std::size_t>(nmax + 1);
  Counts out{std::vector<std::uint64_t>(size), std::vector<std::uint64_t>(size),
             std::vector<std::uint64_t>(size), std::vector<std::uint64_t>(size)};

  // Edges are labelled by role, so every role sequence labelling a path stands
  // for (symbols per role) many words. Visit each such role sequence once.
  const Symbol representative[] = {{1, 1}, {1, 2}, {1, 3}};
  const std::uint64_t multiplicity[] = {static_cast<std::uint64_t>(cfg.m()), 1,
                                        static_cast<std::uint64_t>(cfg.g())};

  // `anywhere`: ends of paths with any start; `from_hub`: ends of paths from v.
  std::function<void(const StateSet&, const StateSet&, std::size_t, std::uint64_t)> visit =
      [&](const StateSet& anywhere, const StateSet& from_hub, std::size_t depth, std::uint64_t words) {
        out.sigma[depth] += words;
        if (anywhere[PresentationGraph::kHub]) out.ends_at_hub[depth] += words;
        if (any(from_hub)) out.starts_at_hub[depth] += words;
        if (from_hub[PresentationGraph::kHub]) out.loops[depth] += words;
        if (depth + 1 == size) return;
        for (int r = 0; r < 3; ++r) {
          auto next = advance(graph, anywhere, representative[r]);
          if (any(next)) visit(next, advance(graph, from_hub, representative[r]), depth + 1, words * multiplicity[r]);
        }
      };
  visit(all_states(graph), hub_only(graph), 0, 1);
  return out;
}

std::vector<Word> subwords(std::int64_t n, const GridConfig& cfg) {
  auto graph = PresentationGraph::for_length(cfg, n);
  auto alphabet = full_alphabet(cfg);
  std::vector<Word> out;
  std::vector<Symbol> current;
  std::function<void(const StateSet&)> visit = [&](const StateSet& states) {
    if (static_cast<std::int64_t>(current.size()) == n) {
      out.emplace_back(current);
      return;
    }
    for (const auto& s : alphabet) {
      auto next = advance(graph, states, s);
      if (!any(next)) continue;
      current.push_back(s);
      visit(next);
      current.pop_back();
    }
  };
  visit(all_states(graph));
  return out;
}

namespace {

StateSet run_word(const PresentationGraph& graph, const Word& word) {
  auto states = all_states(graph);
  for (const auto& s : word.symbols()) {
    states = advance(graph, states, s);
    if (!any(states)) break;
  }
  return states;
}

}  // namespace

bool is_subword(const Word& word, const GridConfig& cfg) {
  auto graph = PresentationGraph::for_length(cfg, static_cast<std::int64_t>(word.size()));
  return any(run_word(graph, word));
}

std::optional<std::int64_t> forced_by_graph(const Word& word, const GridConfig& cfg) {
  auto graph = PresentationGraph::for_length(cfg, static_cast<std::int64_t>(word.size()) + 1);
  auto states = run_word(graph, word);
  std::optional<std::int64_t> best;
  for (std::size_t q = 0; q < states.size(); ++q)
    if (states[q]) {
      auto d = graph.distance_to_hub(static_cast<int>(q));
      if (!best || d < *best) best = d;
    }
  return best;
}

std::set<std::vector<int>> projected_extensions(const PresentationGraph& graph, const StateSet& from,
                                                const Word& word, std::int64_t extra) {
  std::set<std::vector<int>> out;
  if (!any(from)) return out;
  std::vector<int> projection;
  for (const auto& s : word.symbols()) projection.push_back(s.a);
  auto alphabet = full_alphabet(graph.config());
  std::function<void(const StateSet&, std::int64_t)> visit = [&](const StateSet& states, std::int64_t left) {
    if (left == 0) {
      out.insert(projection);
      return;
    }
    for (const auto& s : alphabet) {
      auto next = advance(graph, states, s);
      if (!any(next)) continue;
      projection.push_back(s.a);
      visit(next, left - 1);
      projection.pop_back();
    }
  };
  visit(from, extra);
  return out;
}

std::uint64_t columns_by_graph(const Word& word, std::int64_t l, const GridConfig& cfg) {
  auto k = static_cast<std::int64_t>(word.size());
  if (l < k) throw DomainError("columns_by_graph: l < |word|");
  auto graph = PresentationGraph::for_length(cfg, l + 1);
  return projected_extensions(graph, run_word(graph, word), word, l - k).size();
}

std::uint64_t compositions_by_enumeration(std::int64_t c, int p) {
  std::vector<std::int64_t> parts;
  for (std::int64_t q = 1; q <= std::max<std::int64_t>(c, 1); q *= p) parts.push_back(q);
  std::uint64_t count = 0;
  std::function<void(std::int64_t)> visit = [&](std::int64_t left) {
    if (left == 0) {
      ++count;
      return;
    }
    for (auto part : parts)
      if (part <= left) visit(left - part);
  };
  visit(c);
  return count;
}

}  // namespace boxgap::oracle
