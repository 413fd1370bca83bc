#include "boxgap/shift_model.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "boxgap/combinatorics.hpp"
#include "boxgap/error.hpp"

namespace boxgap {

bool Scanner::step(Role r) {
  if (r == Role::Unused) return false;
  switch (phase_) {
    case Phase::Start:
      if (r == Role::Hub) {
        phase_ = Phase::Free;
      } else if (r == Role::Tail) {
        phase_ = Phase::EdgeTail;
        second_ = 1;
      } else {
        phase_ = Phase::EdgeBlock;
        first_ = 1;
      }
      return true;

    case Phase::Free:
      if (r == Role::Tail) return false;
      if (r == Role::Block) {
        phase_ = Phase::Block;
        first_ = 1;
      }
      return true;

    case Phase::Block:
      if (r == Role::Hub) return false;
      if (r == Role::Block) {
        ++first_;
        return true;
      }
      if (!is_power_of(first_, p_)) return false;
      if (first_ == 1) {
        phase_ = Phase::Free;
        first_ = 0;
      } else {
        phase_ = Phase::Tail;
        second_ = 1;
      }
      return true;

    case Phase::Tail:
      if (r != Role::Tail) return false;
      if (++second_ == first_) {
        phase_ = Phase::Free;
        first_ = second_ = 0;
      }
      return true;

    case Phase::EdgeBlock:
      if (r == Role::Hub) return false;
      if (r == Role::Block) {
        ++first_;
      } else {
        phase_ = Phase::EdgeBlockTail;
        second_ = 1;
      }
      return true;

    case Phase::EdgeTail:
      if (r == Role::Tail) {
        ++second_;
        return true;
      }
      second_ = 0;
      if (r == Role::Hub) {
        phase_ = Phase::Free;
      } else {
        phase_ = Phase::Block;
        first_ = 1;
      }
      return true;

    case Phase::EdgeBlockTail:
      if (r == Role::Tail) {
        ++second_;
        return true;
      }
      // The tail is complete only if it has the full length p^r of a block
      // that covers the visible block suffix.
      if (!is_power_of(second_, p_) || second_ < first_) return false;
      first_ = second_ = 0;
      if (r == Role::Hub) {
        phase_ = Phase::Free;
      } else {
        phase_ = Phase::Block;
        first_ = 1;
      }
      return true;
  }
  return false;
}

std::int64_t Scanner::forced() const {
  switch (phase_) {
    case Phase::Start:
    case Phase::Free:
    case Phase::EdgeTail:
      return 0;
    case Phase::Block:
      return 2 * tau(first_, p_) - first_;
    case Phase::Tail:
      return first_ - second_;
    case Phase::EdgeBlock:
      return tau(first_, p_);
    case Phase::EdgeBlockTail:
      return tau(std::max(first_, second_), p_) - second_;
  }
  return 0;
}

const char* class_name(WordClass c) noexcept {
  switch (c) {
    case WordClass::A: return "a";
    case WordClass::B: return "b";
    case WordClass::C: return "c";
    case WordClass::D: return "d";
    case WordClass::E: return "e";
    case WordClass::HubPure: return "hub-pure";
  }
  return "?";
}

bool symbol_is_legal(const Symbol& s, const GridConfig& cfg) noexcept {
  return s.a >= 1 && s.a <= cfg.m() && s.b >= 1 && s.b <= cfg.n() && s.role() != Role::Unused;
}

std::optional<Scanner> scan(const Word& word, const GridConfig& cfg) {
  Scanner sc(cfg);
  for (const auto& s : word.symbols())
    if (!symbol_is_legal(s, cfg) || !sc.step(s.role())) return std::nullopt;
  return sc;
}

bool is_legal(const Word& word, const GridConfig& cfg) { return scan(word, cfg).has_value(); }

namespace {

Scanner require_legal(const Word& word, const GridConfig& cfg, const char* op) {
  auto sc = scan(word, cfg);
  if (!sc) throw DomainError(std::string(op) + ": illegal word " + word.str());
  return *sc;
}

WordClass classify_scanned(const Word& word, const Scanner& sc) {
  using P = Scanner::Phase;
  switch (sc.phase()) {
    case P::Start:
    case P::EdgeTail:
      return WordClass::A;
    case P::EdgeBlock:
      return WordClass::C;
    case P::EdgeBlockTail:
      return sc.forced() == 0 ? WordClass::A : WordClass::D;
    case P::Block:
      return WordClass::B;
    case P::Tail:
      return WordClass::E;
    case P::Free:
      break;
  }
  auto runs = word.runs();
  if (runs.back().role == Role::Hub)
    return runs.size() == 1 ? WordClass::HubPure : WordClass::A;
  // Trailing completed tail: class (e) when its block start is visible,
  // i.e. something precedes the block run.
  bool visible_block = runs.size() >= 3 && runs[runs.size() - 2].role == Role::Block;
  return visible_block ? WordClass::E : WordClass::A;
}

}  // namespace

std::int64_t forced_distance(const Word& word, const GridConfig& cfg) {
  return require_legal(word, cfg, "forced_distance").forced();
}

WordClass classify(const Word& word, const GridConfig& cfg) {
  return classify_scanned(word, require_legal(word, cfg, "classify"));
}

ParseOutcome parse(const Word& word, const GridConfig& cfg) {
  auto sc = scan(word, cfg);
  if (!sc) return {};
  return {true, sc->forced(), classify_scanned(word, *sc)};
}

double enumeration_budget() {
  if (const char* env = std::getenv("BOXGAP_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e8;
}

namespace {

void extend_words(const GridConfig& cfg, const std::vector<Symbol>& alphabet, const Scanner& sc,
                  std::int64_t remaining, std::vector<Symbol>& current, std::vector<Word>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (const auto& s : alphabet) {
    Scanner next = sc;
    if (!next.step(s.role())) continue;
    current.push_back(s);
    extend_words(cfg, alphabet, next, remaining - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_words(std::int64_t n, const GridConfig& cfg, double budget) {
  if (n < 0) throw DomainError("enumerate_words: negative length");
  double projected = log_count(count_sigma(n, cfg)) / std::log(10.0);
  if (projected > std::log10(budget))
    throw InfeasibleError("oracle infeasible: enumerating Sigma_" + std::to_string(n) +
                              " would produce about 10^" + std::to_string(projected) +
                              " words (budget " + std::to_string(budget) + ")",
                          std::pow(10.0, projected));
  std::vector<Word> out;
  std::vector<Symbol> current;
  extend_words(cfg, legal_alphabet(cfg), Scanner(cfg), n, current, out);
  return out;
}

std::vector<Word> enumerate_words(std::int64_t n, const GridConfig& cfg) {
  return enumerate_words(n, cfg, enumeration_budget());
}

}  // namespace boxgap
