#include "boxgap/word.hpp"

#include <cctype>
#include <charconv>

#include "boxgap/error.hpp"

namespace boxgap {

const char* role_name(Role r) noexcept {
  switch (r) {
    case Role::Hub: return "hub";
    case Role::Tail: return "tail";
    case Role::Block: return "block";
    case Role::Unused: return "unused";
  }
  return "?";
}

std::vector<Symbol> legal_alphabet(const GridConfig& cfg) {
  std::vector<Symbol> out;
  for (int a = 1; a <= cfg.m(); ++a)
    for (int b = 1; b <= cfg.n(); ++b)
      if (Symbol s{a, b}; s.role() != Role::Unused) out.push_back(s);
  return out;
}

std::vector<Symbol> full_alphabet(const GridConfig& cfg) {
  std::vector<Symbol> out;
  for (int a = 1; a <= cfg.m(); ++a)
    for (int b = 1; b <= cfg.n(); ++b) out.push_back({a, b});
  return out;
}

Word::Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  for (const auto& s : symbols_) {
    Role r = s.role();
    // Distinct hub symbols are separate one-symbol C-words, but they still
    // form a single maximal run of role Hub.
    if (!runs_.empty() && runs_.back().role == r)
      ++runs_.back().length;
    else
      runs_.push_back({r, 1});
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](int& value) {
    skip_ws();
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) throw DomainError("Word::parse: expected integer at offset " + std::to_string(i));
    i = static_cast<std::size_t>(ptr - text.data());
    skip_ws();
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw DomainError(std::string("Word::parse: expected '") + c + "' at offset " + std::to_string(i));
    ++i;
  };
  skip_ws();
  while (i < text.size()) {
    Symbol s;
    expect('(');
    read_int(s.a);
    expect(',');
    read_int(s.b);
    expect(')');
    if (s.a < 1 || s.b < 1) throw DomainError("Word::parse: symbol coordinates start at 1");
    out.push_back(s);
    skip_ws();
  }
  return Word(std::move(out));
}

Word Word::prefix(std::size_t len) const {
  return Word({symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(std::min(len, size()))});
}

Word Word::suffix(std::size_t len) const {
  len = std::min(len, size());
  return Word({symbols_.end() - static_cast<std::ptrdiff_t>(len), symbols_.end()});
}

Word Word::operator+(const Word& rhs) const {
  auto joined = symbols_;
  joined.insert(joined.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  return Word(std::move(joined));
}

std::string Word::str() const {
  std::string out;
  for (const auto& s : symbols_) out += "(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
  return out;
}

Word repeat(Symbol x, std::size_t count) { return Word(std::vector<Symbol>(count, x)); }

}  // namespace boxgap
