#include "boxgap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <tuple>

#include "boxgap/boxdim.hpp"
#include "boxgap/error.hpp"
#include "boxgap/format.hpp"
#include "boxgap/shift_model.hpp"

namespace boxgap {

namespace {

using u128 = unsigned __int128;

mpq_class pow_q(int base, std::int64_t exponent) {
  BigCount v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return mpq_class(v);
}

// base^exponent if it stays below 2^62, else 0.
std::uint64_t small_pow(int base, std::int64_t exponent) {
  std::uint64_t v = 1;
  for (std::int64_t i = 0; i < exponent; ++i) {
    if (v > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(base)) return 0;
    v *= static_cast<std::uint64_t>(base);
  }
  return v;
}

bool in_unit_square(const mpq_class& v) { return v >= 0 && v <= 1; }

}  // namespace

Point ifs_map(const Symbol& s, const Point& pt, const GridConfig& cfg) {
  if (!in_unit_square(pt.x) || !in_unit_square(pt.y)) throw DomainError("ifs_map: point outside [0,1]^2");
  if (s.a < 1 || s.a > cfg.m() || s.b < 1 || s.b > cfg.n()) throw DomainError("ifs_map: symbol outside the alphabet");
  Point out{(pt.x + (s.a - 1)) / cfg.m(), (pt.y + (s.b - 1)) / cfg.n()};
  out.x.canonicalize();
  out.y.canonicalize();
  return out;
}

Rect::Rect(BigCount x_num, BigCount y_num, std::int64_t depth, int m, int n)
    : x_num_(std::move(x_num)), y_num_(std::move(y_num)), depth_(depth), m_(m), n_(n) {}

mpq_class Rect::width() const { return 1 / pow_q(m_, depth_); }
mpq_class Rect::height() const { return 1 / pow_q(n_, depth_); }
mpq_class Rect::x0() const { return mpq_class(x_num_) * width(); }
mpq_class Rect::y0() const { return mpq_class(y_num_) * height(); }
mpq_class Rect::x1() const { return x0() + width(); }
mpq_class Rect::y1() const { return y0() + height(); }

bool Rect::contains(const Rect& o) const {
  return x0() <= o.x0() && o.x1() <= x1() && y0() <= o.y0() && o.y1() <= y1();
}

bool Rect::interiors_overlap(const Rect& o) const {
  return x0() < o.x1() && o.x0() < x1() && y0() < o.y1() && o.y0() < y1();
}

Rect cylinder_rect(const Word& word, const GridConfig& cfg) {
  if (!is_legal(word, cfg)) throw DomainError("cylinder_rect: illegal word " + word.str());
  // S_{i1} o ... o S_{id} maps the unit square to the rectangle whose lower-left
  // corner has base-m digits a_j - 1 and base-n digits b_j - 1.
  BigCount x = 0, y = 0;
  for (const auto& s : word.symbols()) {
    x = x * cfg.m() + (s.a - 1);
    y = y * cfg.n() + (s.b - 1);
  }
  return Rect(std::move(x), std::move(y), static_cast<std::int64_t>(word.size()), cfg.m(), cfg.n());
}

namespace {

// Realizable first-coordinate suffixes of length `len` after a scan state,
// as sorted base-m codes.
class SuffixSets {
 public:
  SuffixSets(const GridConfig& cfg, std::int64_t len) : cfg_(cfg), len_(len), space_(small_pow(cfg.m(), len)) {
    if (space_ == 0 || space_ > (std::uint64_t{1} << 26))
      throw InfeasibleError("grid_box_count: suffix space m^" + std::to_string(len) + " too large",
                            std::pow(cfg.m(), static_cast<double>(len)));
    for (int a = 1; a <= cfg.m(); ++a) choices_.push_back({a, 1});
    choices_.push_back({1, 2});
    choices_.push_back({1, 3});
  }

  const std::vector<std::uint64_t>& of(const Scanner& sc) {
    auto key = std::make_tuple(static_cast<int>(sc.phase()), sc.first(), sc.second());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<bool> seen(space_, false);
    std::function<void(const Scanner&, std::int64_t, std::uint64_t)> visit =
        [&](const Scanner& s, std::int64_t left, std::uint64_t code) {
          if (left == 0) {
            seen[code] = true;
            return;
          }
          for (const auto& c : choices_) {
            Scanner next = s;
            if (next.step(c.role()))
              visit(next, left - 1, code * static_cast<std::uint64_t>(cfg_.m()) + static_cast<std::uint64_t>(c.a - 1));
          }
        };
    visit(sc, len_, 0);
    std::vector<std::uint64_t> codes;
    for (std::uint64_t c = 0; c < space_; ++c)
      if (seen[c]) codes.push_back(c);
    return cache_.emplace(key, std::move(codes)).first->second;
  }

 private:
  GridConfig cfg_;
  std::int64_t len_;
  std::uint64_t space_;
  std::vector<Symbol> choices_;
  std::map<std::tuple<int, std::int64_t, std::int64_t>, std::vector<std::uint64_t>> cache_;
};

// Legal role sequences of length k with their scan state and hub positions.
void for_each_role_sequence(const GridConfig& cfg, std::int64_t k,
                            const std::function<void(const Scanner&, const std::vector<std::int64_t>&, std::int64_t)>& fn) {
  std::vector<std::int64_t> hubs;
  std::function<void(const Scanner&, std::int64_t, std::int64_t)> visit = [&](const Scanner& sc, std::int64_t depth,
                                                                              std::int64_t blocks) {
    if (depth == k) {
      fn(sc, hubs, blocks);
      return;
    }
    for (Role r : {Role::Hub, Role::Tail, Role::Block}) {
      Scanner next = sc;
      if (!next.step(r)) continue;
      if (r == Role::Hub) hubs.push_back(depth);
      visit(next, depth + 1, blocks + (r == Role::Block ? 1 : 0));
      if (r == Role::Hub) hubs.pop_back();
    }
  };
  visit(Scanner(cfg), 0, 0);
}

}  // namespace

BigCount grid_box_count(std::int64_t k, const GridConfig& cfg, double budget) {
  if (k < 1) throw DomainError("grid_box_count: k must be >= 1");
  const std::int64_t l = l_of_k(k, cfg);
  const std::int64_t rest = l - k;
  const std::uint64_t cols = small_pow(cfg.n(), k);
  const std::uint64_t width_den = small_pow(cfg.m(), l);
  if (cols == 0 || width_den == 0 || static_cast<double>(cols) * static_cast<double>(width_den) > 1e36)
    throw InfeasibleError("grid_box_count: grid n^-" + std::to_string(k) + " exceeds exact 128-bit arithmetic",
                          std::pow(cfg.n(), static_cast<double>(k)));

  // Rows are fixed by the first k second coordinates, so a row holds the
  // words sharing one role sequence and one choice of block symbols; the
  // g^#blocks rows of a role sequence all see the same column set.
  SuffixSets suffixes(cfg, rest);
  double work = 0;
  for_each_role_sequence(cfg, k, [&](const Scanner& sc, const std::vector<std::int64_t>& hubs, std::int64_t) {
    work += std::pow(cfg.m(), static_cast<double>(hubs.size())) * static_cast<double>(suffixes.of(sc).size());
  });
  if (work > budget)
    throw InfeasibleError("oracle infeasible: grid_box_count(" + std::to_string(k) + ") would visit about " +
                              format_real(work) + " rectangles (budget " + format_real(budget) + ")",
                          work);

  const auto m = static_cast<std::uint64_t>(cfg.m());
  const std::uint64_t suffix_scale = small_pow(cfg.m(), rest);
  BigCount total = 0;
  for_each_role_sequence(cfg, k, [&](const Scanner& sc, const std::vector<std::int64_t>& hubs, std::int64_t blocks) {
    const auto& codes = suffixes.of(sc);
    if (codes.empty()) return;
    std::vector<std::uint64_t> place(hubs.size());
    for (std::size_t j = 0; j < hubs.size(); ++j) place[j] = small_pow(cfg.m(), k - 1 - hubs[j]);
    const std::uint64_t combos = small_pow(cfg.m(), static_cast<std::int64_t>(hubs.size()));

    // Increasing counter over hub digits (first hub most significant) gives
    // increasing x, so column ranges arrive sorted.
    std::uint64_t distinct = 0;
    std::int64_t covered = -1;
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t prefix = 0, rem = c;
      for (std::size_t j = hubs.size(); j-- > 0;) {
        prefix += (rem % m) * place[j];
        rem /= m;
      }
      for (auto s : codes) {
        u128 x = static_cast<u128>(prefix) * suffix_scale + s;
        auto first = static_cast<std::int64_t>(x * cols / width_den);
        auto last = static_cast<std::int64_t>(((x + 1) * cols + width_den - 1) / width_den) - 1;
        if (last > covered) {
          distinct += static_cast<std::uint64_t>(last - std::max(first, covered + 1) + 1);
          covered = last;
        }
      }
    }
    BigCount rows;
    mpz_ui_pow_ui(rows.get_mpz_t(), static_cast<unsigned long>(cfg.g()), static_cast<unsigned long>(blocks));
    total += rows * static_cast<unsigned long>(distinct);
  });
  return total;
}

BigCount grid_box_count(std::int64_t k, const GridConfig& cfg) { return grid_box_count(k, cfg, enumeration_budget()); }

Raster::Raster(int width, int height) : width_(width), height_(height) {
  if (width < 1 || height < 1) throw DomainError("Raster: dimensions must be positive");
  bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

std::size_t Raster::index(int px, int py) const {
  if (px < 0 || px >= width_ || py < 0 || py >= height_) throw DomainError("Raster: pixel out of range");
  return static_cast<std::size_t>(py) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(px);
}

std::size_t Raster::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

Raster rasterize(std::int64_t depth, int width, int height, const GridConfig& cfg, double budget) {
  if (depth < 0) throw DomainError("rasterize: negative depth");
  double projected = std::exp(log_count(count_sigma(depth, cfg)));
  if (projected > budget)
    throw InfeasibleError("rasterize: depth " + std::to_string(depth) + " has about " + format_real(projected) +
                              " cylinders (budget " + format_real(budget) + ")",
                          projected);
  const std::uint64_t xden = small_pow(cfg.m(), depth), yden = small_pow(cfg.n(), depth);
  if (xden == 0 || yden == 0) throw InfeasibleError("rasterize: depth too large for exact arithmetic", projected);

  Raster raster(width, height);
  const auto W = static_cast<u128>(width), H = static_cast<u128>(height);
  auto mark = [&](std::uint64_t x, std::uint64_t y) {
    auto c0 = static_cast<int>(x * W / xden);
    auto c1 = static_cast<int>(((x + 1) * W + xden - 1) / xden) - 1;
    auto r0 = static_cast<int>(y * H / yden);
    auto r1 = static_cast<int>(((y + 1) * H + yden - 1) / yden) - 1;
    for (int r = r0; r <= r1; ++r)
      for (int c = c0; c <= c1; ++c) raster.set(c, height - 1 - r);
  };

  const auto alphabet = legal_alphabet(cfg);
  std::function<void(const Scanner&, std::int64_t, std::uint64_t, std::uint64_t)> visit =
      [&](const Scanner& sc, std::int64_t left, std::uint64_t x, std::uint64_t y) {
        if (left == 0) {
          mark(x, y);
          return;
        }
        for (const auto& s : alphabet) {
          Scanner next = sc;
          if (next.step(s.role()))
            visit(next, left - 1, x * static_cast<std::uint64_t>(cfg.m()) + static_cast<std::uint64_t>(s.a - 1),
                  y * static_cast<std::uint64_t>(cfg.n()) + static_cast<std::uint64_t>(s.b - 1));
        }
      };
  visit(Scanner(cfg), depth, 0, 0);
  return raster;
}

Raster rasterize(std::int64_t depth, int width, int height, const GridConfig& cfg) {
  return rasterize(depth, width, height, cfg, enumeration_budget());
}

}  // namespace boxgap
