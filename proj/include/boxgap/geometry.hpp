#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "boxgap/combinatorics.hpp"
#include "boxgap/config.hpp"
#include "boxgap/word.hpp"

namespace boxgap {

struct Point {
  mpq_class x;
  mpq_class y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// S_(a,b)(x, y) = ((x + a - 1)/m, (y + b - 1)/n), exactly.
/// Throws DomainError if the point lies outside [0,1]^2.
Point ifs_map(const Symbol& s, const Point& pt, const GridConfig& cfg);

/// S_word([0,1]^2): [x_num/m^d, (x_num+1)/m^d] x [y_num/n^d, (y_num+1)/n^d].
class Rect {
 public:
  Rect(BigCount x_num, BigCount y_num, std::int64_t depth, int m, int n);

  const BigCount& x_num() const noexcept { return x_num_; }
  const BigCount& y_num() const noexcept { return y_num_; }
  std::int64_t depth() const noexcept { return depth_; }

  mpq_class x0() const;
  mpq_class y0() const;
  mpq_class x1() const;
  mpq_class y1() const;
  mpq_class width() const;
  mpq_class height() const;

  /// Closed containment.
  bool contains(const Rect& other) const;
  /// True if the open interiors intersect.
  bool interiors_overlap(const Rect& other) const;

  friend bool operator==(const Rect&, const Rect&) = default;

 private:
  BigCount x_num_;
  BigCount y_num_;
  std::int64_t depth_;
  int m_;
  int n_;
};

/// Throws DomainError for an illegal word.
Rect cylinder_rect(const Word& word, const GridConfig& cfg);

/// Cells of the n^-k grid (half-open cells) met by the union of the
/// half-open depth-l cylinder rectangles, l = l_of_k(k).
/// Throws InfeasibleError when the work estimate exceeds `budget`.
BigCount grid_box_count(std::int64_t k, const GridConfig& cfg, double budget);
BigCount grid_box_count(std::int64_t k, const GridConfig& cfg);

class Raster {
 public:
  Raster(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  /// (0,0) is the top-left pixel.
  bool get(int px, int py) const { return bits_[index(px, py)] != 0; }
  void set(int px, int py) { bits_[index(px, py)] = 1; }
  std::size_t count() const;

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  std::size_t index(int px, int py) const;

  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

/// Pixel (px, py) is set iff some half-open depth-`depth` cylinder rectangle
/// meets its half-open pixel square. Row 0 is the top (y near 1).
Raster rasterize(std::int64_t depth, int width, int height, const GridConfig& cfg, double budget);
Raster rasterize(std::int64_t depth, int width, int height, const GridConfig& cfg);

}  // namespace boxgap
