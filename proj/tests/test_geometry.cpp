#include <doctest.h>

#include <set>
#include <sstream>

#include "boxgap/boxdim.hpp"
#include "boxgap/error.hpp"
#include "boxgap/geometry.hpp"
#include "boxgap/io.hpp"
#include "boxgap/shift_model.hpp"
#include "boxgap/verify.hpp"

using namespace boxgap;

namespace {
mpq_class Q(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}
}  // namespace

TEST_CASE("ifs maps") {
  const auto paper = GridConfig::paper();
  CHECK(ifs_map({1, 1}, {Q(0, 1), Q(0, 1)}, paper) == Point{Q(0, 1), Q(0, 1)});
  CHECK(ifs_map({2, 1}, {Q(0, 1), Q(0, 1)}, paper) == Point{Q(1, 2), Q(0, 1)});
  CHECK(ifs_map({1, 12}, {Q(1, 1), Q(1, 1)}, paper) == Point{Q(1, 2), Q(1, 1)});
  CHECK(ifs_map({2, 5}, {Q(1, 3), Q(2, 3)}, paper) == Point{Q(2, 3), Q(7, 18)});
  CHECK_THROWS_AS(ifs_map({1, 1}, {Q(3, 2), Q(0, 1)}, paper), DomainError);
}

TEST_CASE("cylinder rectangles") {
  const auto paper = GridConfig::paper();
  auto unit = cylinder_rect(Word{}, paper);
  CHECK(unit.x0() == 0);
  CHECK(unit.x1() == 1);
  CHECK(unit.y1() == 1);

  auto r = cylinder_rect(Word::parse("(1,1)(2,1)"), paper);
  CHECK(r.x0() == Q(1, 4));
  CHECK(r.x1() == Q(1, 2));
  CHECK(r.y0() == 0);
  CHECK(r.y1() == Q(1, 144));

  // composing ifs_map agrees with the rectangle corner
  Word w = Word::parse("(1,3)(1,2)(2,1)(1,7)");
  Point corner{Q(0, 1), Q(0, 1)};
  for (std::size_t i = w.size(); i-- > 0;) corner = ifs_map(w[i], corner, paper);
  auto rw = cylinder_rect(w, paper);
  CHECK(rw.x0() == corner.x);
  CHECK(rw.y0() == corner.y);
  CHECK(rw.width() == Q(1, 16));
  CHECK(rw.height() == Q(1, 20736));
  CHECK_THROWS_AS(cylinder_rect(Word::parse("(2,2)"), paper), DomainError);
}

TEST_CASE("nesting and disjoint interiors") {
  for (const auto& cfg : {GridConfig::tiny(), GridConfig::paper()}) {
    const std::int64_t d = cfg.is_paper_instance() ? 2 : 4;
    auto words = enumerate_words(d, cfg);
    std::vector<Rect> rects;
    for (const auto& w : words) {
      rects.push_back(cylinder_rect(w, cfg));
      CHECK(cylinder_rect(w.prefix(w.size() - 1), cfg).contains(rects.back()));
      CHECK(rects.back().x0() >= 0);
      CHECK(rects.back().y1() <= 1);
    }
    for (std::size_t i = 0; i < rects.size(); ++i)
      for (std::size_t j = i + 1; j < rects.size(); ++j) CHECK_FALSE(rects[i].interiors_overlap(rects[j]));
  }
}

TEST_CASE("grid box count") {
  const auto paper = GridConfig::paper();
  CHECK(grid_box_count(1, paper) == 48);
  for (std::int64_t k = 1; k <= 6; ++k) CHECK(grid_box_count(k, GridConfig::tiny()) <= BigCount(1) << static_cast<unsigned>(4 * k));
  auto r = verify::grid_bracket(GridConfig::small(), 6, 10.0);
  CHECK_MESSAGE(r.passed, r.detail);
  CHECK_THROWS_AS(grid_box_count(6, paper, 1e3), InfeasibleError);
  CHECK_THROWS_AS(grid_box_count(0, paper), DomainError);
}

TEST_CASE("grid box count against literal cell marking") {
  // mark every cell met by every depth-l rectangle
  for (const auto& [cfg, kmax] : {std::pair{GridConfig::small(), 2}, {GridConfig::tiny(), 3}, {GridConfig::paper(), 1}}) {
    for (std::int64_t k = 1; k <= kmax; ++k) {
      const std::int64_t l = l_of_k(k, cfg);
      BigCount nk;
      mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(cfg.n()), static_cast<unsigned long>(k));
      std::set<std::pair<std::string, std::string>> cells;
      for (const auto& w : enumerate_words(l, cfg)) {
        auto rect = cylinder_rect(w, cfg);
        mpq_class x0 = rect.x0() * nk, x1 = rect.x1() * nk, y0 = rect.y0() * nk, y1 = rect.y1() * nk;
        BigCount c0 = x0.get_num() / x0.get_den(), r0 = y0.get_num() / y0.get_den();
        BigCount c1 = (x1.get_num() + x1.get_den() - 1) / x1.get_den() - 1;
        BigCount r1 = (y1.get_num() + y1.get_den() - 1) / y1.get_den() - 1;
        for (BigCount c = c0; c <= c1; ++c)
          for (BigCount row = r0; row <= r1; ++row) cells.insert({c.get_str(), row.get_str()});
      }
      CHECK(grid_box_count(k, cfg) == static_cast<unsigned long>(cells.size()));
    }
  }
}

TEST_CASE("raster layout") {
  const auto paper = GridConfig::paper();
  auto full = rasterize(0, 7, 5, paper);
  CHECK(full.count() == 35);

  // depth 1: column a=1 holds all twelve b rows, column a=2 only the bottom row
  auto one = rasterize(1, 2, 12, paper);
  CHECK(one.count() == 13);
  for (int py = 0; py < 12; ++py) CHECK(one.get(0, py));
  CHECK(one.get(1, 11));
  for (int py = 0; py < 11; ++py) CHECK_FALSE(one.get(1, py));

  CHECK(rasterize(3, 64, 48, paper) == rasterize(3, 64, 48, paper));
  CHECK_THROWS_AS(rasterize(9, 64, 64, paper, 1e6), InfeasibleError);
  CHECK_THROWS_AS(Raster(0, 4), DomainError);
}

TEST_CASE("pnm encoding") {
  Raster one(1, 1);
  one.set(0, 0);
  auto bytes = encode_pnm(one);
  CHECK(bytes == std::string("P4\n1 1\n\x80", 8));

  Raster r(10, 2);
  r.set(0, 0);
  r.set(9, 0);
  r.set(8, 1);
  auto b = encode_pnm(r);
  const std::string header = "P4\n10 2\n";
  REQUIRE(b.size() == header.size() + 4);
  CHECK(b.substr(0, header.size()) == header);
  CHECK(static_cast<unsigned char>(b[header.size()]) == 0x80);
  CHECK(static_cast<unsigned char>(b[header.size() + 1]) == 0x40);
  CHECK(static_cast<unsigned char>(b[header.size() + 2]) == 0x00);
  CHECK(static_cast<unsigned char>(b[header.size() + 3]) == 0x80);

  CHECK_THROWS_WITH(write_pnm(r, "/nonexistent-dir/x.pbm"), doctest::Contains("/nonexistent-dir/x.pbm"));
}

TEST_CASE("csv roundtrip") {
  BoxdimEngine engine(30, GridConfig::paper());
  std::vector<ScaleRecord> recs;
  for (std::int64_t k = 1; k <= 30; ++k) recs.push_back(engine.record(k));
  std::ostringstream os;
  export_csv(recs, os);
  CHECK(os.str().rfind("k,l,n_hat,ratio\n", 0) == 0);
  CHECK(os.str().find('\r') == std::string::npos);
  std::istringstream is(os.str());
  auto back = parse_scale_csv(is);
  REQUIRE(back.size() == recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(back[i].k == recs[i].k);
    CHECK(back[i].l == recs[i].l);
    CHECK(back[i].n_hat == recs[i].n_hat);
    CHECK(back[i].ratio == doctest::Approx(recs[i].ratio).epsilon(1e-9));
  }
  std::ostringstream again;
  export_csv(back, again);
  CHECK(again.str() == os.str());

  std::istringstream bad("k,l\n1,2\n");
  CHECK_THROWS_AS(parse_scale_csv(bad), DomainError);
}

TEST_CASE("hashing") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hex64(0xabcULL) == "0000000000000abc");
}
