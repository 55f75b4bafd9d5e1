#include "toricss/lattice.hpp"

#include "doctest.h"
#include "oracle.hpp"
#include "toricss/error.hpp"
#include "toricss/rng.hpp"

using toricss::Error;
using toricss::ErrorCode;
using namespace toricss::lattice;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::MalformedInput;
}

PointSet random_subset(const PointSet& from, toricss::CounterRng& rng, std::size_t max_size) {
  std::vector<Point> pts;
  const std::size_t want = 1 + rng.below(max_size);
  for (std::size_t i = 0; i < want; ++i) pts.push_back(from.points()[rng.below(from.size())]);
  return PointSet(from.rank(), pts);
}

PointSet random_points(std::size_t rank, std::int64_t lo, std::int64_t hi, std::size_t count, toricss::CounterRng& rng) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < count; ++i) {
    Point p;
    for (std::size_t j = 0; j < rank; ++j) p.push_back(lo + static_cast<std::int64_t>(rng.below(hi - lo + 1)));
    pts.push_back(p);
  }
  return PointSet(rank, pts);
}

}  // namespace

TEST_CASE("point sets are sorted and deduplicated") {
  const PointSet u(2, {{1, 0}, {0, 1}, {1, 0}, {0, 0}});
  CHECK(u.size() == 3);
  CHECK(u.points() == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(u.contains({0, 1}));
  CHECK_FALSE(u.contains({1, 1}));
  CHECK(code_of([] { PointSet bad(2, {{1, 2, 3}}); }) == ErrorCode::RankMismatch);
}

TEST_CASE("hypercube") {
  CHECK(hypercube(3, 2) == PointSet(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(hypercube(5, 2).size() == 16);
  CHECK(hypercube(5, 1) == PointSet(1, {{0}, {1}, {2}, {3}}));
  CHECK(hypercube(4, 3).size() == 27);
  CHECK(code_of([] { (void)hypercube(17, 6, 1000); }) == ErrorCode::SizeOverflow);
}

TEST_CASE("translate and negate") {
  const PointSet u(2, {{0, 0}, {1, 2}});
  CHECK(translate(u, {3, 3}) == PointSet(2, {{3, 3}, {4, 5}}));
  CHECK(negate(PointSet(2, {{1, 0}})) == PointSet(2, {{-1, 0}}));
  CHECK(translate(u, {0, 0}) == u);
  CHECK(code_of([&] { (void)translate(u, {1, 2, 3}); }) == ErrorCode::RankMismatch);

  toricss::CounterRng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto w = random_points(3, -10, 10, 1 + rng.below(8), rng);
    const Point v{static_cast<std::int64_t>(rng.below(9)) - 4, 2, -7};
    CHECK(negate(negate(w)) == w);
    CHECK(translate(translate(w, v), {-v[0], -v[1], -v[2]}) == w);
    CHECK(translate(w, v).size() == w.size());
  }
}

TEST_CASE("reduction modulo q-1") {
  CHECK(reduce_mod(PointSet(2, {{4, 0}}), 5) == PointSet(2, {{0, 0}}));
  CHECK(reduce_mod(PointSet(2, {{0, 0}, {4, 4}}), 5) == PointSet(2, {{0, 0}}));
  CHECK(reduce_mod(PointSet(2, {{-1, -5}}), 5) == PointSet(2, {{3, 3}}));
  const auto h = hypercube(5, 2);
  CHECK(reduce_mod(h, 5) == h);
  toricss::CounterRng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto w = random_points(2, -20, 20, 1 + rng.below(10), rng);
    const auto once = reduce_mod(w, 7);
    CHECK(reduce_mod(once, 7) == once);
    CHECK(inside_hypercube(once, 7));
  }
}

TEST_CASE("Minkowski sums") {
  const PointSet u(2, {{0, 0}, {1, 0}});
  CHECK(minkowski_sum(u, u) == PointSet(2, {{0, 0}, {1, 0}, {2, 0}}));
  CHECK(minkowski_sum(u, PointSet(2, {{0, 0}})) == u);
  CHECK(code_of([&] { (void)minkowski_sum(u, PointSet(1, {{0}})); }) == ErrorCode::RankMismatch);

  toricss::CounterRng rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_points(2, 0, 6, 1 + rng.below(6), rng);
    const auto b = random_points(2, 0, 6, 1 + rng.below(6), rng);
    CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    CHECK(minkowski_sum(a, b).size() <= a.size() * b.size());
  }

  // U + U for the (1,1) trapezoid at q = 5, reduced: the 3 x 4 box.
  const auto trap = family_points(Trapezoid{1, 1, 5});
  const auto sum = reduce_mod(minkowski_sum(trap, trap), 5);
  CHECK(sum.size() == 12);
  CHECK(sum == polygon_lattice_points(std::vector<Point>{{0, 0}, {2, 0}, {2, 3}, {0, 3}}));
}

TEST_CASE("dual support") {
  CHECK(dual_support(hypercube(5, 2), 5).empty());
  CHECK(dual_support(PointSet(2, {{0, 0}}), 3).size() == 3);
  CHECK(dual_support(PointSet(2, {{0, 0}}), 3) == PointSet(2, {{0, 1}, {1, 0}, {1, 1}}));
  CHECK(code_of([] { (void)dual_support(PointSet(2, {{4, 0}}), 5); }) == ErrorCode::NotInsideH);

  // The (1,1) trapezoid at q = 5 is [0,1] x [0,3]. Its dual support
  // -H \ -U, shifted by (q-2, q-2) = (3, 3), is the box [0,1] x [0,3]: the
  // trapezoid (0,0),(q-2-b,0),(q-2-a,q-2),(0,q-2) with its slanted edge
  // removed, which here is the column x = 2.
  const auto trap = family_points(Trapezoid{1, 1, 5});
  const PointSet literal = difference(negate(hypercube(5, 2)), negate(trap));
  const auto shifted = translate(literal, {3, 3});
  CHECK(shifted.size() == 8);
  CHECK(shifted == polygon_lattice_points(std::vector<Point>{{0, 0}, {1, 0}, {1, 3}, {0, 3}}));
  const auto closed = polygon_lattice_points(std::vector<Point>{{0, 0}, {2, 0}, {2, 3}, {0, 3}});
  CHECK(shifted == difference(closed, PointSet(2, {{2, 0}, {2, 1}, {2, 2}, {2, 3}})));
  CHECK(dual_support(trap, 5) == reduce_mod(literal, 5));
  CHECK(dual_support(trap, 5) == PointSet(2, {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 2}, {2, 3}}));

  for (std::int64_t q : {4, 5, 7}) {
    for (std::int64_t a = 0; a <= q - 2; ++a)
      for (std::int64_t b = 0; b <= a; ++b) {
        const auto t = family_points(Trapezoid{a, b, q});
        const auto lit = translate(difference(negate(hypercube(q, 2)), negate(t)), {q - 2, q - 2});
        const auto closed_t =
            polygon_lattice_points(std::vector<Point>{{0, 0}, {q - 2 - b, 0}, {q - 2 - a, q - 2}, {0, q - 2}});
        std::vector<Point> on_edge;
        for (const auto& p : closed_t) {
          // Points on the line through (q-2-b, 0) and (q-2-a, q-2).
          const Point s{q - 2 - b, 0}, e{q - 2 - a, q - 2};
          if ((e[0] - s[0]) * (p[1] - s[1]) - (e[1] - s[1]) * (p[0] - s[0]) == 0) on_edge.push_back(p);
        }
        CHECK(lit == difference(closed_t, PointSet(2, on_edge)));
      }
  }

  toricss::CounterRng rng(6);
  for (std::uint64_t q : {3u, 4u, 5u, 7u}) {
    const auto h = hypercube(q, 2);
    for (int i = 0; i < 30; ++i) {
      const auto u = random_subset(h, rng, h.size());
      const auto dual = dual_support(u, q);
      CHECK(dual.size() + u.size() == h.size());
      CHECK(inside_hypercube(dual, q));
    }
  }
}

TEST_CASE("polygon lattice points") {
  CHECK(polygon_lattice_points(std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}).size() == 4);
  CHECK(polygon_lattice_points(std::vector<Point>{{0, 0}, {2, 0}, {0, 2}}).size() == 6);
  // Listed in a self-crossing order: sorted into counterclockwise order first.
  CHECK(polygon_lattice_points(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}).size() == 4);
  CHECK(code_of([] { (void)polygon_lattice_points(std::vector<Point>{{0, 0}, {4, 2}, {0, 4}, {1, 2}}); }) ==
        ErrorCode::NonConvex);
  // Collinear and repeated vertices merge.
  CHECK(polygon_lattice_points(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 0}}).size() == 9);
  // Degenerate inputs.
  CHECK(polygon_lattice_points(std::vector<Point>{{3, 4}}) == PointSet(2, {{3, 4}}));
  CHECK(polygon_lattice_points(std::vector<Point>{{0, 0}, {4, 2}}) == PointSet(2, {{0, 0}, {2, 1}, {4, 2}}));

  const std::vector<std::vector<oracle::IPoint>> shapes{
      {{0, 0}, {5, 0}, {3, 4}},
      {{0, 0}, {7, 1}, {6, 5}, {1, 3}},
      {{-2, -1}, {3, -2}, {4, 2}, {0, 4}, {-3, 2}},
      {{0, 0}, {3, 0}, {1, 5}, {0, 5}},
  };
  for (const auto& s : shapes) {
    const std::vector<Point> v(s.begin(), s.end());
    CHECK(polygon_lattice_points(v).size() == oracle::polygon_count(s));
    std::vector<Point> reversed(v.rbegin(), v.rend());
    CHECK(polygon_lattice_points(reversed) == polygon_lattice_points(v));
  }
}

TEST_CASE("family points") {
  CHECK(family_points(Hirzebruch{1, 1, 1}) == PointSet(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  CHECK(family_points(Trapezoid{1, 1, 5}) == polygon_lattice_points(std::vector<Point>{{0, 0}, {1, 0}, {1, 3}, {0, 3}}));
  CHECK(family_points(Trapezoid{1, 1, 5}).size() == 8);
  CHECK(code_of([] { (void)family_points(Trapezoid{2, 5, 9}); }) == ErrorCode::InvalidFamilyParams);
  CHECK(code_of([] { (void)family_points(Hirzebruch{0, 1, 1}); }) == ErrorCode::InvalidFamilyParams);
  CHECK(code_of([] { (void)family_points(Hirzebruch{1, 1, 0}); }) == ErrorCode::InvalidFamilyParams);
  CHECK(family_points(Hypercube{4, 3}) == hypercube(4, 3));
  CHECK(family_points(Explicit{{{0, 0}, {2, 0}, {0, 2}}}).size() == 6);

  // b = 0 gives a triangle, b = a a rectangle.
  CHECK(family_points(Trapezoid{3, 0, 5}).size() == oracle::polygon_count({{0, 0}, {3, 0}, {0, 3}}));
  CHECK(family_points(Trapezoid{2, 2, 6}).size() == 15);

  for (std::int64_t d = 1; d <= 5; ++d)
    for (std::int64_t e = 1; e <= 5; ++e)
      for (std::int64_t t = 1; t <= 5; ++t) {
        const auto pts = family_points(Hirzebruch{d, e, t});
        CHECK(static_cast<std::int64_t>(pts.size()) == (d + 1) * (e + 1) + t * d * (d + 1) / 2);
        CHECK(pts.size() == oracle::polygon_count({{0, 0}, {d, 0}, {d, e + t * d}, {0, e}}));
        for (const auto& p : pts) CHECK(p[1] <= e + t * p[0]);
      }
  for (std::int64_t q = 3; q <= 9; ++q)
    for (std::int64_t a = 0; a <= q - 2; ++a)
      for (std::int64_t b = 0; b <= a; ++b) {
        std::size_t direct = 0;
        for (std::int64_t y = 0; y <= q - 2; ++y)
          for (std::int64_t x = 0; x <= a; ++x) direct += (q - 2) * x <= (q - 2) * a - (a - b) * y;
        CHECK(family_points(Trapezoid{a, b, q}).size() == direct);
      }
  CHECK(family_name(Hirzebruch{}) == "hirzebruch");
  CHECK(family_name(Trapezoid{}) == "trapezoid");
}
