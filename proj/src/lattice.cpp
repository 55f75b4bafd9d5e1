#include "toricss/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "toricss/error.hpp"

namespace toricss::lattice {

namespace {

void check_rank(const Point& p, std::size_t rank) {
  if (p.size() != rank)
    throw Error(ErrorCode::RankMismatch,
                "point of length " + std::to_string(p.size()) + " in rank " + std::to_string(rank) + " set");
}

std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

PointSet::PointSet(std::size_t rank, std::vector<Point> points) : rank_(rank), points_(std::move(points)) {
  if (rank_ == 0) throw Error(ErrorCode::RankMismatch, "rank must be at least 1");
  for (const auto& p : points_) check_rank(p, rank_);
  std::ranges::sort(points_);
  auto tail = std::ranges::unique(points_);
  points_.erase(tail.begin(), tail.end());
}

bool PointSet::contains(const Point& p) const { return std::ranges::binary_search(points_, p); }

PointSet hypercube(std::uint64_t q, std::size_t rank, std::size_t cap) {
  if (q < 3) throw Error(ErrorCode::InvalidFamilyParams, "hypercube needs q >= 3");
  if (rank == 0) throw Error(ErrorCode::RankMismatch, "rank must be at least 1");
  const std::int64_t side = static_cast<std::int64_t>(q) - 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    if (total > cap / static_cast<std::size_t>(side))
      throw Error(ErrorCode::SizeOverflow, "(q-1)^rank exceeds the point cap");
    total *= static_cast<std::size_t>(side);
  }
  std::vector<Point> pts;
  pts.reserve(total);
  Point cur(rank, 0);
  for (std::size_t n = 0; n < total; ++n) {
    pts.push_back(cur);
    for (std::size_t i = rank; i-- > 0;) {
      if (++cur[i] < side) break;
      cur[i] = 0;
    }
  }
  return PointSet(rank, std::move(pts));
}

PointSet translate(const PointSet& u, const Point& v) {
  check_rank(v, u.rank());
  std::vector<Point> pts;
  pts.reserve(u.size());
  for (const auto& p : u) {
    Point s = p;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += v[i];
    pts.push_back(std::move(s));
  }
  return PointSet(u.rank(), std::move(pts));
}

PointSet negate(const PointSet& u) {
  std::vector<Point> pts;
  pts.reserve(u.size());
  for (const auto& p : u) {
    Point s = p;
    for (auto& x : s) x = -x;
    pts.push_back(std::move(s));
  }
  return PointSet(u.rank(), std::move(pts));
}

PointSet reduce_mod(const PointSet& u, std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::InvalidField, "q must be at least 2");
  const auto m = static_cast<std::int64_t>(q) - 1;
  std::vector<Point> pts;
  pts.reserve(u.size());
  for (const auto& p : u) {
    Point s = p;
    for (auto& x : s) x = mod_floor(x, m);
    pts.push_back(std::move(s));
  }
  return PointSet(u.rank(), std::move(pts));
}

PointSet minkowski_sum(const PointSet& u, const PointSet& w, std::size_t cap) {
  if (u.rank() != w.rank()) throw Error(ErrorCode::RankMismatch, "Minkowski sum of different ranks");
  if (!u.empty() && w.size() > cap / u.size()) throw Error(ErrorCode::SizeOverflow, "Minkowski sum too large");
  std::vector<Point> pts;
  pts.reserve(u.size() * w.size());
  for (const auto& a : u)
    for (const auto& b : w) {
      Point s = a;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
      pts.push_back(std::move(s));
    }
  return PointSet(u.rank(), std::move(pts));
}

PointSet difference(const PointSet& u, const PointSet& w) {
  if (u.rank() != w.rank()) throw Error(ErrorCode::RankMismatch, "difference of different ranks");
  std::vector<Point> pts;
  std::ranges::set_difference(u.points(), w.points(), std::back_inserter(pts));
  return PointSet(u.rank(), std::move(pts));
}

bool inside_hypercube(const PointSet& u, std::uint64_t q) {
  const auto top = static_cast<std::int64_t>(q) - 2;
  return std::ranges::all_of(u, [&](const Point& p) {
    return std::ranges::all_of(p, [&](std::int64_t x) { return x >= 0 && x <= top; });
  });
}

PointSet dual_support(const PointSet& u, std::uint64_t q) {
  if (!inside_hypercube(u, q)) throw Error(ErrorCode::NotInsideH, "exponent set is not contained in H");
  const PointSet h = hypercube(q, u.rank());
  return reduce_mod(difference(negate(h), negate(u)), q);
}

std::string family_name(const PolytopeFamily& f) {
  struct {
    std::string operator()(const Hirzebruch&) const { return "hirzebruch"; }
    std::string operator()(const Trapezoid&) const { return "trapezoid"; }
    std::string operator()(const Hypercube&) const { return "hypercube"; }
    std::string operator()(const Explicit&) const { return "explicit"; }
  } visitor;
  return std::visit(visitor, f);
}

std::vector<Point> family_vertices(const PolytopeFamily& f) {
  if (const auto* h = std::get_if<Hirzebruch>(&f)) {
    if (h->d < 1 || h->e < 1 || h->twist < 1)
      throw Error(ErrorCode::InvalidFamilyParams, "Hirzebruch parameters d, e, twist must be positive");
    return {{0, 0}, {h->d, 0}, {h->d, h->e + h->twist * h->d}, {0, h->e}};
  }
  if (const auto* t = std::get_if<Trapezoid>(&f)) {
    if (t->q < 3 || t->b < 0 || t->b > t->a || t->a > t->q - 2)
      throw Error(ErrorCode::InvalidFamilyParams, "trapezoid needs 0 <= b <= a <= q-2");
    return {{0, 0}, {t->a, 0}, {t->b, t->q - 2}, {0, t->q - 2}};
  }
  if (const auto* c = std::get_if<Hypercube>(&f)) {
    if (c->rank != 2) throw Error(ErrorCode::RankMismatch, "vertex list only defined for rank 2");
    if (c->q < 3) throw Error(ErrorCode::InvalidFamilyParams, "hypercube needs q >= 3");
    const auto s = c->q - 2;
    return {{0, 0}, {s, 0}, {s, s}, {0, s}};
  }
  return std::get<Explicit>(f).vertices;
}

PointSet family_points(const PolytopeFamily& f, std::size_t cap) {
  if (const auto* c = std::get_if<Hypercube>(&f)) {
    if (c->q < 3) throw Error(ErrorCode::InvalidFamilyParams, "hypercube needs q >= 3");
    return hypercube(static_cast<std::uint64_t>(c->q), c->rank, cap);
  }
  const auto vertices = family_vertices(f);
  return polygon_lattice_points(vertices, cap);
}

PointSet polygon_lattice_points(std::span<const Point> vertices, std::size_t cap) {
  if (vertices.empty()) throw Error(ErrorCode::NonConvex, "empty vertex list");
  for (const auto& v : vertices) check_rank(v, 2);
  std::vector<Point> vs(vertices.begin(), vertices.end());
  std::ranges::sort(vs);
  auto tail = std::ranges::unique(vs);
  vs.erase(tail.begin(), tail.end());

  if (vs.size() == 1) return PointSet(2, vs);

  const bool collinear = std::ranges::all_of(vs, [&](const Point& p) { return cross(vs[0], vs[1], p) == 0; });
  if (collinear) {
    // Sorted lexicographically, so the extremes of a segment are first and last.
    const Point& lo = vs.front();
    const Point& hi = vs.back();
    const std::int64_t dx = hi[0] - lo[0], dy = hi[1] - lo[1];
    const std::int64_t g = std::gcd(dx, dy);
    if (static_cast<std::uint64_t>(g) + 1 > cap) throw Error(ErrorCode::SizeOverflow, "segment has too many points");
    std::vector<Point> pts;
    for (std::int64_t i = 0; i <= g; ++i) pts.push_back({lo[0] + i * (dx / g), lo[1] + i * (dy / g)});
    return PointSet(2, std::move(pts));
  }

  // Order counterclockwise around the centroid; coordinates are scaled by the
  // vertex count so the centroid is a lattice point.
  const auto n = static_cast<std::int64_t>(vs.size());
  std::int64_t sx = 0, sy = 0;
  for (const auto& v : vs) {
    sx += v[0];
    sy += v[1];
  }
  auto rel = [&](const Point& v) { return Point{n * v[0] - sx, n * v[1] - sy}; };
  auto half = [](const Point& r) { return (r[1] > 0 || (r[1] == 0 && r[0] > 0)) ? 0 : 1; };
  for (const auto& v : vs) {
    const Point r = rel(v);
    if (r[0] == 0 && r[1] == 0) throw Error(ErrorCode::NonConvex, "vertex coincides with the centroid");
  }
  std::ranges::sort(vs, [&](const Point& a, const Point& b) {
    const Point ra = rel(a), rb = rel(b);
    if (half(ra) != half(rb)) return half(ra) < half(rb);
    return ra[0] * rb[1] - ra[1] * rb[0] > 0;
  });
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point ra = rel(vs[i]), rb = rel(vs[(i + 1) % vs.size()]);
    if (half(ra) == half(rb) && ra[0] * rb[1] - ra[1] * rb[0] == 0)
      throw Error(ErrorCode::NonConvex, "two vertices on the same ray from the centroid");
  }

  std::vector<Point> hull;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point& prev = vs[(i + vs.size() - 1) % vs.size()];
    const Point& next = vs[(i + 1) % vs.size()];
    const std::int64_t turn = cross(prev, vs[i], next);
    if (turn < 0) throw Error(ErrorCode::NonConvex, "vertex list does not describe a convex polygon");
    if (turn > 0) hull.push_back(vs[i]);
  }

  std::int64_t x0 = hull[0][0], x1 = x0, y0 = hull[0][1], y1 = y0;
  for (const auto& v : hull) {
    x0 = std::min(x0, v[0]);
    x1 = std::max(x1, v[0]);
    y0 = std::min(y0, v[1]);
    y1 = std::max(y1, v[1]);
  }
  if (static_cast<std::uint64_t>(x1 - x0 + 1) * static_cast<std::uint64_t>(y1 - y0 + 1) > cap)
    throw Error(ErrorCode::SizeOverflow, "polygon bounding box exceeds the point cap");

  std::vector<Point> pts;
  for (std::int64_t x = x0; x <= x1; ++x)
    for (std::int64_t y = y0; y <= y1; ++y) {
      const Point p{x, y};
      bool inside = true;
      for (std::size_t i = 0; i < hull.size() && inside; ++i)
        inside = cross(hull[i], hull[(i + 1) % hull.size()], p) >= 0;
      if (inside) pts.push_back(p);
    }
  return PointSet(2, std::move(pts));
}

}  // namespace toricss::lattice
