#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace toricss::lattice {

using Point = std::vector<std::int64_t>;

inline constexpr std::size_t kDefaultPointCap = std::size_t{1} << 22;

// A finite set of points in Z^rank, deduplicated and kept in lexicographic order.
class PointSet {
 public:
  explicit PointSet(std::size_t rank = 1) : rank_(rank) {}
  PointSet(std::size_t rank, std::vector<Point> points);
  PointSet(std::size_t rank, std::initializer_list<Point> points)
      : PointSet(rank, std::vector<Point>(points)) {}

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const Point& p) const;

  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t rank_;
  std::vector<Point> points_;
};

// The exponent box H = {0, ..., q-2}^rank.
PointSet hypercube(std::uint64_t q, std::size_t rank, std::size_t cap = kDefaultPointCap);

PointSet translate(const PointSet& u, const Point& v);
PointSet negate(const PointSet& u);

// Coordinates reduced into {0, ..., q-2}; colliding points merge.
PointSet reduce_mod(const PointSet& u, std::uint64_t q);

PointSet minkowski_sum(const PointSet& u, const PointSet& w, std::size_t cap = kDefaultPointCap);

// Set difference u \ w.
PointSet difference(const PointSet& u, const PointSet& w);

// -H \ -U reduced back into H. Requires U inside H.
PointSet dual_support(const PointSet& u, std::uint64_t q);

bool inside_hypercube(const PointSet& u, std::uint64_t q);

struct Hirzebruch {
  std::int64_t d = 1;
  std::int64_t e = 1;
  std::int64_t twist = 1;
};

struct Trapezoid {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t q = 3;
};

struct Hypercube {
  std::int64_t q = 3;
  std::size_t rank = 2;
};

struct Explicit {
  std::vector<Point> vertices;
};

using PolytopeFamily = std::variant<Hirzebruch, Trapezoid, Hypercube, Explicit>;

std::string family_name(const PolytopeFamily& f);

// The vertex list describing a rank-2 family member.
std::vector<Point> family_vertices(const PolytopeFamily& f);

PointSet family_points(const PolytopeFamily& f, std::size_t cap = kDefaultPointCap);

// Integer points of the closed convex polygon spanned by the given vertices.
// Vertices may be listed in any order; repeated and collinear ones are merged.
// Degenerate inputs (a point or a segment) are accepted.
PointSet polygon_lattice_points(std::span<const Point> vertices, std::size_t cap = kDefaultPointCap);

}  // namespace toricss::lattice
