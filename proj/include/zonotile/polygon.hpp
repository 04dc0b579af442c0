#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zonotile/linalg.hpp"

namespace zonotile {

// Convex polygon with exact rational vertices, stored counterclockwise
// starting from the lowest (then leftmost) vertex, no three consecutive
// vertices collinear.
class Polygon2 {
 public:
  // Accepts the vertices of a convex polygon in any order or orientation.
  // Points in the middle of an edge are dropped. Throws DegeneratePolygon
  // for zero area and NotConvex when a point is not in convex position.
  explicit Polygon2(std::vector<Vec2> points);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vec2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Vec2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  friend bool operator==(const Polygon2&, const Polygon2&) = default;

 private:
  std::vector<Vec2> vertices_;
};

enum class PointLocation { Interior, Boundary, Exterior };

Rational polygon_area(const Polygon2& p);
PointLocation point_location(const Polygon2& p, const Vec2& x);
std::optional<Vec2> symmetry_center(const Polygon2& p);

Polygon2 translated(const Polygon2& p, const Vec2& t);
// Translates p so that its symmetry center is the origin; throws NotCentrallySymmetric.
Polygon2 centered(const Polygon2& p);

std::vector<Vec2> edge_midpoints(const Polygon2& p);

// True when the cyclic sequence turns strictly the same way at every vertex
// and winds exactly once.
bool is_strictly_convex_cycle(std::span<const Vec2> pts);

// Zonogon sum_i [-g_i, g_i]; zero generators are ignored and parallel ones merged.
Polygon2 zonogon_from_generators(std::span<const Vec2> half_generators);

// Half edge vectors of the first size()/2 edges; throws NotCentrallySymmetric.
std::vector<Vec2> zonogon_generators(const Polygon2& p);

struct AffineMap2 {
  Mat2 linear = Mat2::identity();
  Vec2 translation{};

  static AffineMap2 identity() { return {}; }

  Vec2 operator()(const Vec2& x) const { return linear * x + translation; }
  Polygon2 operator()(const Polygon2& p) const;

  Rational determinant() const { return zonotile::determinant(linear); }
  bool invertible() const { return !determinant().is_zero(); }
  AffineMap2 inverse() const;
  // (a * b)(x) == a(b(x))
  friend AffineMap2 operator*(const AffineMap2& a, const AffineMap2& b);

  friend bool operator==(const AffineMap2&, const AffineMap2&) = default;
};

}  // namespace zonotile
