#include "zonotile/polygon.hpp"

#include <algorithm>

#include "zonotile/error.hpp"

namespace zonotile {

Polygon2::Polygon2(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) throw Error(ErrorCode::DegeneratePolygon, "polygon needs three distinct vertices");

  Vec2 centroid;
  for (const auto& p : points) centroid += p;
  centroid /= Rational(static_cast<long>(points.size()));

  std::vector<Vec2> diffs;
  diffs.reserve(points.size());
  for (const auto& p : points) diffs.push_back(p - centroid);
  if (rank<2>(diffs) < 2) throw Error(ErrorCode::DegeneratePolygon, "polygon has zero area");

  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return angle_less(diffs[a], diffs[b]); });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& a = diffs[order[i]];
    const auto& b = diffs[order[(i + 1) % order.size()]];
    if (cross(a, b).is_zero() && upper_half(a) == upper_half(b)) {
      throw Error(ErrorCode::NotConvex, "points are not in convex position");
    }
  }

  std::vector<Vec2> ring;
  ring.reserve(order.size());
  for (auto i : order) ring.push_back(points[i]);

  // Drop edge-interior points, reject reflex turns.
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto& prev = ring[(i + ring.size() - 1) % ring.size()];
      const auto& next = ring[(i + 1) % ring.size()];
      const int o = orient2d(prev, ring[i], next);
      if (o < 0) throw Error(ErrorCode::NotConvex, "polygon is not convex");
      if (o == 0) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (ring.size() < 3) throw Error(ErrorCode::DegeneratePolygon, "polygon has zero area");

  auto lowest = std::min_element(ring.begin(), ring.end(), [](const Vec2& a, const Vec2& b) {
    return a.y() != b.y() ? a.y() < b.y() : a.x() < b.x();
  });
  std::rotate(ring.begin(), lowest, ring.end());
  vertices_ = std::move(ring);
}

Rational polygon_area(const Polygon2& p) {
  Rational twice;
  for (std::size_t i = 0; i < p.size(); ++i) twice += cross(p.vertex(i), p.vertex(i + 1));
  return twice / 2;
}

PointLocation point_location(const Polygon2& p, const Vec2& x) {
  bool on_edge = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int o = orient2d(p.vertex(i), p.vertex(i + 1), x);
    if (o < 0) return PointLocation::Exterior;
    if (o == 0) on_edge = true;
  }
  return on_edge ? PointLocation::Boundary : PointLocation::Interior;
}

std::optional<Vec2> symmetry_center(const Polygon2& p) {
  const std::size_t n = p.size();
  if (n % 2 != 0) return std::nullopt;
  const Vec2 twice_center = p.vertex(0) + p.vertex(n / 2);
  for (std::size_t i = 1; i < n / 2; ++i) {
    if (p.vertex(i) + p.vertex(i + n / 2) != twice_center) return std::nullopt;
  }
  return twice_center / 2;
}

Polygon2 translated(const Polygon2& p, const Vec2& t) {
  std::vector<Vec2> vs = p.vertices();
  for (auto& v : vs) v += t;
  return Polygon2(std::move(vs));
}

Polygon2 centered(const Polygon2& p) {
  const auto c = symmetry_center(p);
  if (!c) throw Error(ErrorCode::NotCentrallySymmetric, "polygon is not centrally symmetric");
  return translated(p, -*c);
}

std::vector<Vec2> edge_midpoints(const Polygon2& p) {
  std::vector<Vec2> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back((p.vertex(i) + p.vertex(i + 1)) / 2);
  return out;
}

bool is_strictly_convex_cycle(std::span<const Vec2> pts) {
  const std::size_t n = pts.size();
  if (n < 3) return false;
  int turn = 0;
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = pts[(i + 1) % n] - pts[i];
    const Vec2 e1 = pts[(i + 2) % n] - pts[(i + 1) % n];
    const int s = cross(e0, e1).sign();
    if (s == 0) return false;
    if (turn == 0) turn = s;
    if (s != turn) return false;
  }
  // Count how often the edge direction passes the reference angle; a simple
  // convex cycle does so exactly once.
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 e0 = pts[(i + 1) % n] - pts[i];
    Vec2 e1 = pts[(i + 2) % n] - pts[(i + 1) % n];
    if (turn < 0) {
      e0[1] = -e0[1];
      e1[1] = -e1[1];
    }
    if (!angle_less(e0, e1)) ++wraps;
  }
  return wraps == 1;
}

Polygon2 zonogon_from_generators(std::span<const Vec2> half_generators) {
  std::vector<Vec2> dirs;
  for (Vec2 g : half_generators) {
    if (g.is_zero()) continue;
    if (!upper_half(g)) g = -g;
    bool merged = false;
    for (auto& d : dirs) {
      if (cross(d, g).is_zero()) {
        d += g;
        merged = true;
        break;
      }
    }
    if (!merged) dirs.push_back(g);
  }
  if (dirs.size() < 2) throw Error(ErrorCode::DegeneratePolygon, "zonogon needs two independent generators");
  std::sort(dirs.begin(), dirs.end(), angle_less);
  Vec2 p;
  for (const auto& d : dirs) p -= d;
  std::vector<Vec2> vs;
  vs.reserve(2 * dirs.size());
  for (const auto& d : dirs) {
    vs.push_back(p);
    p += d * 2;
  }
  for (const auto& d : dirs) {
    vs.push_back(p);
    p -= d * 2;
  }
  return Polygon2(std::move(vs));
}

std::vector<Vec2> zonogon_generators(const Polygon2& p) {
  if (!symmetry_center(p)) throw Error(ErrorCode::NotCentrallySymmetric, "polygon is not centrally symmetric");
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < p.size() / 2; ++i) out.push_back(p.edge(i) / 2);
  return out;
}

Polygon2 AffineMap2::operator()(const Polygon2& p) const {
  if (!invertible()) throw Error(ErrorCode::DegeneratePolygon, "affine map is singular");
  std::vector<Vec2> vs;
  vs.reserve(p.size());
  for (const auto& v : p.vertices()) vs.push_back((*this)(v));
  return Polygon2(std::move(vs));
}

AffineMap2 AffineMap2::inverse() const {
  AffineMap2 inv;
  inv.linear = zonotile::inverse(linear);
  inv.translation = -(inv.linear * translation);
  return inv;
}

AffineMap2 operator*(const AffineMap2& a, const AffineMap2& b) {
  AffineMap2 out;
  out.linear = a.linear * b.linear;
  out.translation = a.linear * b.translation + a.translation;
  return out;
}

}  // namespace zonotile
