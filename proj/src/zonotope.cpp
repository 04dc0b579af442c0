#include "zonotile/zonotope.hpp"

#include <algorithm>

#include "zonotile/error.hpp"

namespace zonotile {

namespace {

std::vector<Vec3> merge_parallel(std::span<const Vec3> endpoints) {
  std::vector<Vec3> out;
  for (const auto& v : endpoints) {
    bool merged = false;
    for (auto& u : out) {
      if (cross(u, v).is_zero()) {
        u += dot(u, v).sign() > 0 ? v : -v;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(v);
  }
  return out;
}

// Vertices of center + sum [-u_k, u_k] for coplanar u_k spanning the plane
// with the given normal, counterclockwise around the normal.
std::vector<Vec3> planar_zonogon(const Vec3& center, std::span<const Vec3> gens, const Vec3& normal) {
  std::size_t a = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (normal[i].abs() > normal[a].abs()) a = i;
  }
  const std::size_t i1 = (a + 1) % 3;
  const std::size_t i2 = (a + 2) % 3;
  auto flat = [&](const Vec3& u) { return Vec2(u[i1], u[i2]); };

  struct Dir {
    Vec3 full;
    Vec2 flat;
  };
  std::vector<Dir> dirs;
  for (Vec3 u : gens) {
    if (u.is_zero()) continue;
    if (!upper_half(flat(u))) u = -u;
    bool merged = false;
    for (auto& d : dirs) {
      if (cross(d.flat, flat(u)).is_zero()) {
        d.full += u;
        d.flat = flat(d.full);
        merged = true;
        break;
      }
    }
    if (!merged) dirs.push_back({u, flat(u)});
  }
  std::sort(dirs.begin(), dirs.end(), [](const Dir& x, const Dir& y) { return angle_less(x.flat, y.flat); });

  Vec3 p = center;
  for (const auto& d : dirs) p -= d.full;
  std::vector<Vec3> out;
  out.reserve(2 * dirs.size());
  for (const auto& d : dirs) {
    out.push_back(p);
    p += d.full * 2;
  }
  for (const auto& d : dirs) {
    out.push_back(p);
    p -= d.full * 2;
  }
  if (normal[a].sign() < 0) std::reverse(out.begin(), out.end());
  return out;
}

Facet make_facet(const Zonotope3& p, const GeneratorClass& cls, int side) {
  Facet f;
  f.generator_class = cls.members;
  f.side = side;
  f.normal = side > 0 ? cls.normal : -cls.normal;
  f.support = dot(f.normal, p.center());
  std::vector<Vec3> in_plane;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Rational s = dot(f.normal, p.endpoints()[j]);
    f.support += s.abs();
    if (s.is_zero()) {
      in_plane.push_back(p.endpoints()[j]);
    } else {
      f.offset += s.sign() > 0 ? p.endpoints()[j] : -p.endpoints()[j];
    }
  }
  f.vertices = planar_zonogon(p.center() + f.offset, in_plane, f.normal);
  return f;
}

}  // namespace

GeneratorSet GeneratorSet::from_endpoints(std::span<const Vec3> endpoints) {
  if (endpoints.empty()) throw Error(ErrorCode::EmptyGenerators, "zonotope needs at least one generator");
  for (const auto& v : endpoints) {
    if (v.is_zero()) throw Error(ErrorCode::ZeroSegment, "zero generator segment");
  }
  GeneratorSet g;
  g.endpoints_ = merge_parallel(endpoints);
  return g;
}

GeneratorSet GeneratorSet::strict(std::span<const Vec3> endpoints) {
  GeneratorSet g = from_endpoints(endpoints);
  if (g.size() != endpoints.size()) {
    throw Error(ErrorCode::InvariantViolation, "generator segments are not pairwise linearly independent");
  }
  return g;
}

int GeneratorSet::rank() const { return zonotile::rank<3>(endpoints_); }

void Zonotope3::require_full_dimensional() const {
  if (!is_full_dimensional()) throw Error(ErrorCode::NotFullDimensional, "zonotope is not full-dimensional");
}

Zonotope3 make_zonotope(std::span<const Vec3> endpoints, const Vec3& center) {
  return Zonotope3(GeneratorSet::from_endpoints(endpoints), center);
}

Zonotope3 make_zonotope(std::initializer_list<Vec3> endpoints, const Vec3& center) {
  return make_zonotope(std::span<const Vec3>(endpoints.begin(), endpoints.size()), center);
}

std::vector<GeneratorClass> generator_classes(const Zonotope3& p) {
  p.require_full_dimensional();
  const std::size_t n = p.size();
  std::vector<GeneratorClass> classes;
  std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered[i][j]) continue;
      GeneratorClass cls;
      cls.normal = cross(p.endpoints()[i], p.endpoints()[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (dot(cls.normal, p.endpoints()[k]).is_zero()) cls.members.push_back(k);
      }
      for (auto a : cls.members)
        for (auto b : cls.members) covered[a][b] = true;
      classes.push_back(std::move(cls));
    }
  }
  return classes;
}

std::vector<Facet> enumerate_facets(const Zonotope3& p) {
  std::vector<Facet> out;
  for (const auto& cls : generator_classes(p)) {
    out.push_back(make_facet(p, cls, +1));
    out.push_back(make_facet(p, cls, -1));
  }
  return out;
}

std::vector<std::size_t> Belt::ring(std::size_t i) const {
  std::vector<std::size_t> out;
  for (auto j : facets.at(i).generator_class) {
    if (j != direction) out.push_back(j);
  }
  return out;
}

Belt belt(const Zonotope3& p, std::size_t d) {
  if (d >= p.size()) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
  const auto classes = generator_classes(p);
  const QuotientMap q = quotient_along(p.edge_vector(d));

  Belt b;
  b.direction = d;
  b.orientation.assign(p.size(), 1);

  struct Entry {
    const GeneratorClass* cls;
    Vec2 dir;
  };
  std::vector<Entry> entries;
  for (const auto& cls : classes) {
    if (!std::binary_search(cls.members.begin(), cls.members.end(), d)) continue;
    Vec2 ref;
    for (auto j : cls.members) {
      if (j == d) continue;
      const Vec2 img = q(p.edge_vector(j));
      if (ref.is_zero()) {
        b.orientation[j] = upper_half(img) ? 1 : -1;
        ref = img * b.orientation[j];
      } else {
        b.orientation[j] = dot(ref, img).sign() > 0 ? 1 : -1;
      }
    }
    entries.push_back({&cls, ref});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return angle_less(x.dir, y.dir); });

  b.first_edge_center = p.center();
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j != d) b.first_edge_center -= p.endpoints()[j] * b.orientation[j];
  }

  const std::size_t m = entries.size();
  std::vector<Facet> first_half;
  std::vector<Facet> second_half;
  Vec3 edge_center = b.first_edge_center;
  for (const auto& e : entries) {
    Vec3 t;
    for (auto j : e.cls->members) {
      if (j != d) t += p.edge_vector(j) * b.orientation[j];
    }
    Facet plus = make_facet(p, *e.cls, +1);
    Facet minus = make_facet(p, *e.cls, -1);
    if (dot(plus.normal, edge_center) == plus.support) {
      first_half.push_back(std::move(plus));
      second_half.push_back(std::move(minus));
    } else {
      first_half.push_back(std::move(minus));
      second_half.push_back(std::move(plus));
    }
    b.translations.push_back(t);
    edge_center += t;
  }
  for (std::size_t i = 0; i < m; ++i) b.translations.push_back(-b.translations[i]);
  b.facets = std::move(first_half);
  for (auto& f : second_half) b.facets.push_back(std::move(f));
  return b;
}

std::vector<std::size_t> belt_sizes(const Zonotope3& p) {
  const auto classes = generator_classes(p);
  std::vector<std::size_t> sizes(p.size(), 0);
  for (const auto& cls : classes)
    for (auto j : cls.members) sizes[j] += 2;
  return sizes;
}

Rational volume(const Zonotope3& p) {
  p.require_full_dimensional();
  const std::size_t n = p.size();
  Rational v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        v += det3(p.edge_vector(i), p.edge_vector(j), p.edge_vector(k)).abs();
  return v;
}

std::vector<std::size_t> prism_axes(const Zonotope3& p) {
  std::vector<std::size_t> axes;
  if (!p.is_full_dimensional()) return axes;
  for (std::size_t a = 0; a < p.size(); ++a) {
    std::vector<Vec3> rest;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j != a) rest.push_back(p.endpoints()[j]);
    }
    if (rank<3>(rest) <= 2) axes.push_back(a);
  }
  return axes;
}

std::optional<std::size_t> is_prism(const Zonotope3& p) {
  const auto axes = prism_axes(p);
  if (axes.empty()) return std::nullopt;
  return axes.front();
}

Vec3 QuotientMap::section(const Vec2& y) const {
  Vec3 x;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != dropped_axis) x[i] = y[k++];
  }
  return x;
}

QuotientMap quotient_along(const Vec3& direction) {
  if (direction.is_zero()) throw Error(ErrorCode::ZeroSegment, "quotient along zero vector");
  QuotientMap q;
  for (std::size_t i = 1; i < 3; ++i) {
    if (direction[i].abs() > direction[q.dropped_axis].abs()) q.dropped_axis = i;
  }
  const std::size_t a = q.dropped_axis;
  std::size_t row = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k == a) continue;
    q.matrix(row, k) = 1;
    q.matrix(row, a) = -direction[k] / direction[a];
    ++row;
  }
  return q;
}

Projection project_along(const Zonotope3& p, std::size_t d) {
  p.require_full_dimensional();
  if (d >= p.size()) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
  const QuotientMap q = quotient_along(p.edge_vector(d));
  std::vector<Vec2> images;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j != d) images.push_back(q(p.endpoints()[j]));
  }
  return {zonogon_from_generators(images), q};
}

std::vector<Vec3> zonotope_vertices(const Vec3& center, std::span<const Vec3> endpoints) {
  std::vector<Vec3> gens;
  for (const auto& v : endpoints) {
    if (!v.is_zero()) gens.push_back(v);
  }
  gens = merge_parallel(gens);
  std::vector<Vec3> out;
  const int r = rank<3>(gens);
  if (r == 0) {
    out.push_back(center);
  } else if (r == 1) {
    out.push_back(center + gens[0]);
    out.push_back(center - gens[0]);
  } else if (r == 2) {
    Vec3 n;
    for (std::size_t j = 1; j < gens.size() && n.is_zero(); ++j) n = cross(gens[0], gens[j]);
    out = planar_zonogon(center, gens, n);
  } else {
    const Zonotope3 z(GeneratorSet::from_endpoints(gens), center);
    for (const auto& f : enumerate_facets(z)) out.insert(out.end(), f.vertices.begin(), f.vertices.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vec3> vertices(const Zonotope3& p) { return zonotope_vertices(p.center(), p.endpoints()); }

bool Polytope3::contains(const Vec3& x) const {
  return std::all_of(halfspaces.begin(), halfspaces.end(), [&](const Halfspace3& h) { return h.contains(x); });
}

int affine_dimension(std::span<const Vec3> pts) {
  if (pts.empty()) return -1;
  std::vector<Vec3> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return rank<3>(diffs);
}

Polytope3 intersect_translate(const Zonotope3& p, const Vec3& g) {
  Polytope3 out;
  for (const auto& f : enumerate_facets(p)) {
    out.halfspaces.push_back({f.normal, min(f.support, f.support + dot(f.normal, g))});
  }
  const auto& hs = out.halfspaces;
  const std::size_t n = hs.size();
  std::vector<Vec3> verts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec3 dir = cross(hs[i].normal, hs[j].normal);
      if (dir.is_zero()) continue;
      Mat3 m;
      m.rows = {hs[i].normal, hs[j].normal, dir};
      const Vec3 x0 = inverse(m) * Vec3(hs[i].offset, hs[j].offset, Rational(0));
      std::optional<Rational> lo;
      std::optional<Rational> hi;
      bool feasible = true;
      for (std::size_t k = 0; k < n && feasible; ++k) {
        if (k == i || k == j) continue;
        const Rational slope = dot(hs[k].normal, dir);
        const Rational slack = hs[k].offset - dot(hs[k].normal, x0);
        if (slope.is_zero()) {
          feasible = slack.sign() >= 0;
        } else if (slope.sign() > 0) {
          const Rational t = slack / slope;
          if (!hi || t < *hi) hi = t;
        } else {
          const Rational t = slack / slope;
          if (!lo || t > *lo) lo = t;
        }
        if (lo && hi && *lo > *hi) feasible = false;
      }
      if (!feasible || !lo || !hi) continue;
      verts.push_back(x0 + dir * *lo);
      verts.push_back(x0 + dir * *hi);
    }
  }
  if (verts.empty()) throw Error(ErrorCode::EmptyIntersection, "P and P+g do not intersect");
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  out.dimension = affine_dimension(verts);
  out.vertices = std::move(verts);
  return out;
}

FacetEdgeCounts facet_edge_counts(const Zonotope3& p) {
  FacetEdgeCounts out;
  for (auto& f : enumerate_facets(p)) {
    const std::size_t e = f.edge_count();
    if (e < 4 || e > 10) out.fivefold_compatible = false;
    out.facets.emplace_back(std::move(f), e);
  }
  return out;
}

}  // namespace zonotile
