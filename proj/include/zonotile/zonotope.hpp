#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zonotile/linalg.hpp"
#include "zonotile/polygon.hpp"

namespace zonotile {

// Pairwise linearly independent, nonzero segment half-vectors. Segment i is
// [-v_i, +v_i] and its full edge vector is w_i = 2 v_i.
class GeneratorSet {
 public:
  // Merges parallel inputs by summing (aligned) vectors; throws EmptyGenerators / ZeroSegment.
  static GeneratorSet from_endpoints(std::span<const Vec3> endpoints);
  // Rejects parallel inputs instead of merging them (InvariantViolation).
  static GeneratorSet strict(std::span<const Vec3> endpoints);

  const std::vector<Vec3>& endpoints() const { return endpoints_; }
  std::size_t size() const { return endpoints_.size(); }
  const Vec3& endpoint(std::size_t i) const { return endpoints_.at(i); }
  Vec3 edge_vector(std::size_t i) const { return endpoints_.at(i) * 2; }
  int rank() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<Vec3> endpoints_;
};

// P = center + sum_i [-v_i, v_i].
class Zonotope3 {
 public:
  Zonotope3(GeneratorSet generators, Vec3 center = {})
      : generators_(std::move(generators)), center_(std::move(center)) {}

  const GeneratorSet& generators() const { return generators_; }
  const std::vector<Vec3>& endpoints() const { return generators_.endpoints(); }
  std::size_t size() const { return generators_.size(); }
  const Vec3& endpoint(std::size_t i) const { return generators_.endpoint(i); }
  Vec3 edge_vector(std::size_t i) const { return generators_.edge_vector(i); }
  const Vec3& center() const { return center_; }

  bool is_full_dimensional() const { return generators_.rank() == 3; }
  // Throws NotFullDimensional.
  void require_full_dimensional() const;

  friend bool operator==(const Zonotope3&, const Zonotope3&) = default;

 private:
  GeneratorSet generators_;
  Vec3 center_;
};

Zonotope3 make_zonotope(std::span<const Vec3> endpoints, const Vec3& center = {});
Zonotope3 make_zonotope(std::initializer_list<Vec3> endpoints, const Vec3& center = {});

struct Halfspace3 {
  Vec3 normal;
  Rational offset;  // normal . x <= offset

  bool contains(const Vec3& x) const { return dot(normal, x) <= offset; }
};

// One of the two antipodal facets spanned by a maximal coplanar generator class.
struct Facet {
  std::vector<std::size_t> generator_class;  // sorted indices, size >= 2
  int side = 1;                              // +1 along the class normal, -1 against
  Vec3 normal;                               // outward, unnormalized
  Rational support;                          // normal . x <= support on P
  Vec3 offset;                               // facet center minus P center
  std::vector<Vec3> vertices;                // absolute, counterclockwise seen from outside

  std::size_t edge_count() const { return 2 * generator_class.size(); }
  Halfspace3 halfspace() const { return {normal, support}; }
};

struct GeneratorClass {
  std::vector<std::size_t> members;
  Vec3 normal;
};

// Maximal coplanar classes in discovery order (pair scan i < j).
std::vector<GeneratorClass> generator_classes(const Zonotope3& p);

std::vector<Facet> enumerate_facets(const Zonotope3& p);

// Facet cycle around an edge direction. facets[i] contains the translates
// E_i and E_{i+1} of the edge and translations[i] = E_{i+1} - E_i; the second
// half of the cycle is the antipodal image of the first.
struct Belt {
  std::size_t direction = 0;
  std::vector<Facet> facets;
  std::vector<Vec3> translations;
  // orientation[j] = +/-1 aligns w_j with the cyclic traversal; +1 for the direction itself.
  std::vector<int> orientation;
  Vec3 first_edge_center;

  std::size_t size() const { return facets.size(); }
  std::size_t half() const { return facets.size() / 2; }
  // Generator indices of facet i other than the belt direction.
  std::vector<std::size_t> ring(std::size_t i) const;
};

Belt belt(const Zonotope3& p, std::size_t d);
std::vector<std::size_t> belt_sizes(const Zonotope3& p);

Rational volume(const Zonotope3& p);
std::optional<std::size_t> is_prism(const Zonotope3& p);
// All indices a for which the remaining generators are coplanar.
std::vector<std::size_t> prism_axes(const Zonotope3& p);

// Linear quotient map with kernel span(w_d): x -> x - (x_a / w_d[a]) w_d,
// followed by dropping coordinate a, where a maximizes |w_d[a]| (ties: smallest).
struct QuotientMap {
  std::size_t dropped_axis = 0;
  Mat<2, 3> matrix;

  Vec2 operator()(const Vec3& x) const { return matrix * x; }
  // Right inverse: inserts a zero at the dropped coordinate.
  Vec3 section(const Vec2& y) const;
};

QuotientMap quotient_along(const Vec3& direction);

struct Projection {
  Polygon2 polygon;
  QuotientMap map;
};

Projection project_along(const Zonotope3& p, std::size_t d);

// Vertices of center + sum [-v_i, v_i] for any rank (zero vectors ignored), sorted.
std::vector<Vec3> zonotope_vertices(const Vec3& center, std::span<const Vec3> endpoints);
std::vector<Vec3> vertices(const Zonotope3& p);

struct Polytope3 {
  std::vector<Halfspace3> halfspaces;
  std::vector<Vec3> vertices;  // sorted, unique
  int dimension = 3;           // affine dimension of the vertex set

  bool flat() const { return dimension < 3; }
  bool contains(const Vec3& x) const;
};

// Exact H-representation of P cap (P + g) with enumerated vertices.
// Throws EmptyIntersection.
Polytope3 intersect_translate(const Zonotope3& p, const Vec3& g);

struct FacetEdgeCounts {
  std::vector<std::pair<Facet, std::size_t>> facets;
  bool fivefold_compatible = true;  // every facet has between 4 and 10 edges
};

FacetEdgeCounts facet_edge_counts(const Zonotope3& p);

int affine_dimension(std::span<const Vec3> pts);

}  // namespace zonotile
