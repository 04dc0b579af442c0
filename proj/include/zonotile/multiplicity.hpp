#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zonotile/lattice.hpp"
#include "zonotile/linalg.hpp"
#include "zonotile/polygon.hpp"
#include "zonotile/zonotope.hpp"

namespace zonotile {

// Convex body as {x : normals[i] . x <= offsets[i]} together with its vertices.
template <std::size_t N>
struct HalfspaceBody {
  std::vector<Vec<N>> normals;
  std::vector<Rational> offsets;
  std::vector<Vec<N>> vertices;
  Rational volume;
};

HalfspaceBody<2> halfspace_body(const Polygon2& p);
HalfspaceBody<3> halfspace_body(const Zonotope3& p);

// Counts lattice translates of a body whose interior contains a point.
// Everything is expressed in lattice coordinates with primitive integer
// normals, so the inner loop is integer-only.
template <std::size_t N>
class CoveringCounter {
 public:
  CoveringCounter(const HalfspaceBody<N>& body, const Lattice<N>& lattice);

  // nullopt when the point lies on the boundary of some translate.
  std::optional<std::size_t> count_at_coordinates(const Vec<N>& t) const;
  // Throws NonGenericSample.
  std::size_t count_at(const Vec<N>& x) const;

  const Lattice<N>& lattice() const { return lattice_; }

 private:
  Lattice<N> lattice_;
  std::vector<std::array<std::int64_t, N>> normals_;
  std::vector<Rational> offsets_;
  std::array<Rational, N> coord_min_;
  std::array<Rational, N> coord_max_;
};

struct MultiplicityReport {
  std::size_t samples = 0;
  std::vector<std::size_t> multiplicities;  // in sample order
  std::optional<std::size_t> constant_value;
  Rational volume_ratio;  // volume / det
  std::size_t expected_k = 0;
  std::size_t rejected = 0;  // non-generic draws that were redrawn
  bool success = false;
};

using MultiplicityReport2 = MultiplicityReport;
using MultiplicityReport3 = MultiplicityReport;

struct VerifyOptions {
  std::size_t threads = 1;
};

// Samples n generic points uniformly (on a fine rational grid) from the
// basis parallelepiped. Sample i depends only on (seed, i), so the report
// does not depend on the thread count.
template <std::size_t N>
MultiplicityReport verify_kfold_body(const HalfspaceBody<N>& body, const Lattice<N>& lattice, std::size_t k,
                                     std::size_t n, std::uint64_t seed, const VerifyOptions& opts = {});

// Lattice coordinates of sample i; denominators are the fixed prime grid size.
template <std::size_t N>
Vec<N> sample_coordinates(std::uint64_t seed, std::size_t index, std::size_t attempt);

extern template class CoveringCounter<2>;
extern template class CoveringCounter<3>;

}  // namespace zonotile
