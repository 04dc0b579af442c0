#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zonotile/lattice.hpp"
#include "zonotile/multiplicity.hpp"
#include "zonotile/polygon.hpp"

namespace zonotile {

// Fivefold octagon, first family: 0 < alpha < 2/3. Area 10.
Polygon2 octagon_I(const Rational& alpha);
// Fivefold octagon, second family: 0 < beta <= 1. Area 20.
Polygon2 octagon_II(const Rational& beta);

// Edge midpoints u_1..u_5 of the fivefold decagon; u_{i+5} = -u_i.
std::vector<Vec2> decagon_midpoints();
// Decagon with the canonical midpoints and base vertex p1; throws NonConvexResult.
Polygon2 decagon(const Vec2& p1);
// First p1 = (i/q, j/q) in (q ascending, i ascending, j ascending) order,
// |i|, |j| <= 2q, giving a convex decagon.
std::optional<Vec2> scan_decagon_base_vertex(long max_denominator);
// The decagon built from the first scanned base vertex.
Polygon2 default_decagon();

// Rebuilds a centrally symmetric 2n-gon from its first n edge midpoints and
// first vertex: p_{i+1} = 2 m_i - p_i, p_{n+i} = -p_i. Throws ClosureViolated
// when the chain does not close antipodally and NonConvexResult when the
// vertex cycle is not strictly convex.
Polygon2 reconstruct_from_midpoints(const std::vector<Vec2>& midpoints, const Vec2& p1);

struct BolleEdge {
  bool has_half_lattice_point = false;    // relint(edge) meets (1/2) L
  bool midpoint_in_half_lattice = false;
  bool edge_is_lattice_vector = false;

  bool passes() const { return has_half_lattice_point && (midpoint_in_half_lattice || edge_is_lattice_vector); }
};

struct BolleReport {
  bool symmetric = false;
  std::vector<BolleEdge> edges;  // in the polygon's vertex order
  bool satisfied = false;
  Rational implied_k;  // area / det
};

BolleReport bolle_check(const Polygon2& p, const Lattice2& lattice);

// Throws NonGenericSample.
std::size_t multiplicity_at(const Polygon2& p, const Lattice2& lattice, const Vec2& x);

MultiplicityReport2 verify_kfold(const Polygon2& p, const Lattice2& lattice, std::size_t k, std::size_t samples,
                                 std::uint64_t seed, const VerifyOptions& opts = {});

struct FindLatticeOptions {
  std::size_t oracle_samples = 200;
  std::uint64_t oracle_seed = 1;
};

// Deterministic search for a lattice L with det = area / k that passes the
// Bolle conditions and the sampled multiplicity oracle. Candidates, in order:
// the span of doubled edge midpoints, spans of subsets of edge vectors, then
// every Hermite-normal-form basis with entries in (1/q)Z, q = 1..max_denominator.
std::optional<Lattice2> find_lattice(const Polygon2& p, std::size_t k, long max_denominator,
                                     const FindLatticeOptions& opts = {});

enum class FivefoldTag { Parallelogram, Hexagon, OctagonI, OctagonII, Decagon };

std::string to_string(FivefoldTag tag);

struct FivefoldFamily2D {
  FivefoldTag tag = FivefoldTag::Parallelogram;
  Rational parameter;       // alpha or beta for the octagon families, 0 otherwise
  Vec2 base_vertex;         // decagon only: p1 of the canonical decagon
  AffineMap2 witness_map;   // witness_map(canonical()) == input

  // Canonical representative: the unit square, the hexagon with vertices
  // +-(1,0), +-(0,1), +-(-1,1), octagon_I(alpha), octagon_II(beta), or
  // decagon(base_vertex).
  Polygon2 canonical() const;
};

// Parallelogram and hexagon witnesses map the first two canonical vertices
// onto the input; the remaining tags satisfy witness_map(canonical()) == input.
std::optional<FivefoldFamily2D> recognize_fivefold_2d(const Polygon2& p);

}  // namespace zonotile
