#pragma once

#include <cstdint>
#include <string>

#include "zonotile/lattice.hpp"
#include "zonotile/multiplicity.hpp"
#include "zonotile/polygon.hpp"
#include "zonotile/zonotope.hpp"

namespace zonotile {

// Throws NonGenericSample.
std::size_t multiplicity_at_3d(const Zonotope3& p, const Lattice3& lattice, const Vec3& x);

MultiplicityReport3 verify_kfold_3d(const Zonotope3& p, const Lattice3& lattice, std::size_t k, std::size_t samples,
                                    std::uint64_t seed, const VerifyOptions& opts = {});

struct LevLiuResult {
  bool holds = false;
  Vec3 translation;  // P + translation has all vertices in the lattice
};

// Some translate of P has all its vertices in the lattice.
LevLiuResult lev_liu_check(const Zonotope3& p, const Lattice3& lattice);

enum class FedorovType { Parallelotope, HexagonalPrism, RhombicDodecahedron, ElongatedDodecahedron, TruncatedOctahedron };

std::string to_string(FedorovType t);

Zonotope3 fedorov(FedorovType t);

// Right prism over a centrally symmetric convex polygon, axis (0, 0, h).
// Throws NotCentrallySymmetric / NonPositiveHeight.
Zonotope3 cylinder(const Polygon2& base, const Rational& height);

// Five generators (0,0,1/2), (0,1/2,0), (1/2,0,0), (1/2,1/2,1/2), (1/2,1,1/2);
// ten-fold lattice tile for Z^3 of volume 10.
Zonotope3 example_9_1();

}  // namespace zonotile
