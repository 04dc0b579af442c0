#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zonotile/tiling2d.hpp"
#include "zonotile/tiling3d.hpp"
#include "zonotile/zonotope.hpp"

namespace zonotile {

// Every belt has four or six facets.
bool venkov_mcmullen_check(const Zonotope3& p);

// Fedorov subtype by facet signature; nullopt unless venkov_mcmullen_check holds.
std::optional<FedorovType> classify_parallelohedron(const Zonotope3& p);

enum class FivefoldClassTag {
  Parallelotope,
  HexagonalPrism,
  RhombicDodecahedron,
  ElongatedDodecahedron,
  TruncatedOctahedron,
  FivefoldOctagonalCylinder,
  FivefoldDecagonalCylinder,
  NotFivefold,
};

std::string to_string(FivefoldClassTag tag);

struct FivefoldEvidence {
  std::vector<std::size_t> belt_sizes;  // by generator index
  std::optional<std::size_t> prism_axis;
  std::optional<Polygon2> cross_section;  // projection along the prism axis
  std::optional<FivefoldFamily2D> family;
  std::optional<Lattice2> lattice2;
  std::optional<MultiplicityReport2> oracle2;
  std::optional<Lattice3> lattice3;
  std::optional<MultiplicityReport3> oracle3;
  std::string violated;  // the failed necessary condition, NotFivefold only
  bool inconclusive = false;
};

struct FivefoldClass3D {
  FivefoldClassTag tag = FivefoldClassTag::NotFivefold;
  FivefoldEvidence evidence;
};

struct ClassifyOptions {
  std::size_t oracle_samples = 200;
  std::uint64_t seed = 1;
  bool verify_3d = true;
  VerifyOptions verify;
};

// search_bound caps the denominators tried by the lattice search.
FivefoldClass3D classify_fivefold(const Zonotope3& p, long search_bound, const ClassifyOptions& opts = {});

}  // namespace zonotile
