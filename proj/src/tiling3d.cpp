#include "zonotile/tiling3d.hpp"

#include "zonotile/error.hpp"

namespace zonotile {

std::size_t multiplicity_at_3d(const Zonotope3& p, const Lattice3& lattice, const Vec3& x) {
  return CoveringCounter<3>(halfspace_body(p), lattice).count_at(x);
}

MultiplicityReport3 verify_kfold_3d(const Zonotope3& p, const Lattice3& lattice, std::size_t k, std::size_t samples,
                                    std::uint64_t seed, const VerifyOptions& opts) {
  p.require_full_dimensional();
  return verify_kfold_body(halfspace_body(p), lattice, k, samples, seed, opts);
}

LevLiuResult lev_liu_check(const Zonotope3& p, const Lattice3& lattice) {
  p.require_full_dimensional();
  const auto vs = vertices(p);
  LevLiuResult out;
  out.translation = -vs.front();
  out.holds = true;
  for (const auto& v : vs) {
    if (!lattice.contains(v - vs.front())) {
      out.holds = false;
      break;
    }
  }
  return out;
}

std::string to_string(FedorovType t) {
  switch (t) {
    case FedorovType::Parallelotope: return "parallelotope";
    case FedorovType::HexagonalPrism: return "hexagonal-prism";
    case FedorovType::RhombicDodecahedron: return "rhombic-dodecahedron";
    case FedorovType::ElongatedDodecahedron: return "elongated-dodecahedron";
    case FedorovType::TruncatedOctahedron: return "truncated-octahedron";
  }
  return "unknown";
}

Zonotope3 fedorov(FedorovType t) {
  std::vector<Vec3> w;
  switch (t) {
    case FedorovType::Parallelotope:
      w = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
      break;
    case FedorovType::HexagonalPrism:
      w = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 1, 0), Vec3(0, 0, 1)};
      break;
    case FedorovType::RhombicDodecahedron:
      w = {Vec3(1, 1, 1), Vec3(1, -1, 1), Vec3(-1, 1, 1), Vec3(-1, -1, 1)};
      break;
    case FedorovType::ElongatedDodecahedron:
      w = {Vec3(1, 1, 1), Vec3(1, -1, 1), Vec3(-1, 1, 1), Vec3(-1, -1, 1), Vec3(0, 0, 1)};
      break;
    case FedorovType::TruncatedOctahedron:
      w = {Vec3(1, 1, 0), Vec3(1, -1, 0), Vec3(1, 0, 1), Vec3(1, 0, -1), Vec3(0, 1, 1), Vec3(0, 1, -1)};
      break;
  }
  for (auto& v : w) v /= 2;
  return make_zonotope(w);
}

Zonotope3 cylinder(const Polygon2& base, const Rational& height) {
  if (height.sign() <= 0) throw Error(ErrorCode::NonPositiveHeight, "cylinder height must be positive");
  const auto c = symmetry_center(base);
  if (!c) throw Error(ErrorCode::NotCentrallySymmetric, "cylinder base is not centrally symmetric");
  std::vector<Vec3> gens;
  for (const auto& g : zonogon_generators(base)) gens.push_back(Vec3(g.x(), g.y(), 0));
  gens.push_back(Vec3(0, 0, height / 2));
  return make_zonotope(gens, Vec3(c->x(), c->y(), 0));
}

Zonotope3 example_9_1() {
  const Rational h(1, 2);
  return make_zonotope({Vec3(0, 0, h), Vec3(0, h, 0), Vec3(h, 0, 0), Vec3(h, h, h), Vec3(h, 1, h)});
}

}  // namespace zonotile
