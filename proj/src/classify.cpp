#include "zonotile/classify.hpp"

#include <algorithm>

namespace zonotile {

bool venkov_mcmullen_check(const Zonotope3& p) {
  const auto sizes = belt_sizes(p);
  return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 4 || s == 6; });
}

std::optional<FedorovType> classify_parallelohedron(const Zonotope3& p) {
  if (!venkov_mcmullen_check(p)) return std::nullopt;
  const auto facets = enumerate_facets(p);
  const auto hexagons = std::count_if(facets.begin(), facets.end(), [](const Facet& f) { return f.edge_count() == 6; });
  switch (facets.size()) {
    case 6: return FedorovType::Parallelotope;
    case 8: return FedorovType::HexagonalPrism;
    case 12:
      if (hexagons == 0) return FedorovType::RhombicDodecahedron;
      if (hexagons == 4) return FedorovType::ElongatedDodecahedron;
      return std::nullopt;
    case 14: return FedorovType::TruncatedOctahedron;
    default: return std::nullopt;
  }
}

std::string to_string(FivefoldClassTag tag) {
  switch (tag) {
    case FivefoldClassTag::Parallelotope: return "parallelotope";
    case FivefoldClassTag::HexagonalPrism: return "hexagonal-prism";
    case FivefoldClassTag::RhombicDodecahedron: return "rhombic-dodecahedron";
    case FivefoldClassTag::ElongatedDodecahedron: return "elongated-dodecahedron";
    case FivefoldClassTag::TruncatedOctahedron: return "truncated-octahedron";
    case FivefoldClassTag::FivefoldOctagonalCylinder: return "fivefold-octagonal-cylinder";
    case FivefoldClassTag::FivefoldDecagonalCylinder: return "fivefold-decagonal-cylinder";
    case FivefoldClassTag::NotFivefold: return "not-fivefold";
  }
  return "unknown";
}

namespace {

FivefoldClassTag from_fedorov(FedorovType t) {
  switch (t) {
    case FedorovType::Parallelotope: return FivefoldClassTag::Parallelotope;
    case FedorovType::HexagonalPrism: return FivefoldClassTag::HexagonalPrism;
    case FedorovType::RhombicDodecahedron: return FivefoldClassTag::RhombicDodecahedron;
    case FedorovType::ElongatedDodecahedron: return FivefoldClassTag::ElongatedDodecahedron;
    case FedorovType::TruncatedOctahedron: return FivefoldClassTag::TruncatedOctahedron;
  }
  return FivefoldClassTag::NotFivefold;
}

FivefoldClass3D reject(FivefoldClass3D c, std::string reason, bool inconclusive = false) {
  c.tag = FivefoldClassTag::NotFivefold;
  c.evidence.violated = std::move(reason);
  c.evidence.inconclusive = inconclusive;
  return c;
}

}  // namespace

FivefoldClass3D classify_fivefold(const Zonotope3& p, long search_bound, const ClassifyOptions& opts) {
  p.require_full_dimensional();
  FivefoldClass3D out;
  out.evidence.belt_sizes = belt_sizes(p);
  const auto& sizes = out.evidence.belt_sizes;
  const std::size_t largest = *std::max_element(sizes.begin(), sizes.end());

  // Facet edge counts are only a necessary condition.
  if (!facet_edge_counts(p).fivefold_compatible) return reject(out, "facet with more than 10 edges");
  if (largest > 10) return reject(out, std::to_string(largest) + "-belt exceeds 10 facets");

  if (largest <= 6) {
    const auto t = classify_parallelohedron(p);
    if (!t) return reject(out, "belts of 4 or 6 facets but no parallelohedron signature");
    out.tag = from_fedorov(*t);
    return out;
  }

  for (auto a : prism_axes(p)) {
    if (sizes[a] == 8 || sizes[a] == 10) {
      out.evidence.prism_axis = a;
      break;
    }
  }
  if (!out.evidence.prism_axis) return reject(out, std::to_string(largest) + "-belt present, no prism axis");

  const std::size_t axis = *out.evidence.prism_axis;
  const Projection proj = project_along(p, axis);
  out.evidence.cross_section = proj.polygon;
  const auto fam = recognize_fivefold_2d(proj.polygon);
  if (!fam || (fam->tag != FivefoldTag::OctagonI && fam->tag != FivefoldTag::OctagonII &&
               fam->tag != FivefoldTag::Decagon)) {
    return reject(out, "prism cross-section is not a fivefold planar tile");
  }
  out.evidence.family = fam;

  // Search in the canonical frame, then carry the lattice along the witness.
  FindLatticeOptions flo;
  flo.oracle_samples = opts.oracle_samples;
  flo.oracle_seed = opts.seed;
  const auto canonical_lattice = find_lattice(fam->canonical(), 5, search_bound, flo);
  if (!canonical_lattice) {
    return reject(out, "no fivefold lattice found within search bound " + std::to_string(search_bound), true);
  }
  const Lattice2 lattice = canonical_lattice->transformed(fam->witness_map.linear);
  out.evidence.lattice2 = lattice;
  out.evidence.oracle2 = verify_kfold(proj.polygon, lattice, 5, opts.oracle_samples, opts.seed, opts.verify);
  if (!out.evidence.oracle2->success) return reject(out, "multiplicity oracle rejected the cross-section lattice");

  if (opts.verify_3d) {
    const Lattice3 lifted({proj.map.section(lattice.basis_vector(0)), proj.map.section(lattice.basis_vector(1)),
                           p.edge_vector(axis)});
    out.evidence.lattice3 = lifted;
    out.evidence.oracle3 = verify_kfold_3d(p, lifted, 5, opts.oracle_samples, opts.seed, opts.verify);
    if (!out.evidence.oracle3->success) return reject(out, "multiplicity oracle rejected the lifted lattice");
  }

  out.tag = fam->tag == FivefoldTag::Decagon ? FivefoldClassTag::FivefoldDecagonalCylinder
                                             : FivefoldClassTag::FivefoldOctagonalCylinder;
  return out;
}

}  // namespace zonotile
