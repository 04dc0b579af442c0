#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zonotile/classify.hpp"

using namespace zonotile;

namespace {

const FedorovType kFedorov[] = {FedorovType::Parallelotope, FedorovType::HexagonalPrism, FedorovType::RhombicDodecahedron,
                                FedorovType::ElongatedDodecahedron, FedorovType::TruncatedOctahedron};

Mat3 random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-2, 2);
  Mat3 m = Mat3::identity();
  for (int step = 0; step < 4; ++step) {
    const std::size_t i = rng() % 3, j = rng() % 3;
    if (i == j) continue;
    Mat3 e = Mat3::identity();
    e(i, j) = small(rng);
    m = e * m;
  }
  if (rng() % 2) {
    Mat3 s = Mat3::identity();
    s(0, 0) = -1;
    m = s * m;
  }
  return m;
}

Zonotope3 transformed(const Zonotope3& p, const Mat3& m) {
  std::vector<Vec3> ends;
  for (const auto& v : p.endpoints()) ends.push_back(m * v);
  return make_zonotope(ends, m * p.center());
}

}  // namespace

TEST_CASE("belt condition") {
  for (auto t : kFedorov) CHECK(venkov_mcmullen_check(fedorov(t)));
  CHECK_FALSE(venkov_mcmullen_check(example_9_1()));
}

TEST_CASE("parallelohedron subtypes") {
  for (auto t : kFedorov) CHECK(classify_parallelohedron(fedorov(t)) == t);
  CHECK_FALSE(classify_parallelohedron(example_9_1()).has_value());
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    const auto m = random_unimodular(rng);
    for (auto t : kFedorov) CHECK(classify_parallelohedron(transformed(fedorov(t), m)) == t);
  }
}

TEST_CASE("fivefold classification") {
  CHECK(classify_fivefold(fedorov(FedorovType::Parallelotope), 4).tag == FivefoldClassTag::Parallelotope);
  const auto oc = classify_fivefold(cylinder(octagon_I(Rational(1, 3)), 1), 8);
  CHECK(oc.tag == FivefoldClassTag::FivefoldOctagonalCylinder);
  REQUIRE(oc.evidence.lattice2.has_value());
  CHECK(oc.evidence.lattice2->determinant() == 2);
  CHECK(oc.evidence.oracle2->constant_value == std::size_t{5});
  CHECK(oc.evidence.oracle3->constant_value == std::size_t{5});
  CHECK(oc.evidence.violated.empty());

  const auto e = classify_fivefold(example_9_1(), 4);
  CHECK(e.tag == FivefoldClassTag::NotFivefold);
  CHECK(e.evidence.violated == "8-belt present, no prism axis");
  CHECK_FALSE(e.evidence.inconclusive);

  // alpha = 1/3 needs denominators up to 6
  const auto capped = classify_fivefold(cylinder(octagon_I(Rational(1, 3)), 1), 4);
  CHECK(capped.tag == FivefoldClassTag::NotFivefold);
  CHECK(capped.evidence.inconclusive);
  CHECK(capped.evidence.family.has_value());
}

TEST_CASE("rejections name the violated condition") {
  // six generic directions in one plane give a 12-belt around the normal axis
  const auto big = cylinder(zonogon_from_generators(std::vector<Vec2>{Vec2(1, 0), Vec2(0, 1), Vec2(1, 1), Vec2(1, -1),
                                                                      Vec2(2, 1), Vec2(1, 2)}),
                            1);
  const auto r = classify_fivefold(big, 4);
  CHECK(r.tag == FivefoldClassTag::NotFivefold);
  CHECK_FALSE(r.evidence.violated.empty());

  // a regular-looking lattice octagon prism: prism axis, but not a fivefold cross-section
  const Polygon2 oct({Vec2(1, 0), Vec2(2, 0), Vec2(3, 1), Vec2(3, 2), Vec2(2, 3), Vec2(1, 3), Vec2(0, 2), Vec2(0, 1)});
  const auto o = classify_fivefold(cylinder(oct, 1), 4);
  CHECK(o.tag == FivefoldClassTag::NotFivefold);
  CHECK(o.evidence.violated == "prism cross-section is not a fivefold planar tile");
  CHECK(o.evidence.prism_axis.has_value());
}

TEST_CASE("classification is invariant under unimodular maps") {
  std::mt19937_64 rng(8);
  const std::vector<Zonotope3> bodies = {fedorov(FedorovType::RhombicDodecahedron), cylinder(octagon_II(1), 1),
                                         cylinder(default_decagon(), Rational(1, 2)), example_9_1()};
  for (int k = 0; k < 3; ++k) {
    const auto m = random_unimodular(rng);
    for (const auto& p : bodies) {
      const auto a = classify_fivefold(p, 8);
      const auto b = classify_fivefold(transformed(p, m), 8);
      CHECK(a.tag == b.tag);
      CHECK(a.evidence.violated == b.evidence.violated);
    }
  }
}

TEST_CASE("large belts without a prism axis come in pairs") {
  std::mt19937_64 rng(19);
  int seen = 0;
  for (int t = 0; t < 400 && seen < 20; ++t) {
    const auto p = oracle::random_zonotope(rng, 4 + t % 3, -1, 1);
    const auto r = classify_fivefold(p, 2);
    if (r.tag != FivefoldClassTag::NotFivefold || r.evidence.violated.find("no prism axis") == std::string::npos) continue;
    ++seen;
    const auto& s = r.evidence.belt_sizes;
    CHECK(std::count_if(s.begin(), s.end(), [](std::size_t b) { return b >= 8; }) >= 2);
  }
  CHECK(seen > 0);
}
