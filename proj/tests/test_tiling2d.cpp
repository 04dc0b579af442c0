#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zonotile/error.hpp"
#include "zonotile/tiling2d.hpp"

using namespace zonotile;

namespace {

Polygon2 square() {
  return Polygon2({Vec2(Rational(-1, 2), Rational(-1, 2)), Vec2(Rational(1, 2), Rational(-1, 2)),
                   Vec2(Rational(1, 2), Rational(1, 2)), Vec2(Rational(-1, 2), Rational(1, 2))});
}

Polygon2 hexagon() {
  return Polygon2({Vec2(1, 0), Vec2(0, 1), Vec2(-1, 1), Vec2(-1, 0), Vec2(0, -1), Vec2(1, -1)});
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvariantViolation;
}

Lattice2 z2() { return Lattice2::integer(); }

AffineMap2 random_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-3, 3);
  for (;;) {
    AffineMap2 a;
    a.linear.rows = {Vec2(small(rng), oracle::random_rational(rng, -2, 2, 3)), Vec2(small(rng), small(rng))};
    a.translation = Vec2(oracle::random_rational(rng, -2, 2, 4), small(rng));
    if (a.invertible()) return a;
  }
}

}  // namespace

TEST_CASE("octagon family I") {
  const auto p = octagon_I(Rational(1, 2));
  const std::set<Vec2> v(p.vertices().begin(), p.vertices().end());
  CHECK(v.count(Vec2(Rational(7, 8), -2)) == 1);
  CHECK(v.count(Vec2(Rational(-11, 8), 0)) == 1);
  CHECK(v.count(Vec2(Rational(-11, 8), 1)) == 1);
  CHECK(p.size() == 8);
  CHECK(symmetry_center(p) == Vec2(0, 0));
  CHECK(code_of([] { octagon_I(Rational(2, 3)); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { octagon_I(Rational(0)); }) == ErrorCode::ParameterOutOfRange);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const Rational a = oracle::random_rational(rng, 0, 1, 30) * Rational(2, 3);
    if (a.is_zero() || a == Rational(2, 3)) continue;
    const auto q = octagon_I(a);
    CHECK(polygon_area(q) == 10);
    CHECK(oracle::shoelace(oracle::octagon_one_vertices(a)) == 10);
    const auto ref = oracle::octagon_one_vertices(a);
    CHECK(std::set<Vec2>(q.vertices().begin(), q.vertices().end()) == std::set<Vec2>(ref.begin(), ref.end()));
  }
}

TEST_CASE("octagon family II") {
  const auto p = octagon_II(1);
  const std::set<Vec2> v(p.vertices().begin(), p.vertices().end());
  const std::set<Vec2> expect = {Vec2(1, -3), Vec2(-1, -3), Vec2(-2, -1), Vec2(-2, 1),
                                 Vec2(-1, 3), Vec2(1, 3),   Vec2(2, 1),   Vec2(2, -1)};
  CHECK(v == expect);
  CHECK(polygon_area(p) == 20);
  const auto h = octagon_II(Rational(1, 2));
  CHECK(std::count(h.vertices().begin(), h.vertices().end(), Vec2(Rational(3, 2), -3)) == 1);
  CHECK(code_of([] { octagon_II(0); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { octagon_II(Rational(11, 10)); }) == ErrorCode::ParameterOutOfRange);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const Rational b = oracle::random_rational(rng, 0, 1, 30);
    if (b.is_zero()) continue;
    CHECK(polygon_area(octagon_II(b)) == 20);
  }
}

TEST_CASE("midpoint reconstruction") {
  const auto u = decagon_midpoints();
  Vec2 alt;
  for (std::size_t i = 0; i < u.size(); ++i) alt += (i % 2 == 0) ? u[i] : -u[i];
  CHECK(alt.is_zero());
  const std::vector<Vec2> sq = {Vec2(Rational(1, 2), 0), Vec2(0, Rational(1, 2))};
  CHECK(reconstruct_from_midpoints({Vec2(0, Rational(-1, 2)), Vec2(Rational(1, 2), 0)},
                                   Vec2(Rational(-1, 2), Rational(-1, 2))) == square());
  CHECK(code_of([&] { reconstruct_from_midpoints(sq, Vec2(Rational(1, 3), 0)); }) == ErrorCode::ClosureViolated);
  CHECK(code_of([&] { decagon(Vec2(0, 0)); }) == ErrorCode::NonConvexResult);
  CHECK(code_of([&] { decagon(Vec2(5, 5)); }) == ErrorCode::NonConvexResult);
}

TEST_CASE("decagon scan matches the hand-derived family") {
  const auto p1 = scan_decagon_base_vertex(8);
  const auto ref = oracle::scan_decagon(8);
  REQUIRE(p1.has_value());
  REQUIRE(ref.has_value());
  CHECK(*p1 == *ref);
  const auto d = decagon(*p1);
  CHECK(d == default_decagon());
  CHECK(d.size() == 10);
  const auto hand = oracle::hand_decagon(*p1);
  CHECK(std::set<Vec2>(d.vertices().begin(), d.vertices().end()) == std::set<Vec2>(hand.begin(), hand.end()));
  CHECK(polygon_area(d) == 5);
  // midpoints recovered from the reconstruction are the inputs
  const auto mids = edge_midpoints(d);
  std::set<Vec2> ms(mids.begin(), mids.end());
  for (const auto& u : decagon_midpoints()) {
    CHECK(ms.count(u) == 1);
    CHECK(ms.count(-u) == 1);
  }
}

TEST_CASE("every convex decagon of the family has area 5") {
  for (long q = 1; q <= 6; ++q)
    for (long i = -2 * q; i <= 2 * q; ++i)
      for (long j = -2 * q; j <= 2 * q; ++j) {
        const Vec2 p(Rational(i, q), Rational(j, q));
        std::optional<Rational> area;
        std::optional<ErrorCode> code;
        try {
          area = polygon_area(decagon(p));
        } catch (const Error& e) {
          code = e.code();
        }
        if (area) CHECK(*area == 5);
        else CHECK(code == ErrorCode::NonConvexResult);
      }
}

TEST_CASE("Bolle conditions") {
  const auto sq = bolle_check(square(), z2());
  CHECK(sq.satisfied);
  CHECK(sq.implied_k == 1);
  const auto hx = bolle_check(hexagon(), z2());
  CHECK(hx.satisfied);
  CHECK(hx.implied_k == 3);
  const auto bad = bolle_check(square(), Lattice2({Vec2(3, 0), Vec2(0, 3)}));
  CHECK_FALSE(bad.satisfied);
  CHECK_FALSE(bad.edges[0].has_half_lattice_point);
  const auto tri = bolle_check(Polygon2({Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)}), z2());
  CHECK_FALSE(tri.symmetric);
  CHECK_FALSE(tri.satisfied);
}

TEST_CASE("multiplicity at a point") {
  CHECK(multiplicity_at(square(), z2(), Vec2(Rational(1, 7), Rational(2, 7))) == 1);
  CHECK(multiplicity_at(hexagon(), z2(), Vec2(Rational(1, 7), Rational(2, 7))) == 3);
  CHECK(code_of([&] { multiplicity_at(square(), z2(), Vec2(Rational(1, 2), Rational(1, 3))); }) ==
        ErrorCode::NonGenericSample);
  CHECK(oracle::count_covering_2d(hexagon().vertices(), Vec2(1, 0), Vec2(0, 1), Vec2(Rational(1, 7), Rational(2, 7)), 4) == 3);
}

TEST_CASE("multiplicity agrees with brute-force enumeration") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> small(-2, 2);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    std::vector<Vec2> g;
    for (int i = 0; i < 3; ++i) g.push_back(Vec2(small(rng), oracle::random_rational(rng, -2, 2, 2)));
    Polygon2 p = square();
    try {
      p = zonogon_from_generators(g);
    } catch (const Error&) {
      continue;
    }
    const Vec2 b1(oracle::random_rational(rng, 1, 2, 2), 0);
    const Vec2 b2(oracle::random_rational(rng, -1, 1, 2), oracle::random_rational(rng, 1, 2, 2));
    const Lattice2 l({b1, b2});
    for (int k = 0; k < 4; ++k) {
      const Vec2 x(Rational(static_cast<long>(rng() % 1000), 997), Rational(static_cast<long>(rng() % 1000), 991));
      try {
        const auto m = multiplicity_at(p, l, x);
        CHECK(m == oracle::count_covering_2d(p.vertices(), b1, b2, x, 30));
        CHECK(multiplicity_at(p, l, x + b1 * Rational(3) - b2) == m);
        ++checked;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonGenericSample);
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("k-fold verification") {
  const auto ok = verify_kfold(square(), z2(), 1, 100, 3);
  CHECK(ok.success);
  CHECK(ok.constant_value == std::size_t{1});
  const auto two = verify_kfold(square(), z2(), 2, 100, 3);
  CHECK_FALSE(two.success);
  CHECK(two.constant_value == std::size_t{1});
  const auto hx = verify_kfold(hexagon(), z2(), 3, 200, 9);
  CHECK(hx.success);
  CHECK(hx.volume_ratio == 3);
}

TEST_CASE("verification does not depend on the thread count") {
  VerifyOptions four;
  four.threads = 4;
  const auto a = verify_kfold(octagon_I(Rational(1, 2)), Lattice2({Vec2(1, 0), Vec2(0, 2)}), 5, 300, 12);
  const auto b = verify_kfold(octagon_I(Rational(1, 2)), Lattice2({Vec2(1, 0), Vec2(0, 2)}), 5, 300, 12, four);
  CHECK(a.multiplicities == b.multiplicities);
  CHECK(a.success == b.success);
}

TEST_CASE("lattice search") {
  const auto unit = find_lattice(square(), 1, 2);
  REQUIRE(unit.has_value());
  CHECK(*unit == z2());
  const auto oct = find_lattice(octagon_I(Rational(1, 2)), 5, 4);
  REQUIRE(oct.has_value());
  CHECK(oct->determinant() == 2);
  const auto rep = verify_kfold(octagon_I(Rational(1, 2)), *oct, 5, 1000, 4);
  CHECK(rep.success);
  CHECK(rep.constant_value == std::size_t{5});
  const auto dec = find_lattice(default_decagon(), 5, 4);
  REQUIRE(dec.has_value());
  CHECK(*dec == z2());
  CHECK_FALSE(find_lattice(Polygon2({Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)}), 1, 2).has_value());
}

TEST_CASE("recognition of the fivefold families") {
  const auto id = recognize_fivefold_2d(octagon_I(Rational(1, 2)));
  REQUIRE(id.has_value());
  CHECK(id->tag == FivefoldTag::OctagonI);
  CHECK(id->parameter == Rational(1, 2));
  CHECK(id->witness_map(id->canonical()) == octagon_I(Rational(1, 2)));

  AffineMap2 shear;
  shear.linear.rows = {Vec2(1, 1), Vec2(0, 1)};
  const auto sh = recognize_fivefold_2d(shear(octagon_I(Rational(1, 3))));
  REQUIRE(sh.has_value());
  CHECK(sh->tag == FivefoldTag::OctagonI);
  CHECK(sh->parameter == Rational(1, 3));
  CHECK(sh->witness_map(sh->canonical()) == shear(octagon_I(Rational(1, 3))));

  // a lattice octagon that is not an affine image of either family
  const Polygon2 regularish({Vec2(1, 0), Vec2(2, 0), Vec2(3, 1), Vec2(3, 2), Vec2(2, 3), Vec2(1, 3), Vec2(0, 2), Vec2(0, 1)});
  CHECK_FALSE(recognize_fivefold_2d(regularish).has_value());
  CHECK_FALSE(recognize_fivefold_2d(Polygon2({Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)})).has_value());
  CHECK(recognize_fivefold_2d(square())->tag == FivefoldTag::Parallelogram);
  CHECK(recognize_fivefold_2d(hexagon())->tag == FivefoldTag::Hexagon);
}

TEST_CASE("recognition is affine invariant") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 15; ++t) {
    const auto a = random_map(rng);
    const Rational alpha = Rational(1 + static_cast<long>(rng() % 19), 30);
    const Rational beta = Rational(1 + static_cast<long>(rng() % 20), 20);
    for (const auto& [poly, tag, param] : {std::tuple{octagon_I(alpha), FivefoldTag::OctagonI, alpha},
                                           std::tuple{octagon_II(beta), FivefoldTag::OctagonII, beta},
                                           std::tuple{default_decagon(), FivefoldTag::Decagon, Rational(0)}}) {
      const Polygon2 img = a(poly);
      const auto fam = recognize_fivefold_2d(img);
      REQUIRE(fam.has_value());
      CHECK(fam->tag == tag);
      CHECK(fam->parameter == param);
      CHECK(fam->witness_map(fam->canonical()) == img);
    }
  }
}

TEST_CASE("Bolle satisfied implies a constant multiplicity") {
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<int> small(-2, 2);
  int satisfied = 0;
  for (int t = 0; t < 60; ++t) {
    std::vector<Vec2> g;
    for (int i = 0; i < 2 + t % 3; ++i) g.push_back(Vec2(small(rng), small(rng)) * Rational(1, 2));
    Polygon2 p = square();
    try {
      p = zonogon_from_generators(g);
    } catch (const Error&) {
      continue;
    }
    const Lattice2 l({Vec2(Rational(1 + static_cast<long>(rng() % 2), 2), 0),
                      Vec2(Rational(static_cast<long>(rng() % 2), 2), Rational(1 + static_cast<long>(rng() % 2), 2))});
    const auto b = bolle_check(p, l);
    if (!b.satisfied) continue;
    ++satisfied;
    REQUIRE(b.implied_k.is_integer());
    const auto rep = verify_kfold(p, l, b.implied_k.num().get_ui(), 150, t);
    CHECK(rep.success);
  }
  CHECK(satisfied > 5);
}
