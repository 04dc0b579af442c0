#include "zonotile/tiling2d.hpp"

#include <algorithm>
#include <set>

#include "zonotile/error.hpp"

namespace zonotile {

namespace {

struct CanonicalOctagonVertex {
  Vec2 base;
  Vec2 slope;  // vertex = base + parameter * slope
};

// v1..v4 of each octagon family; v5..v8 are their negatives.
std::array<CanonicalOctagonVertex, 4> octagon_family(FivefoldTag tag) {
  if (tag == FivefoldTag::OctagonI) {
    return {{{Vec2(Rational(3, 2), -2), Vec2(Rational(-5, 4), 0)},
             {Vec2(Rational(-1, 2), -2), Vec2(Rational(-5, 4), 0)},
             {Vec2(Rational(-3, 2), 0), Vec2(Rational(1, 4), 0)},
             {Vec2(Rational(-3, 2), 1), Vec2(Rational(1, 4), 0)}}};
  }
  return {{{Vec2(2, -3), Vec2(-1, 0)},
           {Vec2(0, -3), Vec2(-1, 0)},
           {Vec2(-2, -1), Vec2(0, 0)},
           {Vec2(-2, 1), Vec2(0, 0)}}};
}

bool octagon_parameter_ok(FivefoldTag tag, const Rational& t) {
  if (tag == FivefoldTag::OctagonI) return t > 0 && t < Rational(2, 3);
  return t > 0 && t <= 1;
}

Polygon2 octagon(FivefoldTag tag, const Rational& t) {
  std::vector<Vec2> vs;
  for (const auto& v : octagon_family(tag)) vs.push_back(v.base + v.slope * t);
  for (std::size_t i = 0; i < 4; ++i) vs.push_back(-vs[i]);
  return Polygon2(std::move(vs));
}

// Does p + t q hit Z^2 for some t in the open interval (0, 1)?
bool open_segment_meets_integers(const Vec2& p, const Vec2& q) {
  std::vector<std::size_t> moving;
  for (std::size_t i = 0; i < 2; ++i) {
    if (q[i].is_zero()) {
      if (!p[i].is_integer()) return false;
    } else {
      moving.push_back(i);
    }
  }
  if (moving.empty()) return false;
  std::sort(moving.begin(), moving.end(), [&](std::size_t a, std::size_t b) { return q[a].abs() < q[b].abs(); });
  const std::size_t i = moving[0];
  const Rational end = p[i] + q[i];
  const Rational lo = min(p[i], end);
  const Rational hi = max(p[i], end);
  for (Integer n = lo.floor() + 1; Rational(n) < hi; ++n) {
    const Rational t = (Rational(n) - p[i]) / q[i];
    bool ok = true;
    for (std::size_t k = 1; k < moving.size(); ++k) {
      const std::size_t j = moving[k];
      if (!(p[j] + t * q[j]).is_integer()) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

Mat2 from_columns(const Vec2& a, const Vec2& b) {
  Mat2 m;
  m(0, 0) = a.x();
  m(1, 0) = a.y();
  m(0, 1) = b.x();
  m(1, 1) = b.y();
  return m;
}

// Linear A with A s0 = w0, A s1 = w1.
std::optional<Mat2> map_pair(const Vec2& s0, const Vec2& s1, const Vec2& w0, const Vec2& w1) {
  const Mat2 s = from_columns(s0, s1);
  if (determinant(s).is_zero()) return std::nullopt;
  Mat2 a = from_columns(w0, w1) * inverse(s);
  if (determinant(a).is_zero()) return std::nullopt;
  return a;
}

std::optional<FivefoldFamily2D> match_octagon(const std::vector<Vec2>& w, FivefoldTag tag) {
  const auto canon = octagon_family(tag);
  for (std::size_t shift = 0; shift < 8; ++shift) {
    for (int orient : {1, -1}) {
      // Unknowns: p00 p01 p10 p11 q00 q10 (the canonical slopes have zero
      // second component, so only q's first column is determined).
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t j = (shift + 8 + orient * static_cast<long>(i)) % 8;
        for (std::size_t r = 0; r < 2; ++r) {
          std::vector<Rational> row(6);
          row[2 * r] = canon[i].base.x();
          row[2 * r + 1] = canon[i].base.y();
          row[4 + r] = canon[i].slope.x();
          a.push_back(std::move(row));
          b.push_back(w[j][r]);
        }
      }
      const auto sol = solve_linear(a, b);
      if (sol.status != SolveStatus::Unique) continue;
      Mat2 p;
      p(0, 0) = sol.x[0];
      p(0, 1) = sol.x[1];
      p(1, 0) = sol.x[2];
      p(1, 1) = sol.x[3];
      if (determinant(p).is_zero()) continue;
      const std::size_t r = p(0, 0).is_zero() ? 1 : 0;
      const Rational t = sol.x[4 + r] / p(r, 0);
      if (sol.x[4 + (1 - r)] != t * p(1 - r, 0)) continue;
      if (!octagon_parameter_ok(tag, t)) continue;
      FivefoldFamily2D fam;
      fam.tag = tag;
      fam.parameter = t;
      fam.witness_map.linear = p;
      return fam;
    }
  }
  return std::nullopt;
}

std::optional<FivefoldFamily2D> match_decagon(const Polygon2& centered_poly) {
  std::vector<Vec2> u = decagon_midpoints();
  for (std::size_t i = 0; i < 5; ++i) u.push_back(-u[i]);
  const auto m = edge_midpoints(centered_poly);
  for (std::size_t shift = 0; shift < 10; ++shift) {
    for (int orient : {1, -1}) {
      auto at = [&](std::size_t i) { return m[(shift + 10 + orient * static_cast<long>(i)) % 10]; };
      const auto a = map_pair(u[0], u[1], at(0), at(1));
      if (!a) continue;
      bool ok = true;
      for (std::size_t i = 2; i < 10 && ok; ++i) ok = (*a * u[i] == at(i));
      if (!ok) continue;
      FivefoldFamily2D fam;
      fam.tag = FivefoldTag::Decagon;
      fam.witness_map.linear = *a;
      AffineMap2 lin;
      lin.linear = *a;
      const Polygon2 canon = lin.inverse()(centered_poly);
      const auto mids = decagon_midpoints();
      for (const auto& v : canon.vertices()) {
        try {
          if (reconstruct_from_midpoints(mids, v) == canon) {
            fam.base_vertex = v;
            return fam;
          }
        } catch (const Error&) {
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Polygon2 octagon_I(const Rational& alpha) {
  if (!octagon_parameter_ok(FivefoldTag::OctagonI, alpha))
    throw Error(ErrorCode::ParameterOutOfRange, "octagon_I needs 0 < alpha < 2/3");
  return octagon(FivefoldTag::OctagonI, alpha);
}

Polygon2 octagon_II(const Rational& beta) {
  if (!octagon_parameter_ok(FivefoldTag::OctagonII, beta))
    throw Error(ErrorCode::ParameterOutOfRange, "octagon_II needs 0 < beta <= 1");
  return octagon(FivefoldTag::OctagonII, beta);
}

std::vector<Vec2> decagon_midpoints() {
  return {Vec2(0, 1), Vec2(1, 1), Vec2(Rational(3, 2), Rational(1, 2)), Vec2(Rational(3, 2), 0),
          Vec2(1, Rational(-1, 2))};
}

Polygon2 decagon(const Vec2& p1) { return reconstruct_from_midpoints(decagon_midpoints(), p1); }

std::optional<Vec2> scan_decagon_base_vertex(long max_denominator) {
  for (long q = 1; q <= max_denominator; ++q) {
    for (long i = -2 * q; i <= 2 * q; ++i) {
      for (long j = -2 * q; j <= 2 * q; ++j) {
        const Vec2 p1(Rational(i, q), Rational(j, q));
        try {
          decagon(p1);
          return p1;
        } catch (const Error&) {
        }
      }
    }
  }
  return std::nullopt;
}

Polygon2 default_decagon() {
  static const Vec2 p1 = *scan_decagon_base_vertex(8);
  return decagon(p1);
}

Polygon2 reconstruct_from_midpoints(const std::vector<Vec2>& midpoints, const Vec2& p1) {
  const std::size_t n = midpoints.size();
  if (n < 2) throw Error(ErrorCode::ClosureViolated, "need at least two midpoints");
  std::vector<Vec2> ring{p1};
  for (std::size_t i = 0; i < n; ++i) ring.push_back(midpoints[i] * 2 - ring.back());
  if (ring.back() != -p1) {
    throw Error(ErrorCode::ClosureViolated, "midpoint chain does not close antipodally");
  }
  ring.pop_back();
  for (std::size_t i = 0; i < n; ++i) ring.push_back(-ring[i]);
  if (!is_strictly_convex_cycle(ring)) {
    throw Error(ErrorCode::NonConvexResult, "base vertex yields a non-convex polygon");
  }
  return Polygon2(std::move(ring));
}

BolleReport bolle_check(const Polygon2& p, const Lattice2& lattice) {
  BolleReport rep;
  rep.implied_k = polygon_area(p) / lattice.determinant();
  const auto c = symmetry_center(p);
  if (!c) return rep;
  rep.symmetric = true;
  const Polygon2 q = translated(p, -*c);
  rep.satisfied = true;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Vec2& a = q.vertex(i);
    const Vec2& b = q.vertex(i + 1);
    BolleEdge e;
    e.midpoint_in_half_lattice = lattice.contains(a + b);
    e.edge_is_lattice_vector = lattice.contains(b - a);
    e.has_half_lattice_point =
        open_segment_meets_integers(lattice.coordinates(a * 2), lattice.coordinates((b - a) * 2));
    rep.satisfied = rep.satisfied && e.passes();
    rep.edges.push_back(e);
  }
  return rep;
}

std::size_t multiplicity_at(const Polygon2& p, const Lattice2& lattice, const Vec2& x) {
  return CoveringCounter<2>(halfspace_body(p), lattice).count_at(x);
}

MultiplicityReport2 verify_kfold(const Polygon2& p, const Lattice2& lattice, std::size_t k, std::size_t samples,
                                 std::uint64_t seed, const VerifyOptions& opts) {
  return verify_kfold_body(halfspace_body(p), lattice, k, samples, seed, opts);
}

std::optional<Lattice2> find_lattice(const Polygon2& p, std::size_t k, long max_denominator,
                                     const FindLatticeOptions& opts) {
  if (k == 0 || !symmetry_center(p)) return std::nullopt;
  const Polygon2 q = centered(p);
  const Rational target = polygon_area(q) / Rational(static_cast<long>(k));
  std::set<std::array<Vec2, 2>> tried;

  auto accept = [&](const Lattice2& l) {
    if (!tried.insert(l.basis()).second) return false;
    if (l.determinant() != target) return false;
    if (!bolle_check(q, l).satisfied) return false;
    return verify_kfold(q, l, k, opts.oracle_samples, opts.oracle_seed).success;
  };
  auto try_span = [&](const std::vector<Vec2>& gens) -> std::optional<Lattice2> {
    try {
      const auto l = Lattice2::from_generators(gens);
      if (accept(l)) return l;
    } catch (const Error&) {
    }
    return std::nullopt;
  };

  std::vector<Vec2> doubled;
  for (const auto& m : edge_midpoints(q)) doubled.push_back(m * 2);
  if (auto l = try_span(doubled)) return l;

  const std::size_t half = q.size() / 2;
  for (std::size_t size = 2; size <= half; ++size) {
    for (unsigned mask = 0; mask < (1u << half); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      std::vector<Vec2> gens;
      for (std::size_t i = 0; i < half; ++i)
        if (mask & (1u << i)) gens.push_back(q.edge(i));
      if (auto l = try_span(gens)) return l;
    }
  }

  for (long den = 1; den <= max_denominator; ++den) {
    const Rational scaled = target * Rational(den * den);
    if (!scaled.is_integer()) continue;
    const Integer n = scaled.num();
    for (Integer a = 1; a <= n; ++a) {
      if (n % a != 0) continue;
      const Integer c = n / a;
      for (Integer b = 0; b < c; ++b) {
        const Lattice2 l({Vec2(Rational(a, den), Rational(b, den)), Vec2(Rational(0), Rational(c, den))});
        if (accept(l)) return l;
      }
    }
  }
  return std::nullopt;
}

std::string to_string(FivefoldTag tag) {
  switch (tag) {
    case FivefoldTag::Parallelogram: return "parallelogram";
    case FivefoldTag::Hexagon: return "hexagon";
    case FivefoldTag::OctagonI: return "octagon-I";
    case FivefoldTag::OctagonII: return "octagon-II";
    case FivefoldTag::Decagon: return "decagon";
  }
  return "unknown";
}

Polygon2 FivefoldFamily2D::canonical() const {
  switch (tag) {
    case FivefoldTag::Parallelogram:
      return Polygon2({Vec2(Rational(-1, 2), Rational(-1, 2)), Vec2(Rational(1, 2), Rational(-1, 2)),
                       Vec2(Rational(1, 2), Rational(1, 2)), Vec2(Rational(-1, 2), Rational(1, 2))});
    case FivefoldTag::Hexagon:
      return Polygon2({Vec2(1, 0), Vec2(0, 1), Vec2(-1, 1), Vec2(-1, 0), Vec2(0, -1), Vec2(1, -1)});
    case FivefoldTag::OctagonI: return octagon_I(parameter);
    case FivefoldTag::OctagonII: return octagon_II(parameter);
    case FivefoldTag::Decagon: return decagon(base_vertex);
  }
  throw Error(ErrorCode::InvariantViolation, "unknown fivefold tag");
}

std::optional<FivefoldFamily2D> recognize_fivefold_2d(const Polygon2& p) {
  const auto c = symmetry_center(p);
  if (!c) return std::nullopt;
  const Polygon2 q = translated(p, -*c);
  std::optional<FivefoldFamily2D> fam;
  if (q.size() == 4 || q.size() == 6) {
    FivefoldFamily2D f;
    f.tag = q.size() == 4 ? FivefoldTag::Parallelogram : FivefoldTag::Hexagon;
    const Polygon2 canon = f.canonical();
    const auto a = map_pair(canon.vertex(0), canon.vertex(1), q.vertex(0), q.vertex(1));
    if (!a) return std::nullopt;
    f.witness_map.linear = *a;
    fam = f;
  } else if (q.size() == 8) {
    fam = match_octagon(q.vertices(), FivefoldTag::OctagonI);
    if (!fam) fam = match_octagon(q.vertices(), FivefoldTag::OctagonII);
  } else if (q.size() == 10) {
    fam = match_decagon(q);
  }
  if (fam) fam->witness_map.translation = *c;
  return fam;
}

}  // namespace zonotile
