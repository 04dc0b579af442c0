#include "zonotile/multiplicity.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "zonotile/error.hpp"

namespace zonotile {

namespace {

constexpr long kGrid = 1000003;  // prime

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("lattice-coordinate value exceeds 64 bits");
  return v.get_si();
}

}  // namespace

HalfspaceBody<2> halfspace_body(const Polygon2& p) {
  HalfspaceBody<2> b;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2 e = p.edge(i);
    const Vec2 n(e.y(), -e.x());
    b.normals.push_back(n);
    b.offsets.push_back(dot(n, p.vertex(i)));
  }
  b.vertices = p.vertices();
  b.volume = polygon_area(p);
  return b;
}

HalfspaceBody<3> halfspace_body(const Zonotope3& p) {
  HalfspaceBody<3> b;
  for (const auto& f : enumerate_facets(p)) {
    b.normals.push_back(f.normal);
    b.offsets.push_back(f.support);
  }
  b.vertices = vertices(p);
  b.volume = volume(p);
  return b;
}

template <std::size_t N>
CoveringCounter<N>::CoveringCounter(const HalfspaceBody<N>& body, const Lattice<N>& lattice) : lattice_(lattice) {
  // A point with lattice coordinates s is sum_i s_i b_i, so n . x = (B n) . s.
  for (std::size_t k = 0; k < body.normals.size(); ++k) {
    Vec<N> m;
    for (std::size_t i = 0; i < N; ++i) m[i] = dot(lattice.basis_vector(i), body.normals[k]);
    Integer lcm = 1;
    for (std::size_t i = 0; i < N; ++i) {
      const Integer d = m[i].den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::array<Integer, N> ints;
    Integer g = 0;
    for (std::size_t i = 0; i < N; ++i) {
      ints[i] = m[i].num() * (lcm / m[i].den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    std::array<std::int64_t, N> row{};
    for (std::size_t i = 0; i < N; ++i) row[i] = to_int64(Integer(ints[i] / g));
    normals_.push_back(row);
    offsets_.push_back(body.offsets[k] * Rational(lcm, g));
  }
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t v = 0; v < body.vertices.size(); ++v) {
      const Rational s = lattice.coordinates(body.vertices[v])[i];
      if (v == 0 || s < coord_min_[i]) coord_min_[i] = s;
      if (v == 0 || s > coord_max_[i]) coord_max_[i] = s;
    }
  }
}

template <std::size_t N>
std::optional<std::size_t> CoveringCounter<N>::count_at_coordinates(const Vec<N>& t) const {
  // Translate c contains the point iff m . (t - c) <= h for every halfspace,
  // i.e. m . c >= r with r = m . t - h. Strict everywhere means interior.
  const std::size_t h = normals_.size();
  std::vector<__int128> floor_r(h);
  std::vector<bool> integral(h);
  for (std::size_t k = 0; k < h; ++k) {
    Rational r = -offsets_[k];
    for (std::size_t i = 0; i < N; ++i) r += t[i] * Rational(normals_[k][i]);
    floor_r[k] = to_int64(r.floor());
    integral[k] = r.is_integer();
  }
  std::array<std::int64_t, N> lo{};
  std::array<std::int64_t, N> hi{};
  for (std::size_t i = 0; i < N; ++i) {
    lo[i] = to_int64((t[i] - coord_max_[i]).floor());
    hi[i] = to_int64((t[i] - coord_min_[i]).ceil());
  }
  std::array<std::int64_t, N> c = lo;
  std::size_t count = 0;
  while (true) {
    bool exterior = false;
    bool boundary = false;
    for (std::size_t k = 0; k < h && !exterior; ++k) {
      __int128 mc = 0;
      for (std::size_t i = 0; i < N; ++i) mc += static_cast<__int128>(normals_[k][i]) * c[i];
      if (integral[k]) {
        if (mc < floor_r[k]) exterior = true;
        else if (mc == floor_r[k]) boundary = true;
      } else if (mc <= floor_r[k]) {
        exterior = true;
      }
    }
    if (!exterior) {
      if (boundary) return std::nullopt;
      ++count;
    }
    std::size_t i = 0;
    while (i < N && c[i] == hi[i]) {
      c[i] = lo[i];
      ++i;
    }
    if (i == N) break;
    ++c[i];
  }
  return count;
}

template <std::size_t N>
std::size_t CoveringCounter<N>::count_at(const Vec<N>& x) const {
  const auto n = count_at_coordinates(lattice_.coordinates(x));
  if (!n) throw Error(ErrorCode::NonGenericSample, "sample point lies on the boundary of a lattice translate");
  return *n;
}

template <std::size_t N>
Vec<N> sample_coordinates(std::uint64_t seed, std::size_t index, std::size_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(attempt)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> dist(0, kGrid - 1);
  Vec<N> t;
  for (std::size_t i = 0; i < N; ++i) t[i] = Rational(dist(rng), kGrid);
  return t;
}

template <std::size_t N>
MultiplicityReport verify_kfold_body(const HalfspaceBody<N>& body, const Lattice<N>& lattice, std::size_t k,
                                     std::size_t n, std::uint64_t seed, const VerifyOptions& opts) {
  const CoveringCounter<N> counter(body, lattice);
  MultiplicityReport rep;
  rep.samples = n;
  rep.expected_k = k;
  rep.volume_ratio = body.volume / lattice.determinant();
  rep.multiplicities.assign(n, 0);
  std::vector<std::size_t> rejected(n, 0);

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride) {
      for (std::size_t attempt = 0;; ++attempt) {
        const auto m = counter.count_at_coordinates(sample_coordinates<N>(seed, i, attempt));
        if (m) {
          rep.multiplicities[i] = *m;
          break;
        }
        ++rejected[i];
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(opts.threads, n));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    for (auto& th : pool) th.join();
  }

  for (auto r : rejected) rep.rejected += r;
  if (n > 0) {
    bool constant = true;
    for (auto m : rep.multiplicities) constant = constant && m == rep.multiplicities[0];
    if (constant) rep.constant_value = rep.multiplicities[0];
  }
  rep.success = rep.constant_value && *rep.constant_value == k && rep.volume_ratio == Rational(static_cast<long>(k));
  return rep;
}

template class CoveringCounter<2>;
template class CoveringCounter<3>;
template Vec<2> sample_coordinates<2>(std::uint64_t, std::size_t, std::size_t);
template Vec<3> sample_coordinates<3>(std::uint64_t, std::size_t, std::size_t);
template MultiplicityReport verify_kfold_body<2>(const HalfspaceBody<2>&, const Lattice<2>&, std::size_t,
                                                 std::size_t, std::uint64_t, const VerifyOptions&);
template MultiplicityReport verify_kfold_body<3>(const HalfspaceBody<3>&, const Lattice<3>&, std::size_t,
                                                 std::size_t, std::uint64_t, const VerifyOptions&);

}  // namespace zonotile
