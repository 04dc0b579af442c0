#include "zonotile/lattice.hpp"

#include <algorithm>
#include <utility>

#include "zonotile/error.hpp"

namespace zonotile {

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    // Euclid on the column below r until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        for (std::size_t j = col; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0) {
      for (auto& v : rows[r]) v = -v;
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t col = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[k][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= q * rows[k][j];
    }
  }
  return rows;
}

template <std::size_t N>
void Lattice<N>::canonicalize(const std::vector<Vec<N>>& gens) {
  Integer denom = 1;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < N; ++i) {
      const Integer d = g[i].den();
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
    }
  IntMatrix rows;
  for (const auto& g : gens) {
    std::vector<Integer> row(N);
    for (std::size_t i = 0; i < N; ++i) row[i] = g[i].num() * (denom / g[i].den());
    rows.push_back(std::move(row));
  }
  rows = hermite_normal_form(std::move(rows));
  if (rows.size() != N) throw Error(ErrorCode::SingularBasis, "lattice generators do not span the space");
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t i = 0; i < N; ++i) basis_[k][i] = Rational(rows[k][i], denom);

  Mat<N, N> columns = from_rows(basis_).transposed();
  coord_map_ = inverse(columns);
  det_ = zonotile::determinant(columns).abs();
}

template <std::size_t N>
Lattice<N>::Lattice(const std::array<Vec<N>, N>& basis) {
  if (zonotile::determinant(from_rows(basis)).is_zero()) throw Error(ErrorCode::SingularBasis, "lattice basis is singular");
  canonicalize(std::vector<Vec<N>>(basis.begin(), basis.end()));
}

template <std::size_t N>
Lattice<N> Lattice<N>::from_generators(std::span<const Vec<N>> gens) {
  Lattice l;
  l.canonicalize(std::vector<Vec<N>>(gens.begin(), gens.end()));
  return l;
}

template <std::size_t N>
Lattice<N> Lattice<N>::integer() {
  std::array<Vec<N>, N> b{};
  for (std::size_t i = 0; i < N; ++i) b[i][i] = 1;
  return Lattice(b);
}

template <std::size_t N>
Vec<N> Lattice<N>::point(const Vec<N>& coords) const {
  Vec<N> x;
  for (std::size_t i = 0; i < N; ++i) x += basis_[i] * coords[i];
  return x;
}

template <std::size_t N>
bool Lattice<N>::contains(const Vec<N>& x) const {
  const Vec<N> t = coordinates(x);
  for (std::size_t i = 0; i < N; ++i)
    if (!t[i].is_integer()) return false;
  return true;
}

template <std::size_t N>
Lattice<N> Lattice<N>::transformed(const Mat<N, N>& linear) const {
  std::array<Vec<N>, N> b{};
  for (std::size_t i = 0; i < N; ++i) b[i] = linear * basis_[i];
  return Lattice(b);
}

template class Lattice<2>;
template class Lattice<3>;

}  // namespace zonotile
