#pragma once

#include <array>
#include <span>
#include <vector>

#include "zonotile/linalg.hpp"

namespace zonotile {

using IntMatrix = std::vector<std::vector<Integer>>;

// Row-style Hermite normal form of the integer row span: upper triangular
// (echelon) with positive pivots and entries above each pivot reduced into
// [0, pivot). Zero rows are dropped, so the result has rank-many rows.
IntMatrix hermite_normal_form(IntMatrix rows);

// Full-rank lattice in Q^N. The stored basis (rows) is the Hermite normal
// form, so structural equality is lattice equality.
template <std::size_t N>
class Lattice {
 public:
  // Throws SingularBasis when the vectors are dependent.
  explicit Lattice(const std::array<Vec<N>, N>& basis);

  // Lattice generated by an arbitrary list of vectors; throws SingularBasis
  // when they do not span Q^N.
  static Lattice from_generators(std::span<const Vec<N>> gens);
  static Lattice integer();

  const std::array<Vec<N>, N>& basis() const { return basis_; }
  const Vec<N>& basis_vector(std::size_t i) const { return basis_[i]; }
  const Rational& determinant() const { return det_; }

  // Coordinates t with x = sum_i t_i b_i.
  Vec<N> coordinates(const Vec<N>& x) const { return coord_map_ * x; }
  Vec<N> point(const Vec<N>& coords) const;
  bool contains(const Vec<N>& x) const;
  bool half_contains(const Vec<N>& x) const { return contains(x * 2); }

  Lattice transformed(const Mat<N, N>& linear) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  Lattice() = default;
  void canonicalize(const std::vector<Vec<N>>& gens);

  std::array<Vec<N>, N> basis_{};
  Mat<N, N> coord_map_;  // inverse of the matrix whose columns are the basis vectors
  Rational det_;
};

using Lattice2 = Lattice<2>;
using Lattice3 = Lattice<3>;

extern template class Lattice<2>;
extern template class Lattice<3>;

}  // namespace zonotile
