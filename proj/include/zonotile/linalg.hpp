#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "zonotile/rational.hpp"

namespace zonotile {

template <std::size_t N>
struct Vec {
  std::array<Rational, N> c{};

  Vec() = default;

  template <typename... Ts>
    requires(sizeof...(Ts) == N && (std::convertible_to<Ts, Rational> && ...))
  Vec(Ts&&... xs) : c{Rational(std::forward<Ts>(xs))...} {}  // NOLINT(implicit)

  Rational& operator[](std::size_t i) { return c[i]; }
  const Rational& operator[](std::size_t i) const { return c[i]; }

  const Rational& x() const { return c[0]; }
  const Rational& y() const { return c[1]; }
  const Rational& z() const requires(N >= 3) { return c[2]; }

  bool is_zero() const {
    for (const auto& v : c) if (!v.is_zero()) return false;
    return true;
  }

  Vec& operator+=(const Vec& o) { for (std::size_t i = 0; i < N; ++i) c[i] += o.c[i]; return *this; }
  Vec& operator-=(const Vec& o) { for (std::size_t i = 0; i < N; ++i) c[i] -= o.c[i]; return *this; }
  Vec& operator*=(const Rational& s) { for (auto& v : c) v *= s; return *this; }
  Vec& operator/=(const Rational& s) { for (auto& v : c) v /= s; return *this; }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { for (auto& v : a.c) v = -v; return a; }
  friend Vec operator*(Vec a, const Rational& s) { return a *= s; }
  friend Vec operator*(const Rational& s, Vec a) { return a *= s; }
  friend Vec operator/(Vec a, const Rational& s) { return a /= s; }

  friend bool operator==(const Vec&, const Vec&) = default;
  friend auto operator<=>(const Vec& a, const Vec& b) { return a.c <=> b.c; }
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

template <std::size_t N>
Rational dot(const Vec<N>& a, const Vec<N>& b) {
  Rational s;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3(a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
              a.x() * b.y() - a.y() * b.x());
}

inline Rational det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

// Orientation of c relative to the directed line a->b: +1 left, -1 right, 0 collinear.
inline int orient2d(const Vec2& a, const Vec2& b, const Vec2& c) { return cross(b - a, c - a).sign(); }

template <std::size_t N>
bool parallel(const Vec<N>& a, const Vec<N>& b) {
  return cross(a, b).is_zero();
}

// Exact angular comparison of 2D directions, counterclockwise from the +x axis.
bool angle_less(const Vec2& a, const Vec2& b);
// True when v lies in the half-open upper half-plane {y > 0} u {y = 0, x > 0}.
bool upper_half(const Vec2& v);

// Row-major R x C matrix; rows()[i] is the i-th row.
template <std::size_t R, std::size_t C>
struct Mat {
  std::array<Vec<C>, R> rows{};

  Rational& operator()(std::size_t i, std::size_t j) { return rows[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows[i][j]; }

  static Mat identity() requires(R == C) {
    Mat m;
    for (std::size_t i = 0; i < R; ++i) m(i, i) = 1;
    return m;
  }

  Vec<R> operator*(const Vec<C>& v) const {
    Vec<R> out;
    for (std::size_t i = 0; i < R; ++i) out[i] = dot(rows[i], v);
    return out;
  }

  template <std::size_t K>
  Mat<R, K> operator*(const Mat<C, K>& o) const {
    Mat<R, K> out;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t k = 0; k < K; ++k)
        for (std::size_t j = 0; j < C; ++j) out(i, k) += (*this)(i, j) * o(j, k);
    return out;
  }

  Mat<C, R> transposed() const {
    Mat<C, R> t;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Mat&, const Mat&) = default;
};

using Mat2 = Mat<2, 2>;
using Mat3 = Mat<3, 3>;

Rational determinant(const Mat2& m);
Rational determinant(const Mat3& m);

// Throws Error(SingularBasis) when the matrix is singular.
Mat2 inverse(const Mat2& m);
Mat3 inverse(const Mat3& m);

template <std::size_t N>
Mat<N, N> from_rows(const std::array<Vec<N>, N>& rows) {
  Mat<N, N> m;
  m.rows = rows;
  return m;
}

// Rank of a list of vectors (exact Gaussian elimination).
template <std::size_t N>
int rank(std::span<const Vec<N>> vs);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct LinearSolution {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<Rational> x;
};

// Solves A x = b for a possibly overdetermined system.
LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Vec<N>& v) {
  os << '(';
  for (std::size_t i = 0; i < N; ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

}  // namespace zonotile
