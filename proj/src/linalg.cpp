#include "zonotile/linalg.hpp"

#include <utility>

#include "zonotile/error.hpp"

namespace zonotile {

bool upper_half(const Vec2& v) { return v.y().sign() > 0 || (v.y().is_zero() && v.x().sign() > 0); }

bool angle_less(const Vec2& a, const Vec2& b) {
  const bool ua = upper_half(a);
  const bool ub = upper_half(b);
  if (ua != ub) return ua;
  return cross(a, b).sign() > 0;
}

Rational determinant(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Rational determinant(const Mat3& m) { return det3(m.rows[0], m.rows[1], m.rows[2]); }

Mat2 inverse(const Mat2& m) {
  const Rational d = determinant(m);
  if (d.is_zero()) throw Error(ErrorCode::SingularBasis, "singular 2x2 matrix");
  Mat2 inv;
  inv(0, 0) = m(1, 1) / d;
  inv(0, 1) = -m(0, 1) / d;
  inv(1, 0) = -m(1, 0) / d;
  inv(1, 1) = m(0, 0) / d;
  return inv;
}

Mat3 inverse(const Mat3& m) {
  const Rational d = determinant(m);
  if (d.is_zero()) throw Error(ErrorCode::SingularBasis, "singular 3x3 matrix");
  // Columns of the inverse are cross products of rows.
  const Vec3 c0 = cross(m.rows[1], m.rows[2]);
  const Vec3 c1 = cross(m.rows[2], m.rows[0]);
  const Vec3 c2 = cross(m.rows[0], m.rows[1]);
  Mat3 inv;
  for (std::size_t i = 0; i < 3; ++i) {
    inv(i, 0) = c0[i] / d;
    inv(i, 1) = c1[i] / d;
    inv(i, 2) = c2[i] / d;
  }
  return inv;
}

template <std::size_t N>
int rank(std::span<const Vec<N>> vs) {
  std::vector<Vec<N>> rows(vs.begin(), vs.end());
  int r = 0;
  for (std::size_t col = 0; col < N && r < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (!rows[i][col].is_zero()) { pivot = i; break; }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col] / rows[r][col];
      rows[i] -= rows[r] * f;
    }
    ++r;
  }
  return r;
}

template int rank<2>(std::span<const Vec<2>>);
template int rank<3>(std::span<const Vec<3>>);

LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!a[i][col].is_zero()) { p = i; break; }
    }
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    std::swap(b[r], b[p]);
    const Rational inv = Rational(1) / a[r][col];
    for (std::size_t j = col; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  LinearSolution out;
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return out;
  }
  out.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = b[i];
  out.status = (r == cols) ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return out;
}

}  // namespace zonotile
