#pragma once

// Dense exact linear algebra over the rationals: just enough Gaussian
// elimination for flats, affine hulls, facets and simplex coordinates.

#include "reciprocity/number.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace reciprocity {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major, rows of equal length

inline Rational dot(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector operator*(const Rational& s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

struct RowEchelon {
  Matrix rows;                      // nonzero rows of the reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row-echelon form. The result is canonical: two matrices with the
/// same row space produce identical output.
inline RowEchelon rref(Matrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m, std::size_t cols) { return rref(m, cols).rows.size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Vector> nullspace(const Matrix& m, std::size_t cols) {
  const RowEchelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solution set of a x = b as particular solution + nullspace basis, or
/// nullopt when inconsistent.
struct AffineSolution {
  Vector particular;
  std::vector<Vector> directions;
};

inline std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b, std::size_t cols) {
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const RowEchelon e = rref(aug, cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  AffineSolution s;
  s.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < e.rows.size(); ++i) s.particular[e.pivots[i]] = e.rows[i][cols];
  s.directions = nullspace(a, cols);
  return s;
}

/// Unique solution of a square system, or nullopt if singular.
inline std::optional<Vector> solve_unique(const Matrix& a, const Vector& b) {
  const std::size_t n = b.size();
  auto s = solve_affine(a, b, n);
  if (!s || !s->directions.empty()) return std::nullopt;
  return s->particular;
}

inline Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

/// Scales v by a positive rational so it becomes a primitive integer vector.
/// Returns the integer vector; `scale` receives the factor applied.
inline std::vector<Integer> primitive_integer(const Vector& v, Rational* scale = nullptr) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, denominator_of(x));
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator_of(v[i] * Rational(den));
    g = gcd(g, out[i]);
  }
  if (g == 0) g = 1;
  if (g < 0) g = -g;
  for (auto& x : out) x /= g;
  if (scale) *scale = Rational(den, g);
  return out;
}

}  // namespace reciprocity
