#ifndef AMPCYL_LINALG_HPP
#define AMPCYL_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ampcyl/errors.hpp"
#include "ampcyl/rational.hpp"

namespace ampcyl {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

inline Matrix zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, Vector(cols, Rational(0)));
}

inline Vector mat_vec(const Matrix& m, const Vector& v) {
  Vector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw DimensionMismatch("matrix/vector size");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

inline Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Fraction-free is unnecessary with exact rationals; plain elimination.
inline Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

inline std::vector<Rational> leading_principal_minors(const Matrix& m) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Matrix sub(k, Vector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    out.push_back(determinant(std::move(sub)));
  }
  return out;
}

// Sylvester: (-1)^k * minor_k > 0 for all k.
inline bool is_negative_definite(const Matrix& m) {
  auto minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    bool odd = (k % 2) == 0;
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

// Unique solution of a square system, or nullopt when singular.
inline std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("solve: right-hand side length");
  for (auto& row : a)
    if (row.size() != n) throw DimensionMismatch("solve: matrix is not square");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

} // namespace ampcyl

#endif // AMPCYL_LINALG_HPP
