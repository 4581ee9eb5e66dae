#pragma once

// Exact dense linear algebra over Z and Q: Bareiss determinant, unimodular
// inverse, Hermite normal form and integral kernels.

#include "symprod/integer.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace symprod {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

inline std::size_t rows(const IntMatrix& a) { return a.size(); }
inline std::size_t cols(const IntMatrix& a) { return a.empty() ? 0 : a.front().size(); }

inline IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(cols(a), IntVector(rows(a)));
  for (std::size_t i = 0; i < rows(a); ++i)
    for (std::size_t j = 0; j < cols(a); ++j) t[j][i] = a[i][j];
  return t;
}

/// Row vector times matrix.
inline IntVector row_times(const IntVector& v, const IntMatrix& a) {
  IntVector out(cols(a));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * a[i][j];
  }
  return out;
}

/// Matrix times column vector.
inline IntVector times_col(const IntMatrix& a, const IntVector& v) {
  IntVector out(rows(a));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) out[i] += a[i][j] * v[j];
  return out;
}

/// Fraction-free Gaussian elimination (Bareiss). Square input.
inline Integer determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& r : a)
    if (r.size() != n) throw InvalidArgument("determinant: matrix is not square");
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev, "bareiss step");
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Inverse of a matrix whose inverse is integral (det = +-1 in practice).
/// Throws IntegralityError if singular or if any inverse entry is fractional.
inline IntMatrix integral_inverse(const IntMatrix& a, std::string_view what) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InvalidArgument("integral_inverse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw IntegralityError(std::string(what) + ": singular matrix");
    std::swap(m[p], m[c]);
    const Rational piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < 2 * n; ++j)
        if (m[c][j] != 0) m[i][j] -= f * m[c][j];
    }
  }
  IntMatrix inv(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = to_integer(m[i][n + j], what);
  return inv;
}

/// Row-style Hermite normal form using unimodular row operations only.
/// Zero rows are dropped; pivots are positive and entries above a pivot lie
/// in [0, pivot).
inline IntMatrix hermite_normal_form(IntMatrix a) {
  const std::size_t nc = cols(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < a.size(); ++c) {
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        if (best == a.size() || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        const Integer q = floor_div(a[i][c], a[r][c]);
        for (std::size_t j = c; j < nc; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= a.size() || a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(a[i][c], a[r][c]);
      if (q == 0) continue;
      for (std::size_t j = c; j < nc; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

/// Z-basis of { x in Z^cols : a x = 0 }, returned in Hermite normal form.
inline IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols) {
  const std::size_t nr = a.size();
  // Augment a^T with the identity; rows whose left block reduces to zero
  // carry kernel vectors in the right block.
  IntMatrix aug(ncols, IntVector(nr + ncols));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < nr; ++i) aug[j][i] = a[i][j];
    aug[j][nr + j] = 1;
  }
  IntMatrix h = hermite_normal_form(std::move(aug));
  IntMatrix kernel;
  for (const auto& row : h) {
    bool left_zero = true;
    for (std::size_t i = 0; i < nr && left_zero; ++i) left_zero = row[i] == 0;
    if (left_zero) kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(nr), row.end());
  }
  return hermite_normal_form(std::move(kernel));
}

}  // namespace symprod
