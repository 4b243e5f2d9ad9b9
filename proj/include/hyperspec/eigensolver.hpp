#ifndef HYPERSPEC_EIGENSOLVER_HPP
#define HYPERSPEC_EIGENSOLVER_HPP

// Householder tridiagonalization followed by implicit-shift QL iteration,
// eigenvalues only. Templated on the scalar so the same kernel runs in
// double and in binary128.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include <quadmath.h>

namespace hyperspec {

using quad = __float128;

namespace detail {

inline double abs_of(double x) { return std::fabs(x); }
inline double sqrt_of(double x) { return std::sqrt(x); }
inline quad abs_of(quad x) { return fabsq(x); }
inline quad sqrt_of(quad x) { return sqrtq(x); }
inline double epsilon_of(double) { return std::numeric_limits<double>::epsilon(); }
inline quad epsilon_of(quad) { return FLT128_EPSILON; }

template <typename Real>
Real hypot_of(Real a, Real b) {
  const Real x = abs_of(a);
  const Real y = abs_of(b);
  if (x > y) {
    const Real r = y / x;
    return x * sqrt_of(Real(1) + r * r);
  }
  if (y == Real(0)) return Real(0);
  const Real r = x / y;
  return y * sqrt_of(Real(1) + r * r);
}

template <typename Real>
Real copy_sign(Real magnitude, Real sign_of) {
  return sign_of >= Real(0) ? abs_of(magnitude) : -abs_of(magnitude);
}

// Reduces the row-major symmetric matrix `a` (destroyed) to tridiagonal form.
// On return diag holds the diagonal and off[i] couples rows i-1 and i (off[0] = 0).
template <typename Real>
void householder_tridiagonalize(std::vector<Real>& a, std::size_t n, std::vector<Real>& diag,
                                std::vector<Real>& off) {
  diag.assign(n, Real(0));
  off.assign(n, Real(0));
  auto at = [&](std::size_t i, std::size_t j) -> Real& { return a[i * n + j]; };

  for (std::size_t i = n; i-- > 1;) {
    const std::size_t l = i - 1;
    Real h = 0;
    if (l > 0) {
      Real scale = 0;
      for (std::size_t k = 0; k <= l; ++k) scale += abs_of(at(i, k));
      if (scale == Real(0)) {
        off[i] = at(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        Real f = at(i, l);
        Real g = f >= Real(0) ? -sqrt_of(h) : sqrt_of(h);
        off[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0;
          for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          off[j] = g / h;
          f += off[j] * at(i, j);
        }
        const Real hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = at(i, j);
          g = off[j] - hh * f;
          off[j] = g;
          for (std::size_t k = 0; k <= j; ++k) at(j, k) -= f * off[k] + g * at(i, k);
        }
      }
    } else {
      off[i] = at(i, l);
    }
    diag[i] = h;
  }
  off[0] = 0;
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
}

// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal matrix.
template <typename Real>
void tridiagonal_ql(std::vector<Real>& diag, std::vector<Real>& off) {
  const std::size_t n = diag.size();
  if (n == 0) return;
  for (std::size_t i = 1; i < n; ++i) off[i - 1] = off[i];
  off[n - 1] = 0;

  Real norm = 0;
  for (std::size_t i = 0; i < n; ++i)
    norm = std::max(norm, abs_of(diag[i]) + abs_of(off[i]) + (i > 0 ? abs_of(off[i - 1]) : Real(0)));
  const Real negligible = epsilon_of(Real(0)) * norm;

  constexpr int kMaxIterations = 100;
  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const Real dd = abs_of(diag[m]) + abs_of(diag[m + 1]);
        if (abs_of(off[m]) <= negligible || abs_of(off[m]) + dd == dd)
          break;
      }
      if (m != l) {
        if (++iterations > kMaxIterations)
          throw std::runtime_error("tridiagonal QL failed to converge");
        Real g = (diag[l + 1] - diag[l]) / (Real(2) * off[l]);
        Real r = hypot_of(g, Real(1));
        g = diag[m] - diag[l] + off[l] / (g + copy_sign(r, g));
        Real s = 1, c = 1, p = 0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          Real f = s * off[i];
          const Real b = c * off[i];
          r = hypot_of(f, g);
          off[i + 1] = r;
          if (r == Real(0)) {
            diag[i + 1] -= p;
            off[m] = 0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + Real(2) * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        diag[l] -= p;
        off[l] = g;
        off[m] = 0;
      }
    } while (m != l);
  }
}

}  // namespace detail

// Eigenvalues of a row-major symmetric matrix, ascending.
template <typename Real>
std::vector<Real> symmetric_eigenvalues_of(std::vector<Real> a, std::size_t n) {
  std::vector<Real> diag, off;
  detail::householder_tridiagonalize(a, n, diag, off);
  detail::tridiagonal_ql(diag, off);
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace hyperspec

#endif
