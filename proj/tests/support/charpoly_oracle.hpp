// Exact characteristic polynomial and its real roots, independent of the
// eigensolver under test.
#ifndef HYPERSPEC_TESTS_CHARPOLY_ORACLE_HPP
#define HYPERSPEC_TESTS_CHARPOLY_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using rational = boost::multiprecision::cpp_rational;
// Coefficients in ascending powers.
using poly = std::vector<rational>;

inline void trim(poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Faddeev-LeVerrier on a row-major integer matrix; returns det(xI - A).
inline poly char_poly(const std::vector<std::int64_t>& a, std::size_t n) {
  using mat = std::vector<rational>;
  auto mul = [n](const mat& x, const mat& y) {
    mat z(n * n, rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) z[i * n + j] += x[i * n + k] * y[k * n + j];
    return z;
  };
  mat am(a.begin(), a.end());
  poly c(n + 1, rational(0));
  c[n] = 1;
  mat m(n * n, rational(0));
  for (std::size_t k = 1; k <= n; ++k) {
    mat next = mul(am, m);
    for (std::size_t i = 0; i < n; ++i) next[i * n + i] += c[n - k + 1];
    m = std::move(next);
    const mat am_m = mul(am, m);
    rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am_m[i * n + i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

inline poly derivative(const poly& p) {
  poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  return d;
}

// Quotient and remainder of p / q, q nonzero.
inline std::pair<poly, poly> divmod(poly p, const poly& q) {
  trim(p);
  if (p.size() < q.size()) return {poly{}, p};
  poly quot(p.size() - q.size() + 1, rational(0));
  while (p.size() >= q.size() && !p.empty()) {
    const std::size_t shift = p.size() - q.size();
    const rational f = p.back() / q.back();
    quot[shift] = f;
    for (std::size_t k = 0; k < q.size(); ++k) p[k + shift] -= f * q[k];
    trim(p);
  }
  trim(quot);
  return {quot, p};
}

inline poly monic(poly p) {
  trim(p);
  const rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline poly gcd(poly a, poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Yun: p = prod factors[i]^(i+1), each factor square-free.
inline std::vector<poly> square_free_factors(const poly& p) {
  std::vector<poly> factors;
  poly a = monic(p);
  poly b = derivative(a);
  poly g = gcd(a, b);
  poly c = divmod(a, g).first;
  poly d = b.empty() ? poly{} : divmod(b, g).first;
  while (true) {
    poly dc = derivative(c);
    poly e = d;
    {
      // e = d - c'
      e.resize(std::max(e.size(), dc.size()), rational(0));
      for (std::size_t k = 0; k < dc.size(); ++k) e[k] -= dc[k];
      trim(e);
    }
    if (c.size() <= 1) break;
    poly h = e.empty() ? c : gcd(c, e);
    factors.push_back(h);
    c = divmod(c, h).first;
    d = e.empty() ? poly{} : divmod(e, h).first;
  }
  return factors;
}

inline long double eval(const std::vector<long double>& p, long double x) {
  long double v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

// Roots of a real-rooted square-free polynomial: the critical points separate
// the roots, so recurse on the derivative and bisect between them.
inline std::vector<long double> real_roots(const std::vector<long double>& p) {
  const std::size_t deg = p.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) return {-p[0] / p[1]};
  std::vector<long double> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long double>(k));
  const auto crit = real_roots(d);
  long double bound = 0;
  for (std::size_t k = 0; k < deg; ++k) bound = std::max(bound, std::fabs(p[k] / p[deg]));
  bound += 1;
  std::vector<long double> edges{-bound};
  edges.insert(edges.end(), crit.begin(), crit.end());
  edges.push_back(bound);
  std::vector<long double> roots;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    long double lo = edges[k], hi = edges[k + 1];
    long double flo = eval(p, lo), fhi = eval(p, hi);
    if ((flo > 0) == (fhi > 0)) {
      roots.push_back(std::fabs(flo) < std::fabs(fhi) ? lo : hi);
      continue;
    }
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
      const long double mid = lo + (hi - lo) / 2;
      if (mid == lo || mid == hi) break;
      const long double fm = eval(p, mid);
      if ((fm > 0) == (flo > 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(lo + (hi - lo) / 2);
  }
  return roots;
}

// Eigenvalues of a symmetric integer matrix, with multiplicity, ascending.
inline std::vector<long double> eigenvalues(const std::vector<std::int64_t>& a, std::size_t n) {
  std::vector<long double> out;
  const auto factors = square_free_factors(char_poly(a, n));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<long double> f;
    for (const auto& c : factors[i]) f.push_back(c.convert_to<long double>());
    for (long double r : real_roots(f)) out.insert(out.end(), i + 1, r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

#endif
