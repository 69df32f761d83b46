#pragma once

// Test-side reference implementations. None of them calls into the
// library's arithmetic: polynomials are plain maps, series come from their
// defining recurrences, parities from binary digits, roots from Eigen.

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "atoral/laurent_poly.hpp"

namespace oracle {

using Exponent = std::vector<std::int64_t>;
using Terms = std::map<Exponent, mpz_class>;

inline Terms terms_of(const atoral::IntLaurentPoly& p) {
  Terms t;
  for (const auto& [e, c] : p) t[Exponent(e.coords().begin(), e.coords().end())] = c;
  return t;
}

inline atoral::IntLaurentPoly from_terms(std::size_t dim, const Terms& t) {
  atoral::IntLaurentPoly p(dim);
  for (const auto& [e, c] : t) p.add_term(atoral::LatticePoint(std::span<const std::int64_t>(e)), c);
  return p;
}

inline void prune(Terms& t) {
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
}

/// Schoolbook expansion of a product.
inline Terms schoolbook_mul(const Terms& a, const Terms& b) {
  Terms r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      r[e] += ca * cb;
    }
  prune(r);
  return r;
}

inline Terms add(Terms a, const Terms& b, int sign = 1) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  prune(a);
  return a;
}

/// Nonzero random Laurent polynomial with up to `max_terms` terms, exponents in
/// [-span, span]^d and nonzero coefficients in [-cmax, cmax].
template <class Rng>
atoral::IntLaurentPoly random_poly(Rng& rng, std::size_t dim, int max_terms, int span, int cmax) {
  std::uniform_int_distribution<int> nterms(1, max_terms), ex(-span, span), co(-cmax, cmax);
  atoral::IntLaurentPoly p(dim);
  while (p.is_zero()) {
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
      atoral::LatticePoint e(dim);
      for (std::size_t j = 0; j < dim; ++j) e[j] = ex(rng);
      int c = 0;
      while (c == 0) c = co(rng);
      p.add_term(e, mpz_class(c));
    }
  }
  return p;
}

/// Coefficient k of 1/(z - 2) = -sum_{k>=0} z^k / 2^{k+1}.
inline double inverse_x_minus_2(std::int64_t k) { return k < 0 ? 0.0 : -std::ldexp(1.0, static_cast<int>(-(k + 1))); }

/// Coefficients of 1/(3 + x + y) for m + n <= order, from the recurrence
/// 3 c_{m,n} + c_{m-1,n} + c_{m,n-1} = [m = n = 0].
inline std::map<std::pair<int, int>, mpq_class> inverse_3xy_by_recurrence(int order) {
  std::map<std::pair<int, int>, mpq_class> c;
  for (int s = 0; s <= order; ++s)
    for (int m = 0; m <= s; ++m) {
      const int n = s - m;
      mpq_class rhs = (m == 0 && n == 0) ? 1 : 0;
      if (m > 0) rhs -= c[{m - 1, n}];
      if (n > 0) rhs -= c[{m, n - 1}];
      c[{m, n}] = rhs / 3;
    }
  return c;
}

/// (-1)^{m+n} binom(m+n, m) / 3^{m+n+1}.
inline double inverse_3xy_closed(int m, int n) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m + n), static_cast<unsigned long>(m));
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(m + n + 1));
  const mpq_class v(b, p);
  return ((m + n) % 2 ? -1.0 : 1.0) * v.get_d();
}

/// sum_{max(m,n) >= R} |c_{m,n}| for 1/(3+x+y), truncated at m+n <= order
/// plus the exact remainder sum_{k > order} 2^k / 3^{k+1} = (2/3)^{order+1}.
inline double sup_tail_3xy(int radius, int order = 200) {
  long double s = 0;
  for (int k = 0; k <= order; ++k)
    for (int m = 0; m <= k; ++m)
      if (std::max(m, k - m) >= radius) s += std::abs(static_cast<long double>(inverse_3xy_closed(m, k - m)));
  return static_cast<double>(s) + std::pow(2.0 / 3.0, order + 1);
}

/// (a + b + c)! / (a! b! c!) is odd iff a, b, c have pairwise disjoint
/// binary digits (no carries when adding them).
inline bool multinomial_odd(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return (a & b) == 0 && (a & c) == 0 && (b & c) == 0;
}

/// Exponents (a, b) of (1 + x + y)^N mod 2.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> trinomial_power_mod2(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t a = 0; a <= n; ++a)
    for (std::uint64_t b = 0; a + b <= n; ++b)
      if (multinomial_odd(a, b, n - a - b)) out.emplace_back(a, b);
  return out;
}

/// Dense rational polynomial arithmetic (c0 + c1 z + ...), for the
/// squarefree part: p / gcd(p, p').
using Dense = std::vector<mpq_class>;

inline void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Dense remainder(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const mpq_class k = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= k * b[i];
    trim(a);
  }
  return a;
}

inline Dense quotient(Dense a, const Dense& b) {
  trim(a);
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size()) {
    const mpq_class k = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    q[off] = k;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= k * b[i];
    trim(a);
  }
  return q;
}

inline Dense squarefree_part(Dense p) {
  trim(p);
  Dense d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  if (d.empty()) return p;
  Dense a = p, b = d;
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return quotient(p, a);
}

/// Roots of c0 + c1 z + ... + cn z^n (cn != 0) as eigenvalues of the
/// companion matrix.
inline std::vector<std::complex<double>> companion_roots(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()[i]);
  return roots;
}

/// Brute-force |B_R| and |B_{R,M}| over [-R, R]^d.
inline std::pair<std::uint64_t, std::uint64_t> ball_scan(int dim, std::int64_t radius, std::int64_t spacing) {
  std::uint64_t all = 0, sub = 0;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(dim), -radius);
  while (true) {
    ++all;
    bool on = true;
    for (auto x : cur) on = on && x % spacing == 0;
    if (on) ++sub;
    int j = dim - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == radius) cur[static_cast<std::size_t>(j--)] = -radius;
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
  }
  return {all, sub};
}

/// Direct evaluation sum_n c_n e^{2 pi i <n, t>} in long double.
inline std::complex<long double> torus_value(const Terms& f, const std::vector<double>& t) {
  std::complex<long double> acc = 0;
  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  for (const auto& [e, c] : f) {
    long double ph = 0;
    for (std::size_t j = 0; j < e.size(); ++j) ph += static_cast<long double>(e[j]) * t[j];
    acc += static_cast<long double>(c.get_d()) * std::complex<long double>(std::cos(two_pi * ph), std::sin(two_pi * ph));
  }
  return acc;
}

}  // namespace oracle
