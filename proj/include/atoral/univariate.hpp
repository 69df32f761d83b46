#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace atoral::univariate {

/// Dense polynomial c[0] + c[1] z + ... over Q, with no trailing zeros
/// (the zero polynomial is empty).
using Poly = std::vector<mpq_class>;

void trim(Poly& p);
int degree(const Poly& p);  ///< -1 for zero
Poly reversed(const Poly& p);
Poly derivative(const Poly& p);
Poly monic(Poly p);
mpq_class evaluate(const Poly& p, const mpq_class& z);

Poly operator*(const Poly& a, const Poly& b);
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (empty if both are zero).
Poly gcd(Poly a, Poly b);

/// p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<Poly> sturm_sequence(const Poly& p);
/// Number of distinct real roots of p in (a, b) by Sturm's theorem; a and b
/// must not be roots.
int count_real_roots(const Poly& p, const mpq_class& a, const mpq_class& b);

/// For a palindromic g of degree 2m, the P of degree m with
/// g(z) = z^m P(z + 1/z).
Poly palindromic_reduction(const Poly& g);

}  // namespace atoral::univariate
