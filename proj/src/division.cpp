#include "atoral/division.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <vector>

namespace atoral {

Normalized normalize(const IntLaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("normalize: zero polynomial");
  const LatticePoint shift = -p.min_exponent();
  return {p.translated(shift), shift};
}

const char* to_string(Divisibility d) {
  switch (d) {
    case Divisibility::kDivides: return "divides";
    case Divisibility::kDividesOverQOnly: return "divides over Q only";
    case Divisibility::kNotDivisible: return "does not divide";
  }
  return "?";
}

namespace {

bool monomial_divides(const LatticePoint& lead, const LatticePoint& m) {
  for (std::size_t j = 0; j < m.dim(); ++j)
    if (m[j] < lead[j]) return false;
  return true;
}

template <class C>
struct Reduction {
  LaurentPoly<C> quotient;
  LaurentPoly<C> remainder;
};

// Single-divisor division of an ordinary polynomial by an ordinary divisor
// under grlex. With C = mpz_class the leading coefficient must be +-1.
template <class C>
Reduction<C> reduce(const LaurentPoly<C>& dividend, const LaurentPoly<C>& divisor) {
  const std::size_t d = divisor.dim();
  auto lead_it = std::max_element(divisor.begin(), divisor.end(), [](const auto& a, const auto& b) {
    return GrlexLess{}(a.first, b.first);
  });
  const LatticePoint lead = lead_it->first;
  const C lead_coef = lead_it->second;
  std::vector<std::pair<LatticePoint, C>> tail;
  for (const auto& [e, c] : divisor)
    if (e != lead) tail.emplace_back(e, c);

  std::map<LatticePoint, C, GrlexLess> work(dividend.begin(), dividend.end());
  Reduction<C> out{LaurentPoly<C>(d), LaurentPoly<C>(d)};
  while (!work.empty()) {
    auto it = std::prev(work.end());
    const LatticePoint m = it->first;
    if (!monomial_divides(lead, m)) {
      out.remainder.add_term(m, it->second);
      work.erase(it);
      continue;
    }
    C factor;
    if constexpr (std::is_same_v<C, mpz_class>)
      factor = it->second * lead_coef;  // lead_coef is +-1
    else
      factor = it->second / lead_coef;
    work.erase(it);
    const LatticePoint step = m - lead;
    out.quotient.add_term(step, factor);
    for (const auto& [e, c] : tail) {
      const LatticePoint k = step + e;
      auto [w, inserted] = work.try_emplace(k, C(-factor * c));
      if (!inserted) {
        w->second -= factor * c;
        if (w->second == 0) work.erase(w);
      }
    }
  }
  return out;
}

Reduction<mpq_class> reduce_rational(const RatLaurentPoly& dividend, const IntLaurentPoly& divisor) {
  const auto lead = std::max_element(divisor.begin(), divisor.end(), [](const auto& a, const auto& b) {
    return GrlexLess{}(a.first, b.first);
  });
  if (abs(lead->second) == 1 && is_integral(dividend)) {
    auto r = reduce<mpz_class>(to_integer(dividend), divisor);
    return {r.quotient.cast<mpq_class>(), r.remainder.cast<mpq_class>()};
  }
  return reduce<mpq_class>(dividend, divisor.cast<mpq_class>());
}

RatLaurentPoly remainder_at_shift(const IntLaurentPoly& p, const Normalized& nf,
                                  const LatticePoint& shift) {
  if (p.is_zero()) return RatLaurentPoly(nf.poly.dim());
  RatLaurentPoly shifted = p.translated(shift).cast<mpq_class>();
  for (const auto& [e, c] : shifted)
    for (std::size_t j = 0; j < e.dim(); ++j)
      if (e[j] < 0) throw Error("normal_form: shift " + shift.to_string() + " leaves a negative exponent");
  return reduce_rational(shifted, nf.poly).remainder;
}

}  // namespace

DivisionResult divide(const IntLaurentPoly& f, const IntLaurentPoly& p) {
  check_same_dim(f.dim(), p.dim());
  if (f.is_zero()) throw ZeroPolynomial("divide: zero divisor");
  const Normalized nf = normalize(f);
  const std::size_t d = f.dim();
  if (p.is_zero()) {
    return {RatLaurentPoly(d), RatLaurentPoly(d), RatLaurentPoly(d), LatticePoint(d), nf.shift};
  }
  const Normalized np = normalize(p);
  auto r = reduce_rational(np.poly.cast<mpq_class>(), nf.poly);
  // x^sp p = q x^sf f + rem  =>  p = (x^{sf - sp} q) f + x^{-sp} rem
  DivisionResult out;
  out.quotient = r.quotient.translated(nf.shift - np.shift);
  out.remainder = r.remainder.translated(-np.shift);
  out.normalized_remainder = std::move(r.remainder);
  out.dividend_shift = np.shift;
  out.divisor_shift = nf.shift;
  return out;
}

DivisibilityResult divides(const IntLaurentPoly& f, const IntLaurentPoly& p) {
  DivisionResult r = divide(f, p);
  DivisibilityResult out;
  if (!r.remainder.is_zero()) return out;
  out.rational_quotient = r.quotient;
  if (is_integral(r.quotient)) {
    out.status = Divisibility::kDivides;
    out.quotient = to_integer(r.quotient);
  } else {
    out.status = Divisibility::kDividesOverQOnly;
  }
  return out;
}

CosetRep normal_form(const IntLaurentPoly& p, const IntLaurentPoly& f) {
  check_same_dim(f.dim(), p.dim());
  if (f.is_zero()) throw ZeroPolynomial("normal_form: zero modulus");
  const LatticePoint shift = p.is_zero() ? LatticePoint(p.dim()) : normalize(p).shift;
  return normal_form(p, f, shift);
}

CosetRep normal_form(const IntLaurentPoly& p, const IntLaurentPoly& f, const LatticePoint& shift) {
  check_same_dim(f.dim(), p.dim());
  if (f.is_zero()) throw ZeroPolynomial("normal_form: zero modulus");
  const Normalized nf = normalize(f);
  return {remainder_at_shift(p, nf, shift), f, shift};
}

CosetRep lift(const CosetRep& c, const LatticePoint& shift) {
  if (c.shift == shift) return c;
  const LatticePoint delta = shift - c.shift;
  for (std::size_t j = 0; j < delta.dim(); ++j)
    if (delta[j] < 0) throw Error("lift: target shift must dominate the current one");
  const Normalized nf = normalize(c.modulus);
  return {reduce_rational(c.rep.translated(delta), nf.poly).remainder, c.modulus, shift};
}

namespace {

LatticePoint common_shift(const CosetRep& a, const CosetRep& b) {
  if (a.modulus != b.modulus) throw Error("coset labels over different moduli");
  LatticePoint s = a.shift;
  for (std::size_t j = 0; j < s.dim(); ++j) s[j] = std::max(s[j], b.shift[j]);
  return s;
}

}  // namespace

bool operator==(const CosetRep& a, const CosetRep& b) {
  const LatticePoint s = common_shift(a, b);
  return lift(a, s).rep == lift(b, s).rep;
}

CosetRep operator+(const CosetRep& a, const CosetRep& b) {
  const LatticePoint s = common_shift(a, b);
  CosetRep r = lift(a, s);
  r.rep += lift(b, s).rep;
  return r;
}

CosetRep operator-(const CosetRep& a, const CosetRep& b) {
  const LatticePoint s = common_shift(a, b);
  CosetRep r = lift(a, s);
  r.rep -= lift(b, s).rep;
  return r;
}

}  // namespace atoral
