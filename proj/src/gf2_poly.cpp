#include "atoral/gf2_poly.hpp"

#include "atoral/division.hpp"

namespace atoral {

Gf2Poly Gf2Poly::one(std::size_t dim) { return monomial(LatticePoint(dim)); }

Gf2Poly Gf2Poly::monomial(const LatticePoint& e) {
  Gf2Poly p(e.dim());
  p.terms_.insert(e);
  return p;
}

Gf2Poly Gf2Poly::from_integer(const IntLaurentPoly& p) {
  Gf2Poly r(p.dim());
  for (const auto& [e, c] : p)
    if (mpz_odd_p(c.get_mpz_t())) r.terms_.insert(e);
  return r;
}

void Gf2Poly::toggle(const LatticePoint& e) {
  check_same_dim(dim_, e.dim());
  auto [it, inserted] = terms_.insert(e);
  if (!inserted) terms_.erase(it);
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
  check_same_dim(dim_, o.dim_);
  for (const auto& e : o.terms_) toggle(e);
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  check_same_dim(a.dim_, b.dim_);
  Gf2Poly r(a.dim_);
  for (const auto& ea : a.terms_)
    for (const auto& eb : b.terms_) r.toggle(ea + eb);
  return r;
}

IntLaurentPoly Gf2Poly::to_integer() const {
  IntLaurentPoly p(dim_);
  for (const auto& e : terms_) p.add_term(e, mpz_class(1));
  return p;
}

Gf2Poly pow(const Gf2Poly& p, std::uint64_t k) {
  Gf2Poly result = Gf2Poly::one(p.dim());
  Gf2Poly base = p;
  while (k != 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

std::string to_string(const Gf2Poly& p) { return to_string(p.to_integer()); }

namespace {

LatticePoint min_corner(const Gf2Poly& p) {
  LatticePoint m = *p.begin();
  for (const auto& e : p)
    for (std::size_t j = 0; j < e.dim(); ++j) m[j] = std::min(m[j], e[j]);
  return m;
}

Gf2Poly shifted(const Gf2Poly& p, const LatticePoint& s) {
  Gf2Poly r(p.dim());
  for (const auto& e : p) r.toggle(e + s);
  return r;
}

bool divisible_monomial(const LatticePoint& e, const LatticePoint& lead) {
  for (std::size_t j = 0; j < e.dim(); ++j)
    if (e[j] < lead[j]) return false;
  return true;
}

}  // namespace

Gf2Division divide(const Gf2Poly& p, const Gf2Poly& f) {
  if (f.is_zero()) throw ZeroPolynomial("GF(2) division by zero");
  check_same_dim(p.dim(), f.dim());
  Gf2Division out;
  if (p.is_zero()) {
    out.divides = true;
    out.quotient = Gf2Poly(p.dim());
    return out;
  }
  const LatticePoint sf = -min_corner(f), sp = -min_corner(p);
  const Gf2Poly fn = shifted(f, sf);
  LatticePoint lead = *fn.begin();
  for (const auto& e : fn)
    if (GrlexLess{}(lead, e)) lead = e;

  std::set<LatticePoint, GrlexLess> work;
  for (const auto& e : p) work.insert(e + sp);
  Gf2Poly quotient(p.dim());
  while (!work.empty()) {
    const LatticePoint top = *work.rbegin();
    // Anything left at the top is a remainder term, and later steps only
    // touch smaller monomials, so the remainder cannot vanish.
    if (!divisible_monomial(top, lead)) return out;
    const LatticePoint t = top - lead;
    quotient.toggle(t);
    for (const auto& e : fn) {
      auto [it, inserted] = work.insert(t + e);
      if (!inserted) work.erase(it);
    }
  }
  out.divides = true;
  out.quotient = shifted(quotient, sf - sp);
  return out;
}

}  // namespace atoral
