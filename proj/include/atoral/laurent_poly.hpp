#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "atoral/errors.hpp"
#include "atoral/lattice.hpp"

namespace atoral {

/// Sparse Laurent polynomial sum_n c_n x^n with exact coefficients.
///
/// Terms are kept in a map keyed by exponent vector (lexicographic order),
/// zero coefficients are never stored, and the zero polynomial has no terms.
template <class C>
class LaurentPoly {
 public:
  using coefficient_type = C;
  using term_map = std::map<LatticePoint, C>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t dim) : dim_(dim) { check_dim(dim); }

  static LaurentPoly constant(std::size_t dim, const C& c) {
    LaurentPoly p(dim);
    p.add_term(LatticePoint(dim), c);
    return p;
  }
  static LaurentPoly monomial(const LatticePoint& e, const C& c = C(1)) {
    LaurentPoly p(e.dim());
    p.add_term(e, c);
    return p;
  }
  static LaurentPoly one(std::size_t dim) { return constant(dim, C(1)); }

  std::size_t dim() const { return dim_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  C coefficient(const LatticePoint& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Adds c x^e, dropping the term if it cancels.
  void add_term(const LatticePoint& e, const C& c) {
    check_same_dim(dim_, e.dim());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_same_dim(dim_, o.dim_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_same_dim(dim_, o.dim_);
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }
  LaurentPoly& operator*=(const C& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const C& k) { return a *= k; }
  friend LaurentPoly operator*(const C& k, LaurentPoly a) { return a *= k; }

  /// Convolution product.
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_dim(a.dim_, b.dim_);
    LaurentPoly r(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, C(ca * cb));
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// ||f||_inf = max |coef| (0 for the zero polynomial).
  C sup_norm() const {
    C m = 0;
    for (const auto& [e, c] : terms_) {
      C a = abs(c);
      if (a > m) m = a;
    }
    return m;
  }
  /// ||f||_1 = sum |coef|.
  C l1_norm() const {
    C s = 0;
    for (const auto& [e, c] : terms_) s += abs(c);
    return s;
  }

  SupportSet support() const {
    SupportSet s(dim_);
    for (const auto& [e, c] : terms_) s.insert(e);
    return s;
  }

  /// Multiplication by the unit x^n.
  LaurentPoly translated(const LatticePoint& n) const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + n, c);
    return r;
  }

  /// f*_n = f_{-n}.
  LaurentPoly adjoint() const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// Zeroes every coefficient off `s`.
  LaurentPoly restricted(const SupportSet& s) const {
    check_same_dim(dim_, s.dim());
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_)
      if (s.contains(e)) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }

  /// Componentwise minimum / maximum exponent; requires a nonzero polynomial.
  LatticePoint min_exponent() const { return corner(true); }
  LatticePoint max_exponent() const { return corner(false); }

  template <class D>
  LaurentPoly<D> cast() const {
    LaurentPoly<D> r(dim_);
    for (const auto& [e, c] : terms_) r.add_term(e, D(c));
    return r;
  }

 private:
  LatticePoint corner(bool lower) const {
    if (terms_.empty()) throw ZeroPolynomial("corner of the zero polynomial");
    LatticePoint m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (std::size_t j = 0; j < dim_; ++j)
        m[j] = lower ? std::min(m[j], e[j]) : std::max(m[j], e[j]);
    return m;
  }

  std::size_t dim_ = 0;
  term_map terms_;
};

using IntLaurentPoly = LaurentPoly<mpz_class>;
using RatLaurentPoly = LaurentPoly<mpq_class>;

inline IntLaurentPoly mul(const IntLaurentPoly& a, const IntLaurentPoly& b) { return a * b; }
inline IntLaurentPoly adjoint(const IntLaurentPoly& f) { return f.adjoint(); }
inline IntLaurentPoly translate(const IntLaurentPoly& p, const LatticePoint& n) {
  return p.translated(n);
}
inline IntLaurentPoly restrict_to(const IntLaurentPoly& p, const SupportSet& s) {
  return p.restricted(s);
}

/// Support, ||p||_inf and ||p||_1 in one pass.
struct SupportGeometry {
  SupportSet support;
  mpz_class sup_norm;
  mpz_class l1_norm;
};
SupportGeometry support_geometry(const IntLaurentPoly& p);

/// True iff every coefficient of the rational polynomial is an integer.
bool is_integral(const RatLaurentPoly& p);
/// Exact conversion; throws Error if some coefficient is not an integer.
IntLaurentPoly to_integer(const RatLaurentPoly& p);

/// Human-readable rendering in variables x, y, z (then x4, x5, ...).
std::string to_string(const IntLaurentPoly& p);
std::string to_string(const RatLaurentPoly& p);

/// Name of the j-th variable: x, y, z, x4, ...
std::string variable_name(std::size_t j, std::size_t dim);

}  // namespace atoral
