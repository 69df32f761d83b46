#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "atoral/laurent_poly.hpp"

namespace atoral {

/// Sparse Laurent polynomial over GF(2): the set of exponents with
/// coefficient 1.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(std::size_t dim) : dim_(dim) { check_dim(dim); }
  static Gf2Poly one(std::size_t dim);
  static Gf2Poly monomial(const LatticePoint& e);
  /// Reduction of the integer coefficients mod 2.
  static Gf2Poly from_integer(const IntLaurentPoly& p);

  std::size_t dim() const { return dim_; }
  const std::set<LatticePoint>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool contains(const LatticePoint& e) const { return terms_.count(e) != 0; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Adds x^e (so a repeated exponent cancels).
  void toggle(const LatticePoint& e);

  Gf2Poly& operator+=(const Gf2Poly& o);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  IntLaurentPoly to_integer() const;

 private:
  std::size_t dim_ = 0;
  std::set<LatticePoint> terms_;
};

/// p^k by repeated squaring, each square computed by general multiplication.
Gf2Poly pow(const Gf2Poly& p, std::uint64_t k);

std::string to_string(const Gf2Poly& p);

struct Gf2Division {
  bool divides = false;
  Gf2Poly quotient;  ///< set when divides
};

/// Decides f | p in GF(2)[x^{+-1}] by grlex division after shifting both to
/// ordinary polynomials. Throws ZeroPolynomial on f = 0.
Gf2Division divide(const Gf2Poly& p, const Gf2Poly& f);

}  // namespace atoral
