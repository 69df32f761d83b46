#pragma once

#include <optional>

#include "atoral/laurent_poly.hpp"

namespace atoral {

/// Graded lexicographic order (x1 > x2 > ... > xd) on exponent vectors.
/// This is the single monomial order used for division.
struct GrlexLess {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a < b;
  }
};

/// An ordinary polynomial obtained as x^shift * p, with the smallest shift
/// that makes every exponent nonnegative (each coordinate then hits zero).
struct Normalized {
  IntLaurentPoly poly;
  LatticePoint shift;
};

/// Throws ZeroPolynomial on p = 0.
Normalized normalize(const IntLaurentPoly& p);

/// p = quotient * f + remainder in Q[x^{+-1}].
///
/// Both inputs are normalized first; `normalized_remainder` is the remainder
/// of x^{dividend_shift} p by the normalized f, and none of its monomials is
/// divisible by the leading monomial of the normalized f.
struct DivisionResult {
  RatLaurentPoly quotient;
  RatLaurentPoly remainder;
  RatLaurentPoly normalized_remainder;
  LatticePoint dividend_shift;
  LatticePoint divisor_shift;
};

/// Throws ZeroPolynomial when f = 0.
DivisionResult divide(const IntLaurentPoly& f, const IntLaurentPoly& p);

enum class Divisibility {
  kDivides,           ///< p = q f with q in R_d
  kDividesOverQOnly,  ///< zero remainder but q has non-integer coefficients
  kNotDivisible,
};

const char* to_string(Divisibility d);

struct DivisibilityResult {
  Divisibility status = Divisibility::kNotDivisible;
  std::optional<IntLaurentPoly> quotient;           ///< set iff kDivides
  std::optional<RatLaurentPoly> rational_quotient;  ///< set iff the remainder vanished

  explicit operator bool() const { return status == Divisibility::kDivides; }
};

/// Decides whether f divides p in R_d. Throws ZeroPolynomial when f = 0.
DivisibilityResult divides(const IntLaurentPoly& f, const IntLaurentPoly& p);

/// Label of the coset p + <f> over Q.
///
/// `rep` is the division remainder of x^shift * p by the normalized modulus.
/// Labels taken at different shifts are compared by lifting both to the
/// componentwise maximum shift, which is again a remainder computation, so
/// equality of CosetReps is equality of cosets in Q[x^{+-1}] / <f>.
struct CosetRep {
  RatLaurentPoly rep;
  IntLaurentPoly modulus;
  LatticePoint shift;

  /// The remainder has integer coefficients.
  bool integral() const { return is_integral(rep); }
  bool is_zero() const { return rep.is_zero(); }
};

/// Uses the smallest shift making x^shift * p an ordinary polynomial.
CosetRep normal_form(const IntLaurentPoly& p, const IntLaurentPoly& f);
/// Uses the given shift; x^shift * p must have nonnegative exponents.
CosetRep normal_form(const IntLaurentPoly& p, const IntLaurentPoly& f, const LatticePoint& shift);
/// Re-expresses `c` at a componentwise larger shift.
CosetRep lift(const CosetRep& c, const LatticePoint& shift);

bool operator==(const CosetRep& a, const CosetRep& b);
/// The label of the sum of the two cosets (labels are Q-linear).
CosetRep operator+(const CosetRep& a, const CosetRep& b);
CosetRep operator-(const CosetRep& a, const CosetRep& b);

}  // namespace atoral
