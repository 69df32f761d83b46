#pragma once

#include <map>

#include "atoral/laurent_poly.hpp"
#include "atoral/lattice.hpp"

namespace atoral {

/// Finite truncation of an element v of l^1(Z^d, R).
///
/// `terms` holds the stored coefficients; `tail_bound` is an upper bound on
/// the l^1 distance between the true element and the stored terms. Hence
/// l1_norm() = sum |terms| + tail_bound bounds ||v||_1 and sup_bound() bounds
/// ||v||_inf.
class RealSummableArray {
 public:
  using term_map = std::map<LatticePoint, double>;

  RealSummableArray() = default;
  explicit RealSummableArray(std::size_t dim, double tail_bound = 0.0);
  static RealSummableArray from_integer(const IntLaurentPoly& p);

  std::size_t dim() const { return dim_; }
  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  double tail_bound() const { return tail_bound_; }
  void set_tail_bound(double t);

  double coefficient(const LatticePoint& e) const;
  void add_term(const LatticePoint& e, double c);

  double stored_l1() const;
  double stored_sup() const;
  double l1_norm() const { return stored_l1() + tail_bound_; }
  double sup_bound() const { return stored_sup() + tail_bound_; }

  RealSummableArray translated(const LatticePoint& n) const;
  RealSummableArray restricted(const SupportSet& s) const;
  /// Drops terms with |c| < threshold, moving their mass into the tail bound.
  RealSummableArray pruned(double threshold) const;

  friend bool operator==(const RealSummableArray&, const RealSummableArray&) = default;

 private:
  std::size_t dim_ = 0;
  term_map terms_;
  double tail_bound_ = 0.0;
};

/// Convolution; tail(a*b) = ||a||_1 tail(b) + tail(a) ||b||_1.
RealSummableArray mul(const RealSummableArray& a, const RealSummableArray& b);
RealSummableArray mul(const IntLaurentPoly& a, const RealSummableArray& b);
RealSummableArray mul(const RealSummableArray& a, const IntLaurentPoly& b);

RealSummableArray restrict_to(const RealSummableArray& v, const SupportSet& s);
RealSummableArray translate(const RealSummableArray& v, const LatticePoint& n);

/// Distance below 1/2 that a coefficient must keep from the nearest
/// half-integer for round_to_int to accept it.
inline constexpr double kRoundingTolerance = 1e-6;

/// Rounds every stored coefficient to the nearest integer and drops zeros.
/// Throws AmbiguousRounding when a coefficient lies within the tolerance of
/// a half-integer.
IntLaurentPoly round_to_int(const RealSummableArray& v, double tolerance = kRoundingTolerance);

}  // namespace atoral
