#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "atoral/laurent_poly.hpp"
#include "atoral/univariate.hpp"

namespace atoral {

/// Additive coordinates (t_1, ..., t_d) of a point of T^d = R^d / Z^d,
/// reduced into [0, 1).
struct TorusPoint {
  std::vector<double> t;

  TorusPoint() = default;
  explicit TorusPoint(std::vector<double> coords);
  std::size_t dim() const { return t.size(); }
};

/// Euclidean distance on R^d / Z^d.
double torus_distance(const TorusPoint& a, const TorusPoint& b);

/// sum_n f_n e^{2 pi i <n, t>}. Each phase <n, t> is reduced mod 1 before
/// the trigonometric call, so the absolute error stays below about
/// eps * ||f||_1 * (4 + 2 pi max_n ||n||_1).
std::complex<double> eval_on_torus(const IntLaurentPoly& f, const TorusPoint& t);

/// 2 pi sum_n ||n||_1 |f_n|: a Euclidean Lipschitz constant of
/// t -> f(e^{2 pi i t}). Crude but always valid.
double lipschitz_constant(const IntLaurentPoly& f);

/// Grid certificate for an empty unitary variety.
///
/// Every point of T^d lies within cell_radius = sqrt(d) / (2N) of a grid
/// point, so |f| >= grid_min - L * cell_radius - rounding everywhere. When
/// that is positive the variety is proven empty; otherwise the grid points
/// whose cells might hold a zero are returned as candidates.
struct TorusCertificate {
  std::size_t dim = 0;
  std::size_t grid_size = 0;
  double grid_min = 0.0;
  double lipschitz = 0.0;
  double cell_radius = 0.0;
  double rounding_allowance = 0.0;
  double certified_min = 0.0;  ///< clamped at 0
  bool empty_proven = false;
  std::vector<TorusPoint> candidate_cells;
};

/// Requires N >= 2 and a power of two.
TorusCertificate empty_variety_certificate(const IntLaurentPoly& f, std::size_t n);

/// Grid cells that may contain a zero, refined by damped Gauss-Newton on
/// (Re f, Im f). Points reaching |f| < tol are kept and thinned so that
/// no two are closer than 1/(2N). They are accurate in |f| value only.
std::vector<TorusPoint> unitary_variety_sample(const IntLaurentPoly& f, std::size_t n, double tol,
                                               std::size_t threads = 1);

/// Single-linkage clusters at the given torus-distance threshold.
std::vector<std::vector<TorusPoint>> cluster_torus_points(const std::vector<TorusPoint>& pts,
                                                          double radius);

enum class Torality { kAtoral, kToral };
const char* to_string(Torality t);

struct D1Classification {
  Torality verdict = Torality::kAtoral;
  univariate::Poly self_inversive_gcd;  ///< gcd(f, reverse f), monic
  univariate::Poly reduced;             ///< P with g = z^m P(z + 1/z), after removing z = +-1
  int roots_in_interval = 0;            ///< distinct real roots of P in (-2, 2)
  bool root_at_one = false;
  bool root_at_minus_one = false;
};

/// Exact decision for d = 1: toral iff f has a root on the unit circle.
D1Classification classify_d1(const IntLaurentPoly& f);

enum class AdjointHint { kAtoralIfIrreducible, kInconclusive };
const char* to_string(AdjointHint h);

struct AdjointComparison {
  AdjointHint hint = AdjointHint::kAtoralIfIrreducible;
  /// When inconclusive: f* = sign * x^shift * f.
  std::optional<int> sign;
  std::optional<LatticePoint> shift;
};

/// If f* is not a unit times f, an irreducible f is atoral.
AdjointComparison adjoint_atorality_hint(const IntLaurentPoly& f);

}  // namespace atoral
