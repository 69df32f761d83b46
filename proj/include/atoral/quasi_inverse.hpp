#pragma once

#include <cstdint>
#include <vector>

#include "atoral/laurent_poly.hpp"
#include "atoral/summable_array.hpp"

namespace atoral {

/// A real summable array f# with f# * f = h, h an integer polynomial
/// outside <f>.
///
/// `fsharp` stores a truncation a of the true f#; its tail_bound bounds
/// ||f# - a||_1. For the empty-variety path this comes from the exact error
/// e = a f - 1: since f# = a / (1 + e),
///   ||f# - a||_1 <= ||a||_1 ||e||_1 / (1 - ||e||_1).
struct QuasiInverse {
  IntLaurentPoly f;
  IntLaurentPoly h;
  RealSummableArray fsharp;
  /// ||a f - h||_inf, computed exactly, plus tail_bound * ||f||_1.
  double residual = 0.0;
  /// ||a f - h||_1, computed exactly (rounded up).
  double residual_l1 = 0.0;
  /// tail_table[R] bounds the sum of |f#_n| over ||n|| >= R. Beyond the
  /// last entry the bound is fsharp.tail_bound().
  std::vector<double> tail_table;
  std::size_t grid_size = 0;
  /// Largest coefficient change between the last two grid sizes.
  double aliasing_estimate = 0.0;
  /// Lower bound for |f| on the torus used to admit the computation.
  double certified_min = 0.0;
  bool experimental = false;
  bool tail_certified = false;
};

struct QuasiInverseOptions {
  double eps = 1e-9;
  std::size_t start_grid = 16;
  /// 0 picks 2^14 per axis for d <= 2 and 2^8 for d = 3; in every case the
  /// grid is capped at 2^24 points.
  std::size_t max_grid = 0;
  /// Stored coefficients below this are dropped (their effect shows up in
  /// the exact error e, hence in the tail bound).
  double prune_below = 1e-16;
};

inline constexpr std::size_t kMaxGridPoints = std::size_t{1} << 24;

/// Largest admissible grid size per axis for dimension d.
std::size_t max_grid_size(std::size_t dim, std::size_t requested = 0);

/// The DFT-of-1/f quasi-inverse (h = 1) for f with empty unitary variety.
/// Throws NoCertificate, NoConvergence, or DividesH when f is a unit.
QuasiInverse compute_empty_variety(const IntLaurentPoly& f, const QuasiInverseOptions& opts = {});

/// Certified bound on sum_{||n|| >= R} |f#_n|. R = 0 gives ||f#||_1.
double tail_mass(const QuasiInverse& q, std::int64_t radius);

/// Experimental: samples h/f where |f| > eps on an N^d grid and smooths
/// the DFT with de la Vallee-Poussin weights (1 for |k_j| <= N/4, falling
/// linearly to 0 at N/2). The residual is reported, the tail is not
/// certified. Throws DividesH if f | h and GridZero if more than 1% of the
/// grid has |f| <= eps.
QuasiInverse attach_user_h(const IntLaurentPoly& f, const IntLaurentPoly& h, std::size_t n,
                           double eps = 1e-9);

/// Largest radius with a stored coefficient, plus one (0 if none).
std::int64_t stored_radius(const QuasiInverse& q);

}  // namespace atoral
