#include "atoral/quasi_inverse.hpp"

#include <algorithm>
#include <cmath>

#include "atoral/division.hpp"
#include "atoral/fourier.hpp"
#include "atoral/torus.hpp"

namespace atoral {

namespace {

std::size_t grid_points(std::size_t n, std::size_t dim) {
  std::size_t total = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    if (total > kMaxGridPoints / n) return kMaxGridPoints + 1;
    total *= n;
  }
  return total;
}

// Smallest double >= x.
double round_up(const mpq_class& x) {
  double d = x.get_d();
  if (mpq_class(d) < x) d = std::nextafter(d, INFINITY);
  return d;
}

LatticePoint centered_point(const TorusGrid& g, std::size_t index) {
  const auto k = g.unflatten(index);
  LatticePoint p(g.dim);
  for (std::size_t j = 0; j < g.dim; ++j) p[j] = centered(k[j], g.n);
  return p;
}

// Coefficient of the centered index p in a table of size n, or 0 if p lies
// outside [-n/2, n/2)^d.
double table_lookup(const TorusGrid& g, const LatticePoint& p) {
  const auto half = static_cast<std::int64_t>(g.n / 2);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < g.dim; ++j) {
    if (p[j] < -half || p[j] >= half) return 0.0;
    const auto m = static_cast<std::int64_t>(g.n);
    idx = idx * g.n + static_cast<std::size_t>((p[j] + m) % m);
  }
  return g.values[idx].real();
}

RealSummableArray to_array(const TorusGrid& coeffs, double prune_below) {
  RealSummableArray a(coeffs.dim);
  for (std::size_t i = 0; i < coeffs.total(); ++i) {
    const double c = coeffs.values[i].real();
    if (std::abs(c) >= prune_below && c != 0.0) a.add_term(centered_point(coeffs, i), c);
  }
  return a;
}

struct ExactError {
  mpq_class sup;
  mpq_class l1;
};

// e = a f - h with every coefficient of a taken as the exact rational value
// of its double.
ExactError exact_error(const RealSummableArray& a, const IntLaurentPoly& f, const IntLaurentPoly& h) {
  RatLaurentPoly e(f.dim());
  for (const auto& [k, ak] : a) {
    const mpq_class q(ak);
    for (const auto& [n, fn] : f) e.add_term(k + n, q * fn);
  }
  for (const auto& [n, hn] : h) e.add_term(n, mpq_class(-hn));
  return {e.sup_norm(), e.l1_norm()};
}

std::vector<double> build_tail_table(const RealSummableArray& a) {
  std::vector<long double> by_radius;
  for (const auto& [k, c] : a) {
    const auto r = static_cast<std::size_t>(k.sup_norm());
    if (by_radius.size() <= r) by_radius.resize(r + 1, 0.0L);
    by_radius[r] += std::abs(static_cast<long double>(c));
  }
  // Inflate slightly so floating summation cannot undercut the true sum.
  constexpr long double kInflate = 1.0L + 1e-12L;
  std::vector<double> table(by_radius.size() + 1, a.tail_bound());
  long double acc = 0.0L;
  for (std::size_t r = by_radius.size(); r-- > 0;) {
    acc += by_radius[r];
    table[r] = static_cast<double>(acc * kInflate) + a.tail_bound();
  }
  return table;
}

void check_h_outside_ideal(const IntLaurentPoly& f, const IntLaurentPoly& h) {
  if (divides(f, h).status == Divisibility::kDivides) throw DividesH("h lies in the ideal generated by f");
}

}  // namespace

std::size_t max_grid_size(std::size_t dim, std::size_t requested) {
  check_dim(dim);
  std::size_t cap = dim == 3 ? std::size_t{1} << 8 : std::size_t{1} << 14;
  if (requested != 0) cap = std::min(cap, requested);
  std::size_t n = 1;
  while (n * 2 <= cap && grid_points(n * 2, dim) <= kMaxGridPoints) n *= 2;
  return n;
}

QuasiInverse compute_empty_variety(const IntLaurentPoly& f, const QuasiInverseOptions& opts) {
  if (f.is_zero()) throw ZeroPolynomial("quasi-inverse of the zero polynomial");
  const IntLaurentPoly one = IntLaurentPoly::one(f.dim());
  check_h_outside_ideal(f, one);
  const std::size_t n_max = max_grid_size(f.dim(), opts.max_grid);

  QuasiInverse q;
  q.f = f;
  q.h = one;

  bool certified = false;
  for (std::size_t n0 = 64; n0 <= n_max; n0 *= 4) {
    const TorusCertificate cert = empty_variety_certificate(f, n0);
    if (cert.empty_proven) {
      certified = true;
      q.certified_min = cert.certified_min;
      break;
    }
  }
  if (!certified) throw NoCertificate("could not certify that the unitary variety is empty");

  std::optional<TorusGrid> previous;
  for (std::size_t n = std::max<std::size_t>(2, opts.start_grid); n <= n_max; n *= 2) {
    TorusGrid grid = evaluate_on_grid(f, n);
    for (auto& v : grid.values) v = 1.0 / v;
    TorusGrid coeffs = fourier_coefficients(std::move(grid));

    if (previous) {
      double diff = 0.0;
      for (std::size_t i = 0; i < coeffs.total(); ++i) {
        const LatticePoint p = centered_point(coeffs, i);
        diff = std::max(diff, std::abs(coeffs.values[i].real() - table_lookup(*previous, p)));
      }
      if (diff < opts.eps / 2) {
        RealSummableArray a = to_array(coeffs, opts.prune_below);
        const ExactError err = exact_error(a, f, one);
        if (err.l1 < 1 && err.sup.get_d() < opts.eps) {
          const mpq_class a_l1 = [&] {
            mpq_class s = 0;
            for (const auto& [k, c] : a) s += abs(mpq_class(c));
            return s;
          }();
          a.set_tail_bound(round_up(a_l1 * err.l1 / (1 - err.l1)));
          q.fsharp = std::move(a);
          q.residual_l1 = round_up(err.l1);
          q.residual = round_up(err.sup) + q.fsharp.tail_bound() * f.l1_norm().get_d();
          q.tail_table = build_tail_table(q.fsharp);
          q.grid_size = n;
          q.aliasing_estimate = diff;
          q.tail_certified = true;
          return q;
        }
      }
    }
    previous = std::move(coeffs);
  }
  throw NoConvergence("quasi-inverse coefficients did not stabilize within the maximal grid");
}

double tail_mass(const QuasiInverse& q, std::int64_t radius) {
  if (radius < 0) throw Error("tail radius must be nonnegative");
  const auto r = static_cast<std::size_t>(radius);
  return r < q.tail_table.size() ? q.tail_table[r] : q.fsharp.tail_bound();
}

std::int64_t stored_radius(const QuasiInverse& q) {
  std::int64_t r = -1;
  for (const auto& [k, c] : q.fsharp) r = std::max(r, k.sup_norm());
  return r + 1;
}

QuasiInverse attach_user_h(const IntLaurentPoly& f, const IntLaurentPoly& h, std::size_t n, double eps) {
  if (f.is_zero()) throw ZeroPolynomial("quasi-inverse of the zero polynomial");
  check_same_dim(f.dim(), h.dim());
  check_h_outside_ideal(f, h);
  if (!is_power_of_two(n) || n < 4 || grid_points(n, f.dim()) > kMaxGridPoints)
    throw Error("grid size must be a power of two >= 4 within the grid cap");

  TorusGrid grid = evaluate_on_grid(f, n);
  const TorusGrid hgrid = evaluate_on_grid(h, n);
  std::size_t small = 0;
  for (std::size_t i = 0; i < grid.total(); ++i) {
    if (std::abs(grid.values[i]) <= eps) {
      ++small;
      grid.values[i] = 0.0;
    } else {
      grid.values[i] = hgrid.values[i] / grid.values[i];
    }
  }
  if (small * 100 > grid.total()) throw GridZero("too many grid points with |f| <= eps");

  TorusGrid coeffs = fourier_coefficients(std::move(grid));
  const double quarter = static_cast<double>(n) / 4.0;
  for (std::size_t i = 0; i < coeffs.total(); ++i) {
    const LatticePoint p = centered_point(coeffs, i);
    double w = 1.0;
    for (std::size_t j = 0; j < p.dim(); ++j) {
      const double k = std::abs(static_cast<double>(p[j]));
      if (k > quarter) w *= std::max(0.0, 2.0 - k / quarter);
    }
    coeffs.values[i] *= w;
  }

  QuasiInverse q;
  q.f = f;
  q.h = h;
  q.fsharp = to_array(coeffs, 1e-16);
  const ExactError err = exact_error(q.fsharp, f, h);
  q.residual = round_up(err.sup);
  q.residual_l1 = round_up(err.l1);
  q.tail_table = build_tail_table(q.fsharp);
  q.grid_size = n;
  q.experimental = true;
  q.tail_certified = false;
  return q;
}

}  // namespace atoral
