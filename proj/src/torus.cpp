#include "atoral/torus.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <numeric>

#include "atoral/division.hpp"
#include "atoral/fourier.hpp"
#include "atoral/parallel.hpp"

namespace atoral {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_unit(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

double phase_of(const LatticePoint& e, const std::vector<double>& t) {
  double s = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) s += static_cast<double>(e[j]) * t[j];
  return reduce_unit(s);
}

struct ValueAndGradient {
  std::complex<double> value;
  std::vector<std::complex<double>> grad;
};

ValueAndGradient eval_with_gradient(const IntLaurentPoly& f, const std::vector<double>& t) {
  ValueAndGradient out{{0.0, 0.0}, std::vector<std::complex<double>>(t.size())};
  for (const auto& [e, c] : f) {
    const double ph = kTwoPi * phase_of(e, t);
    const std::complex<double> term = c.get_d() * std::complex<double>(std::cos(ph), std::sin(ph));
    out.value += term;
    for (std::size_t j = 0; j < t.size(); ++j)
      out.grad[j] += std::complex<double>(0.0, kTwoPi * static_cast<double>(e[j])) * term;
  }
  return out;
}

// Levenberg-Marquardt on F(t) = (Re f, Im f) with the minimal-norm step
// delta = -J^T (J J^T + lambda I)^{-1} F, which suits the underdetermined
// case d > 2 as well.
std::optional<TorusPoint> refine_zero(const IntLaurentPoly& f, std::vector<double> t, double tol) {
  constexpr int kMaxIterations = 200;
  auto cur = eval_with_gradient(f, t);
  double r = std::abs(cur.value);
  double lambda = 1e-6;
  const double stop = tol * 1e-3;
  for (int it = 0; it < kMaxIterations && r > stop; ++it) {
    double a = 0, b = 0, d = 0;  // J J^T = [[a, b], [b, d]]
    for (const auto& g : cur.grad) {
      a += g.real() * g.real();
      b += g.real() * g.imag();
      d += g.imag() * g.imag();
    }
    const double scale = std::max(a + d, 1e-300);
    const double aa = a + lambda * scale, dd = d + lambda * scale;
    const double det = aa * dd - b * b;
    if (!(det > 0)) break;
    const double fr = cur.value.real(), fi = cur.value.imag();
    const double y0 = (dd * fr - b * fi) / det, y1 = (aa * fi - b * fr) / det;
    std::vector<double> trial(t.size());
    for (std::size_t j = 0; j < t.size(); ++j)
      trial[j] = t[j] - (cur.grad[j].real() * y0 + cur.grad[j].imag() * y1);
    auto next = eval_with_gradient(f, trial);
    const double rn = std::abs(next.value);
    if (rn < r) {
      t = std::move(trial);
      cur = std::move(next);
      r = rn;
      lambda = std::max(lambda * 0.25, 1e-15);
    } else {
      lambda *= 8.0;
      if (lambda > 1e8) break;
    }
  }
  if (r < tol) return TorusPoint(std::move(t));
  return std::nullopt;
}

}  // namespace

TorusPoint::TorusPoint(std::vector<double> coords) : t(std::move(coords)) {
  for (auto& x : t) x = reduce_unit(x);
}

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  check_same_dim(a.dim(), b.dim());
  double s = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    double d = std::abs(a.t[j] - b.t[j]);
    d = std::min(d, 1.0 - d);
    s += d * d;
  }
  return std::sqrt(s);
}

std::complex<double> eval_on_torus(const IntLaurentPoly& f, const TorusPoint& t) {
  check_same_dim(f.dim(), t.dim());
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [e, c] : f) {
    const double ph = kTwoPi * phase_of(e, t.t);
    acc += c.get_d() * std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return acc;
}

double lipschitz_constant(const IntLaurentPoly& f) {
  double s = 0.0;
  for (const auto& [e, c] : f) s += static_cast<double>(e.l1_norm()) * std::abs(c.get_d());
  return kTwoPi * s;
}

TorusCertificate empty_variety_certificate(const IntLaurentPoly& f, std::size_t n) {
  check_dim(f.dim());
  if (n < 2 || !is_power_of_two(n)) throw Error("certificate grid size must be a power of two >= 2");
  const TorusGrid grid = evaluate_on_grid(f, n);

  TorusCertificate cert;
  cert.dim = f.dim();
  cert.grid_size = n;
  cert.lipschitz = lipschitz_constant(f);
  cert.cell_radius = std::sqrt(static_cast<double>(cert.dim)) / (2.0 * static_cast<double>(n));
  // Generous bound on the FFT's floating error, proportional to ||f||_1.
  cert.rounding_allowance = DBL_EPSILON * f.l1_norm().get_d() *
                            (8.0 + 4.0 * std::log2(static_cast<double>(grid.total())));
  cert.grid_min = INFINITY;
  for (const auto& v : grid.values) cert.grid_min = std::min(cert.grid_min, std::abs(v));

  const double slack = cert.lipschitz * cert.cell_radius + cert.rounding_allowance;
  const double lower = cert.grid_min - slack;
  cert.empty_proven = lower > 0.0;
  cert.certified_min = std::max(0.0, lower);
  if (!cert.empty_proven) {
    const double step = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < grid.total(); ++i) {
      if (std::abs(grid.values[i]) > slack) continue;
      const auto k = grid.unflatten(i);
      std::vector<double> t(k.size());
      for (std::size_t j = 0; j < k.size(); ++j) t[j] = static_cast<double>(k[j]) * step;
      cert.candidate_cells.emplace_back(std::move(t));
    }
  }
  return cert;
}

std::vector<TorusPoint> unitary_variety_sample(const IntLaurentPoly& f, std::size_t n, double tol,
                                               std::size_t threads) {
  if (!(tol > 0.0)) throw Error("sampling tolerance must be positive");
  const TorusCertificate cert = empty_variety_certificate(f, n);
  const auto& cells = cert.candidate_cells;
  std::vector<std::optional<TorusPoint>> refined(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) { refined[i] = refine_zero(f, cells[i].t, tol); });

  const double spacing = 1.0 / (2.0 * static_cast<double>(n));
  std::vector<TorusPoint> kept;
  for (auto& p : refined) {
    if (!p) continue;
    const bool near = std::any_of(kept.begin(), kept.end(),
                                  [&](const TorusPoint& q) { return torus_distance(*p, q) < spacing; });
    if (!near) kept.push_back(std::move(*p));
  }
  return kept;
}

std::vector<std::vector<TorusPoint>> cluster_torus_points(const std::vector<TorusPoint>& pts, double radius) {
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (torus_distance(pts[i], pts[j]) < radius) parent[find(i)] = find(j);

  std::vector<std::vector<TorusPoint>> clusters;
  std::vector<std::ptrdiff_t> slot(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(clusters.size());
      clusters.emplace_back();
    }
    clusters[static_cast<std::size_t>(slot[root])].push_back(pts[i]);
  }
  return clusters;
}

const char* to_string(Torality t) { return t == Torality::kToral ? "toral" : "atoral"; }

const char* to_string(AdjointHint h) {
  return h == AdjointHint::kInconclusive ? "inconclusive" : "atoral-if-irreducible";
}

D1Classification classify_d1(const IntLaurentPoly& f) {
  if (f.dim() != 1) throw DimensionMismatch("classify_d1 needs a univariate polynomial");
  if (f.is_zero()) throw ZeroPolynomial("classify_d1 of the zero polynomial");
  using namespace univariate;

  const Normalized nf = normalize(f);
  Poly dense(static_cast<std::size_t>(nf.poly.max_exponent()[0]) + 1, mpq_class(0));
  for (const auto& [e, c] : nf.poly) dense[static_cast<std::size_t>(e[0])] = c;

  D1Classification out;
  // Unit-circle roots of a real polynomial are shared with its reversal.
  Poly g = gcd(dense, reversed(dense));
  out.self_inversive_gcd = g;

  const Poly z_minus_one{mpq_class(-1), mpq_class(1)}, z_plus_one{mpq_class(1), mpq_class(1)};
  while (degree(g) > 0 && evaluate(g, 1) == 0) {
    out.root_at_one = true;
    g = divmod(g, z_minus_one).first;
  }
  while (degree(g) > 0 && evaluate(g, -1) == 0) {
    out.root_at_minus_one = true;
    g = divmod(g, z_plus_one).first;
  }
  // Without roots at +-1 a monic self-inversive factor is palindromic of
  // even degree, and its unit-circle roots z = e^{i theta} correspond to
  // roots u = 2 cos theta of P in (-2, 2).
  out.reduced = palindromic_reduction(g);
  out.roots_in_interval = degree(out.reduced) > 0 ? count_real_roots(out.reduced, -2, 2) : 0;
  const bool toral = out.root_at_one || out.root_at_minus_one || out.roots_in_interval > 0;
  out.verdict = toral ? Torality::kToral : Torality::kAtoral;
  return out;
}

AdjointComparison adjoint_atorality_hint(const IntLaurentPoly& f) {
  AdjointComparison out;
  if (f.is_zero()) {
    out.hint = AdjointHint::kInconclusive;
    return out;
  }
  // Normalized forms agree up to sign iff f* = +-x^n f for some n.
  const Normalized nf = normalize(f);
  const Normalized na = normalize(f.adjoint());
  int sign = 0;
  if (na.poly == nf.poly)
    sign = 1;
  else if (na.poly == -nf.poly)
    sign = -1;
  if (sign == 0) return out;
  out.hint = AdjointHint::kInconclusive;
  out.sign = sign;
  out.shift = nf.shift - na.shift;
  return out;
}

}  // namespace atoral
