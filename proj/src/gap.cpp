#include "atoral/gap.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

#include "atoral/parallel.hpp"

namespace atoral {

namespace {

// Bound on the floating error of one coefficient of poly * a, where a has
// the given stored sup norm.
double product_slack(const IntLaurentPoly& poly, double a_sup) {
  return 4.0 * DBL_EPSILON * static_cast<double>(poly.size() + 1) * poly.l1_norm().get_d() * a_sup;
}

bool within(const LatticePoint& n, const SupportSet& s, std::int64_t radius) {
  for (const auto& m : s)
    if (distance(n, m) <= radius) return true;
  return false;
}

void check_h_bound(const mpz_class& h_bound) {
  if (h_bound < 1) throw Error("H must be at least 1");
}

ProofTrace trace_with_radius(const IntLaurentPoly& f, const QuasiInverse& q, const IntLaurentPoly& p,
                             const IntLaurentPoly& qpoly, const mpz_class& h_bound, std::int64_t radius) {
  ProofTrace t;
  t.radius = radius;
  t.gap = 3 * radius;
  const double f_l1 = f.l1_norm().get_d();
  t.tail_term = 2.0 * h_bound.get_d() * f_l1 * tail_mass(q, radius);
  t.approximation_threshold = 1.0 / (2.0 * f_l1);

  const RealSummableArray& a = q.fsharp;
  const double tb = a.tail_bound(), a_sup = a.stored_sup();
  const IntLaurentPoly r = p + qpoly;
  const SupportSet s = p.support(), u_set = r.support();

  // (i) r f# is an integer polynomial supported in B_R(S u T).
  const RealSummableArray v = mul(r, a);
  double off = 0.0;
  for (const auto& [n, c] : v)
    if (!within(n, u_set, radius)) off = std::max(off, std::abs(c));
  t.off_support_max = off + r.sup_norm().get_d() * tb + product_slack(r, a_sup);

  // (ii) u = restriction of r f# to B_R(S), rounded.
  RealSummableArray near_s(f.dim());
  for (const auto& [n, c] : v)
    if (within(n, s, radius)) near_s.add_term(n, c);
  t.u = IntLaurentPoly(f.dim());
  try {
    t.u = round_to_int(near_s);
  } catch (const AmbiguousRounding& e) {
    t.rounding_failure = e.what();
  }
  const RealSummableArray pa = mul(p, a);
  double worst = 0.0;
  for (const auto& [n, c] : pa) worst = std::max(worst, std::abs(t.u.coefficient(n).get_d() - c));
  for (const auto& [n, c] : t.u)
    if (pa.coefficient(n) == 0.0) worst = std::max(worst, std::abs(c.get_d()));
  t.approximation_error = worst + p.sup_norm().get_d() * tb + product_slack(p, a_sup);

  // (iii) the keystone identity, exactly.
  t.identity_exact = t.u * f == p * q.h;
  return t;
}

}  // namespace

std::int64_t gap_radius(const QuasiInverse& q, const mpz_class& h_bound) {
  check_h_bound(h_bound);
  const mpq_class threshold(mpz_class(1), 2 * h_bound * q.f.l1_norm());
  const auto limit = static_cast<std::int64_t>(q.tail_table.size());
  for (std::int64_t r = 0; r <= limit; ++r)
    if (mpq_class(tail_mass(q, r)) < threshold) return r;
  throw TailTooFat("the certified tail of f# never falls below 1/(2 H ||f||_1)");
}

std::int64_t gap_constant(const QuasiInverse& q, const mpz_class& h_bound) { return 3 * gap_radius(q, h_bound); }

std::vector<SupportSet> cluster_support(const IntLaurentPoly& r, std::int64_t m) {
  if (r.is_zero()) throw ZeroPolynomial("clustering the support of the zero polynomial");
  if (m < 1) throw Error("cluster separation must be at least 1");
  const SupportSet supp = r.support();
  const std::vector<LatticePoint> pts(supp.begin(), supp.end());
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (distance(pts[i], pts[j]) < m) parent[find(i)] = find(j);

  std::vector<SupportSet> clusters;
  std::vector<std::ptrdiff_t> slot(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(clusters.size());
      clusters.emplace_back(r.dim());
    }
    clusters[static_cast<std::size_t>(slot[root])].insert(pts[i]);
  }
  return clusters;
}

void check_quasi_inverse(const IntLaurentPoly& f, const QuasiInverse& q) {
  if (!(q.f == f)) throw QuasiInverseRejected("quasi-inverse belongs to a different polynomial");
  if (!(q.residual < 0.5)) throw QuasiInverseRejected("quasi-inverse residual is not below 1/2");
  if (!q.tail_certified && !q.experimental)
    throw QuasiInverseRejected("quasi-inverse tail is not certified");
}

ProofTrace proof_trace(const IntLaurentPoly& f, const QuasiInverse& q, const IntLaurentPoly& p,
                       const IntLaurentPoly& qpoly, const mpz_class& h_bound) {
  check_quasi_inverse(f, q);
  check_same_dim(f.dim(), p.dim());
  check_same_dim(f.dim(), qpoly.dim());
  check_h_bound(h_bound);
  if (p.sup_norm() > h_bound || qpoly.sup_norm() > h_bound)
    throw HTooSmall("a coefficient exceeds H in absolute value");
  if (!divides(f, p + qpoly)) throw NotDivisible("f does not divide p + q");
  const std::int64_t radius = gap_radius(q, h_bound);
  if (!p.is_zero() && !qpoly.is_zero() && dist(p.support(), qpoly.support()) < 3 * radius)
    throw Error("supports of p and q are closer than the gap constant");
  return trace_with_radius(f, q, p, qpoly, h_bound, radius);
}

bool GapCertificate::all_divisible() const {
  return std::all_of(clusters.begin(), clusters.end(),
                     [](const ClusterReport& c) { return c.status == Divisibility::kDivides; });
}

GapCertificate split_and_verify(const IntLaurentPoly& f, const QuasiInverse& q, const IntLaurentPoly& r,
                                const SplitOptions& opts) {
  check_quasi_inverse(f, q);
  check_same_dim(f.dim(), r.dim());
  if (r.is_zero()) throw ZeroPolynomial("nothing to split");

  GapCertificate cert;
  cert.f = f;
  cert.r = r;
  cert.h_bound = opts.h_bound.value_or(r.sup_norm());
  check_h_bound(cert.h_bound);
  if (r.sup_norm() > cert.h_bound) throw HTooSmall("||r||_inf exceeds H");
  if (!divides(f, r)) throw NotDivisible("f does not divide r");

  cert.radius = gap_radius(q, cert.h_bound);
  cert.computed_gap = 3 * cert.radius;
  cert.gap = opts.gap.value_or(cert.computed_gap);
  if (cert.gap < cert.computed_gap) throw Error("gap override is smaller than the computed gap constant");
  cert.tail_term = 2.0 * cert.h_bound.get_d() * f.l1_norm().get_d() * tail_mass(q, cert.radius);
  cert.experimental_quasi_inverse = q.experimental;
  cert.irreducible_asserted = opts.irreducible_asserted;

  const auto clusters = cluster_support(r, cert.gap);
  cert.clusters.resize(clusters.size());
  parallel_for(clusters.size(), opts.threads, [&](std::size_t i) {
    ClusterReport& rep = cert.clusters[i];
    rep.cluster = clusters[i];
    rep.piece = r.restricted(clusters[i]);
    const DivisibilityResult d = divides(f, rep.piece);
    rep.status = d.status;
    rep.quotient = d.quotient;
    if (opts.with_traces)
      rep.trace = trace_with_radius(f, q, rep.piece, r - rep.piece, cert.h_bound, cert.radius);
  });

  for (std::size_t i = 0; i < cert.clusters.size(); ++i) {
    const ClusterReport& rep = cert.clusters[i];
    const std::string tag = "cluster " + std::to_string(i) + ": ";
    if (rep.status != Divisibility::kDivides)
      cert.anomalies.push_back(tag + "f does not divide the piece (" + to_string(rep.status) + ")");
    if (rep.trace && !rep.trace->passed()) cert.anomalies.push_back(tag + "a proof inequality failed");
  }
  return cert;
}

}  // namespace atoral
