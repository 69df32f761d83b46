#include "atoral/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "atoral/parallel.hpp"

namespace atoral {

const char* const kScopeStatement =
    "finite check: refutes or supports lacunary independence for the given data and sampled "
    "configurations only; independence for all finite subsets is not established";

namespace {

std::uint64_t checked_product(const std::vector<std::size_t>& sizes) {
  std::uint64_t total = 1;
  for (auto s : sizes) {
    if (s == 0) throw Error("empty family");
    if (total > kMaxCases / s) throw BlowUpGuard("enumeration exceeds the limit of 10^6 cases");
    total *= s;
  }
  return total;
}

// Mixed-radix digits of `index` (first family varies slowest).
std::vector<std::size_t> selection_of(std::uint64_t index, const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> sel(sizes.size());
  for (std::size_t j = sizes.size(); j-- > 0;) {
    sel[j] = static_cast<std::size_t>(index % sizes[j]);
    index /= sizes[j];
  }
  return sel;
}

IntLaurentPoly selection_sum(const std::vector<std::vector<IntLaurentPoly>>& families,
                             const std::vector<std::size_t>& sel, std::size_t dim) {
  IntLaurentPoly s(dim);
  for (std::size_t j = 0; j < sel.size(); ++j) s += families[j][sel[j]];
  return s;
}

std::vector<std::size_t> sizes_of(const std::vector<std::vector<IntLaurentPoly>>& families) {
  std::vector<std::size_t> sizes;
  for (const auto& fam : families) sizes.push_back(fam.size());
  return sizes;
}

void check_family_dims(const IntLaurentPoly& f, const std::vector<std::vector<IntLaurentPoly>>& families) {
  for (const auto& fam : families)
    for (const auto& p : fam) check_same_dim(f.dim(), p.dim());
}

bool in_ideal(const IntLaurentPoly& f, const IntLaurentPoly& p) {
  return divides(f, p).status == Divisibility::kDivides;
}

}  // namespace

SpacedConfiguration make_spaced_configuration(std::vector<LatticePoint> points, std::int64_t spacing) {
  if (points.empty()) throw EmptySet("configuration without points");
  if (spacing < 1) throw Error("spacing must be at least 1");
  SpacedConfiguration cfg;
  cfg.dim = points.front().dim();
  for (std::size_t i = 0; i < points.size(); ++i) {
    check_same_dim(cfg.dim, points[i].dim());
    for (std::size_t j = 0; j < i; ++j)
      if (distance(points[i], points[j]) < spacing)
        throw Error("configuration points " + points[j].to_string() + " and " + points[i].to_string() +
                    " are closer than the spacing");
  }
  cfg.points = std::move(points);
  cfg.spacing = spacing;
  return cfg;
}

SpacedDivisibilityReport verify_spaced_divisibility(const IntLaurentPoly& f,
                                                    const std::vector<IntLaurentPoly>& family,
                                                    const SpacedConfiguration& cfg, std::size_t threads) {
  if (f.is_zero()) throw ZeroPolynomial("divisibility by the zero polynomial");
  if (family.empty()) throw Error("empty family");
  check_same_dim(f.dim(), cfg.dim);
  std::vector<std::vector<IntLaurentPoly>> placed;
  for (const auto& n : cfg.points) {
    auto& row = placed.emplace_back();
    for (const auto& p : family) {
      check_same_dim(f.dim(), p.dim());
      row.push_back(p.translated(n));
    }
  }
  std::vector<bool> part_divisible;
  for (const auto& p : family) part_divisible.push_back(in_ideal(f, p));

  const auto sizes = sizes_of(placed);
  SpacedDivisibilityReport rep;
  rep.selections = checked_product(sizes);
  // bit 0: f divides the sum; bit 1: some part is not divisible.
  std::vector<std::uint8_t> flags(rep.selections, 0);
  parallel_for(rep.selections, threads, [&](std::size_t i) {
    const auto sel = selection_of(i, sizes);
    std::uint8_t fl = in_ideal(f, selection_sum(placed, sel, f.dim())) ? 1 : 0;
    for (auto s : sel)
      if (!part_divisible[s]) fl |= 2;
    flags[i] = fl;
  });
  for (std::uint64_t i = 0; i < rep.selections; ++i) {
    if (flags[i] & 1) ++rep.divisible_sums;
    if (flags[i] == 3) {
      const auto sel = selection_of(i, sizes);
      rep.violations.push_back({sel, selection_sum(placed, sel, f.dim())});
    }
  }
  return rep;
}

GapSearchReport empirical_gap_search(const IntLaurentPoly& f, const std::vector<IntLaurentPoly>& family,
                                     const GapSearchOptions& opts) {
  if (opts.max_spacing < 1) throw Error("maximal spacing must be at least 1");
  if (opts.points < 2) throw Error("configurations need at least two points");
  const std::size_t d = f.dim();
  check_dim(d);
  std::mt19937_64 rng(opts.seed);

  GapSearchReport rep;
  std::int64_t worst = 0;
  for (std::int64_t m = 1; m <= opts.max_spacing; ++m) {
    bool found = false;
    for (std::size_t trial = 0; trial < opts.trials; ++trial) {
      std::vector<LatticePoint> pts{LatticePoint(d)};
      // A second point at distance exactly m.
      LatticePoint second(d);
      const auto axis = std::uniform_int_distribution<std::size_t>(0, d - 1)(rng);
      std::uniform_int_distribution<std::int64_t> within(-m, m);
      for (std::size_t j = 0; j < d; ++j) second[j] = j == axis ? (rng() & 1 ? m : -m) : within(rng);
      pts.push_back(second);
      const std::int64_t box = 2 * m * static_cast<std::int64_t>(opts.points);
      std::uniform_int_distribution<std::int64_t> coord(-box, box);
      for (int attempt = 0; attempt < 1000 && pts.size() < opts.points; ++attempt) {
        LatticePoint c(d);
        for (std::size_t j = 0; j < d; ++j) c[j] = coord(rng);
        if (std::all_of(pts.begin(), pts.end(), [&](const LatticePoint& p) { return distance(p, c) >= m; }))
          pts.push_back(c);
      }
      const SpacedConfiguration cfg = make_spaced_configuration(std::move(pts), m);
      ++rep.configurations;
      const auto check = verify_spaced_divisibility(f, family, cfg, opts.threads);
      if (!check.violations.empty() && !found) {
        found = true;
        rep.findings.push_back({m, cfg, check.violations.front()});
      }
    }
    if (found) worst = m;
  }
  if (worst < opts.max_spacing) rep.empirical_gap = worst + 1;
  return rep;
}

IndependenceReport independence_check(const IntLaurentPoly& f,
                                      const std::vector<std::vector<IntLaurentPoly>>& families) {
  if (f.is_zero()) throw ZeroPolynomial("quotient by the zero polynomial");
  check_family_dims(f, families);
  const auto sizes = sizes_of(families);
  IndependenceReport rep;
  rep.expected = checked_product(sizes);

  // Labels of all elements at one common shift, so that the label of a sum
  // is the sum of the labels.
  std::vector<std::vector<CosetRep>> labels;
  LatticePoint shift(f.dim());
  for (const auto& fam : families) {
    auto& row = labels.emplace_back();
    for (const auto& p : fam) {
      row.push_back(normal_form(p, f));
      for (std::size_t j = 0; j < f.dim(); ++j) shift[j] = std::max(shift[j], row.back().shift[j]);
    }
  }
  for (auto& row : labels)
    for (auto& c : row) c = lift(c, shift);

  // Q-label -> selections representing distinct classes over Z.
  std::map<std::string, std::vector<std::uint64_t>> groups;
  for (std::uint64_t i = 0; i < rep.expected; ++i) {
    const auto sel = selection_of(i, sizes);
    RatLaurentPoly label(f.dim());
    for (std::size_t j = 0; j < sel.size(); ++j) label += labels[j][sel[j]].rep;
    auto& reps = groups[to_string(label)];
    bool merged = false;
    if (!reps.empty()) {
      const IntLaurentPoly s = selection_sum(families, sel, f.dim());
      for (auto other : reps) {
        const auto osel = selection_of(other, sizes);
        if (in_ideal(f, s - selection_sum(families, osel, f.dim()))) {
          merged = true;
          if (!rep.witness) rep.witness = std::make_pair(osel, sel);
          break;
        }
      }
      if (!merged) ++rep.rational_only_collisions;
    }
    if (!merged) {
      reps.push_back(i);
      ++rep.distinct_sum_count;
    }
  }
  rep.independent = rep.distinct_sum_count == rep.expected;
  return rep;
}

std::uint64_t ball_size(std::size_t dim, std::int64_t radius) { return ball_points(dim, radius).size(); }

std::uint64_t sublattice_ball_size(std::size_t dim, std::int64_t radius, std::int64_t spacing) {
  return sublattice_ball_points(dim, radius, spacing).size();
}

SumsetReport sumset_growth(const IntLaurentPoly& f, const std::vector<IntLaurentPoly>& two_set,
                           std::int64_t radius, std::int64_t spacing) {
  if (two_set.size() != 2) throw Error("sumset growth needs a two-element set");
  if (radius < 0 || spacing < 1) throw Error("need R >= 0 and M >= 1");
  const auto centers = sublattice_ball_points(f.dim(), radius, spacing);
  if (centers.size() >= 64 || (std::uint64_t{1} << centers.size()) > kMaxCases)
    throw BlowUpGuard("sumset enumeration exceeds the limit of 10^6 cases");

  std::vector<std::vector<IntLaurentPoly>> families;
  for (const auto& n : centers) families.push_back({two_set[0].translated(n), two_set[1].translated(n)});

  SumsetReport rep;
  rep.ball = ball_size(f.dim(), radius);
  rep.sublattice_ball = centers.size();
  rep.spacing_ball = ball_size(f.dim(), spacing);
  rep.sumset_size = independence_check(f, families).distinct_sum_count;
  rep.independent_size = std::uint64_t{1} << centers.size();
  rep.gamma = static_cast<double>(rep.sublattice_ball) * std::log(2.0) / static_cast<double>(rep.ball);
  rep.gamma_floor = std::log(2.0) / static_cast<double>(rep.spacing_ball);
  rep.counting_bound_holds = rep.sublattice_ball * rep.spacing_ball >= rep.ball;
  return rep;
}

int haar_pairing(const IntLaurentPoly& f, const IntLaurentPoly& p) { return in_ideal(f, p) ? 1 : 0; }

FactorizationReport haar_product_factorization(const IntLaurentPoly& f,
                                               const std::vector<std::vector<IntLaurentPoly>>& families,
                                               const std::vector<std::vector<mpq_class>>& weights) {
  if (f.is_zero()) throw ZeroPolynomial("quotient by the zero polynomial");
  check_family_dims(f, families);
  auto weight = [&](std::size_t j, std::size_t i) { return weights.empty() ? mpq_class(1) : weights[j][i]; };
  if (!weights.empty()) {
    if (weights.size() != families.size()) throw Error("one weight list per family required");
    for (std::size_t j = 0; j < families.size(); ++j)
      if (weights[j].size() != families[j].size()) throw Error("one weight per family element required");
  }
  const auto sizes = sizes_of(families);
  const std::uint64_t total = checked_product(sizes);

  FactorizationReport rep;
  rep.product = 1;
  for (std::size_t j = 0; j < families.size(); ++j) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < families[j].size(); ++i) s += weight(j, i) * haar_pairing(f, families[j][i]);
    rep.product *= s;
  }
  rep.joint = 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    const auto sel = selection_of(k, sizes);
    mpq_class w = 1;
    for (std::size_t j = 0; j < sel.size(); ++j) w *= weight(j, sel[j]);
    if (w != 0) rep.joint += w * haar_pairing(f, selection_sum(families, sel, f.dim()));
  }
  rep.factorizes = rep.joint == rep.product;
  return rep;
}

bool FrobeniusReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const FrobeniusEntry& e) {
    return e.identity_holds && e.sum_divisible_mod2 && !e.parts_divisible_mod2 &&
           (!e.integer_status || *e.integer_status != Divisibility::kDivides);
  });
}

FrobeniusReport frobenius_counterexample(unsigned n_max, bool check_integers) {
  if (n_max < 1 || n_max > 12) throw Error("n must lie in 1..12");
  const LatticePoint o{0, 0}, ex{1, 0}, ey{0, 1};
  const IntLaurentPoly base_int = IntLaurentPoly::monomial(o) + IntLaurentPoly::monomial(ex) +
                                  IntLaurentPoly::monomial(ey);
  const Gf2Poly base = Gf2Poly::from_integer(base_int);

  FrobeniusReport rep;
  for (unsigned n = 1; n <= n_max; ++n) {
    const std::int64_t big = std::int64_t{1} << n;
    const LatticePoint px{big, 0}, py{0, big};
    const IntLaurentPoly gapped_int =
        IntLaurentPoly::monomial(o) + IntLaurentPoly::monomial(px) + IntLaurentPoly::monomial(py);
    const Gf2Poly gapped = Gf2Poly::from_integer(gapped_int);

    FrobeniusEntry e;
    e.n = n;
    e.identity_holds = pow(base, static_cast<std::uint64_t>(big)) == gapped;
    e.sum_divisible_mod2 = divide(gapped, base).divides;
    e.parts_divisible_mod2 = false;
    for (const auto& m : {o, px, py})
      if (divide(Gf2Poly::monomial(m), base).divides) e.parts_divisible_mod2 = true;
    if (check_integers) e.integer_status = divides(base_int, gapped_int).status;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace atoral
