#include <random>

#include "atoral/gap.hpp"
#include "atoral/gf2_poly.hpp"
#include "atoral/lacunary.hpp"
#include "atoral/poly_json.hpp"
#include "atoral/quasi_inverse.hpp"
#include "doctest.h"
#include "oracles/oracles.hpp"

using namespace atoral;

namespace {

IntLaurentPoly P(const char* s, std::size_t d = 1) { return parse_polynomial(s, d); }

/// Pairwise scan over all selections: counts distinct classes by exact
/// divisibility of differences.
std::uint64_t pairwise_class_count(const IntLaurentPoly& f, const std::vector<std::vector<IntLaurentPoly>>& fam) {
  std::vector<IntLaurentPoly> sums{IntLaurentPoly(f.dim())};
  for (const auto& e : fam) {
    std::vector<IntLaurentPoly> next;
    for (const auto& s : sums)
      for (const auto& p : e) next.push_back(s + p);
    sums = std::move(next);
  }
  std::vector<IntLaurentPoly> reps;
  for (const auto& s : sums) {
    bool seen = false;
    for (const auto& r : reps) seen = seen || static_cast<bool>(divides(f, s - r));
    if (!seen) reps.push_back(s);
  }
  return reps.size();
}

}  // namespace

TEST_SUITE("lacunary-mod") {
  TEST_CASE("gf2 arithmetic") {
    const auto f = Gf2Poly::from_integer(P("1+x+y", 2));
    CHECK(f * f == Gf2Poly::from_integer(P("1+x^2+y^2", 2)));
    CHECK(Gf2Poly::from_integer(P("3+2*x+5*y", 2)) == Gf2Poly::from_integer(P("1+y", 2)));
    auto g = f;
    g.toggle(LatticePoint{1, 0});
    CHECK(g == Gf2Poly::from_integer(P("1+y", 2)));
    CHECK(divide(Gf2Poly::from_integer(P("1+x^4+y^4", 2)), f).divides);
    CHECK_FALSE(divide(Gf2Poly::from_integer(P("1+x^4", 2)), f).divides);
    CHECK_THROWS_AS(divide(f, Gf2Poly(2)), ZeroPolynomial);
  }

  TEST_CASE("gf2 powers match multinomial parity") {
    const auto f = Gf2Poly::from_integer(P("1+x+y", 2));
    for (std::uint64_t n : {3u, 5u, 6u, 7u, 11u, 12u, 13u, 21u}) {
      Gf2Poly expected(2);
      for (const auto& [a, b] : oracle::trinomial_power_mod2(n))
        expected.toggle(LatticePoint{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
      CHECK(pow(f, n) == expected);
    }
  }

  TEST_CASE("frobenius entries") {
    const auto rep = frobenius_counterexample(3);
    REQUIRE(rep.entries.size() == 3);
    for (const auto& e : rep.entries) {
      CHECK(e.identity_holds);
      CHECK(e.sum_divisible_mod2);
      CHECK_FALSE(e.parts_divisible_mod2);
      REQUIRE(e.integer_status);
      CHECK(*e.integer_status == Divisibility::kNotDivisible);
    }
    CHECK(rep.all_hold());
    CHECK_THROWS_AS(frobenius_counterexample(0), Error);
    CHECK_THROWS_AS(frobenius_counterexample(13), Error);
  }

  TEST_CASE("spaced configurations") {
    const auto c = make_spaced_configuration({LatticePoint{0, 0}, LatticePoint{5, 1}}, 5);
    CHECK(c.dim == 2);
    CHECK_THROWS_AS(make_spaced_configuration({LatticePoint{0}, LatticePoint{2}}, 3), Error);
    CHECK_THROWS_AS(make_spaced_configuration({}, 3), Error);
  }

  TEST_CASE("verify spaced divisibility") {
    const auto f = P("x-2");
    const auto wide = make_spaced_configuration({LatticePoint{0}, LatticePoint{9}}, 9);
    const auto w = verify_spaced_divisibility(f, {P("2"), P("-1")}, wide);
    CHECK(w.selections == 4);
    CHECK(w.clean());
    CHECK(w.scope == kScopeStatement);
    // 2 - x = -(x - 2): the parts 2 and -1 at distance 1 sum to a multiple.
    const auto tight = make_spaced_configuration({LatticePoint{0}, LatticePoint{1}}, 1);
    const auto t = verify_spaced_divisibility(f, {P("2"), P("-1")}, tight);
    CHECK_FALSE(t.clean());
    CHECK(t.violations[0].sum == P("2-x"));
  }

  TEST_CASE("empirical gap search") {
    GapSearchOptions o;
    o.max_spacing = 6;
    o.trials = 5;
    const auto r = empirical_gap_search(P("x-2"), {P("2"), P("-1")}, o);
    REQUIRE(r.empirical_gap);
    CHECK(*r.empirical_gap == 2);
    CHECK(r.findings.size() == 1);
    CHECK(r.configurations == 30);
    o.max_spacing = 0;
    CHECK_THROWS_AS(empirical_gap_search(P("x-2"), {P("1")}, o), Error);
  }

  TEST_CASE("independence") {
    const auto f = P("x-2");
    const auto a = independence_check(f, {{P("0"), P("1")}, {P("0"), P("x")}});
    CHECK(a.expected == 4);
    CHECK(a.independent);
    CHECK_FALSE(a.witness);
    const auto b = independence_check(f, {{P("0"), P("1")}, {P("0"), P("1")}});
    CHECK(b.distinct_sum_count == 3);
    CHECK_FALSE(b.independent);
    CHECK(b.witness);
    const auto c = independence_check(P("2"), {{P("0"), P("1")}});
    CHECK(c.distinct_sum_count == 2);
    CHECK(c.rational_only_collisions == 1);
  }

  TEST_CASE("ball sizes") {
    for (std::size_t d = 1; d <= 2; ++d)
      for (std::int64_t r = 0; r <= 6; ++r)
        for (std::int64_t m = 1; m <= 4; ++m) {
          const auto [all, sub] = oracle::ball_scan(static_cast<int>(d), r, m);
          CHECK(ball_size(d, r) == all);
          CHECK(sublattice_ball_size(d, r, m) == sub);
        }
  }

  TEST_CASE("sumset growth") {
    const auto s = sumset_growth(P("x-2"), {P("0"), P("1")}, 4, 2);
    CHECK(s.sublattice_ball == 5);
    CHECK(s.sumset_size == 32);
    CHECK(s.independent_size == 32);
    CHECK(s.counting_bound_holds);
    CHECK_THROWS_AS(sumset_growth(P("x-2"), {P("0")}, 4, 2), Error);
  }

  TEST_CASE("haar pairing and factorization") {
    CHECK(haar_pairing(P("x-2"), P("x^2-4")) == 1);
    CHECK(haar_pairing(P("x-2"), P("x")) == 0);
    const auto good = haar_product_factorization(P("x-2"), {{P("0"), P("1")}, {P("0"), P("x^9")}});
    CHECK(good.factorizes);
    CHECK(good.joint == good.product);
    const auto bad = haar_product_factorization(P("x-2"), {{P("0"), P("2")}, {P("0"), P("-x")}});
    CHECK_FALSE(bad.factorizes);
    CHECK(bad.joint == 2);
    CHECK(bad.product == 1);
  }

  TEST_CASE("enumeration guard") {
    std::vector<std::vector<IntLaurentPoly>> fam(21, {P("0"), P("1")});
    CHECK_THROWS_AS(independence_check(P("x-2"), fam), BlowUpGuard);
  }
}

TEST_SUITE("lacunary-mod-properties") {
  TEST_CASE("independence is counting, rechecked pairwise") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 60; ++i) {
      const std::size_t d = 1 + i % 2;
      const auto f = oracle::random_poly(rng, d, 3, 1, 3);
      std::vector<std::vector<IntLaurentPoly>> fam(2);
      for (auto& e : fam)
        for (int k = 0; k < 3; ++k) e.push_back(oracle::random_poly(rng, d, 2, 2, 2));
      const auto rep = independence_check(f, fam);
      CHECK(rep.independent == (rep.distinct_sum_count == rep.expected));
      CHECK(rep.witness.has_value() == !rep.independent);
      CHECK(rep.distinct_sum_count == pairwise_class_count(f, fam));
    }
  }

  TEST_CASE("haar pairing agrees with divides") {
    std::mt19937_64 rng(500);
    int trivial = 0;
    for (int i = 0; i < 500; ++i) {
      const std::size_t d = 1 + i % 3;
      const auto f = oracle::random_poly(rng, d, 4, 2, 4);
      auto p = oracle::random_poly(rng, d, 4, 2, 4);
      if (i % 2) p = p * f;
      const int pairing = haar_pairing(f, p);
      CHECK(pairing == (divides(f, p) ? 1 : 0));
      trivial += pairing;
    }
    CHECK(trivial >= 250);
  }

  TEST_CASE("frobenius identity without the integer check") {
    const auto rep = frobenius_counterexample(12, false);
    REQUIRE(rep.entries.size() == 12);
    for (const auto& e : rep.entries) {
      CHECK(e.identity_holds);
      CHECK(e.sum_divisible_mod2);
      CHECK_FALSE(e.integer_status);
    }
  }

  TEST_CASE("configurations spaced at 3R never violate") {
    for (const char* s : {"x-2", "3+x+y"}) {
      const auto f = parse_polynomial(s);
      const auto q = compute_empty_variety(f);
      const std::vector<IntLaurentPoly> fam{IntLaurentPoly(f.dim()), IntLaurentPoly::one(f.dim()),
                                            IntLaurentPoly::constant(f.dim(), -2), f};
      mpz_class max_part = 0;
      for (const auto& p : fam) max_part = std::max(max_part, p.sup_norm());
      GapSearchOptions o;
      o.points = 3;
      const std::int64_t m = gap_constant(q, max_part * static_cast<long>(o.points));
      o.max_spacing = m;
      o.trials = 4;
      o.seed = 9;
      const auto rep = empirical_gap_search(f, fam, o);
      INFO(s);
      REQUIRE(rep.empirical_gap);
      CHECK(*rep.empirical_gap <= m);
      for (const auto& finding : rep.findings) CHECK(finding.spacing < m);
    }
  }
}
