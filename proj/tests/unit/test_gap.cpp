#include <cmath>
#include <random>

#include "atoral/gap.hpp"
#include "atoral/poly_json.hpp"
#include "atoral/serialize.hpp"
#include "doctest.h"
#include "support/gap_instances.hpp"

using namespace atoral;

namespace {

const QuasiInverse& qinv(const char* s) {
  static std::map<std::string, QuasiInverse> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, compute_empty_variety(parse_polynomial(s))).first;
  return it->second;
}

/// Least R with 2^-R < 1 / (6H), the closed-form tail of 1/(x-2).
std::int64_t geometric_radius(long h) {
  std::int64_t r = 0;
  while (std::ldexp(1.0, static_cast<int>(-r)) * 6.0 * static_cast<double>(h) >= 1.0) ++r;
  return r;
}

}  // namespace

TEST_SUITE("gap-engine") {
  TEST_CASE("gap constants for x-2 against the geometric tail") {
    const auto& q = qinv("x-2");
    CHECK(gap_radius(q, 1) == 3);
    CHECK(gap_constant(q, 1) == 9);
    CHECK(gap_radius(q, 8) == 6);
    CHECK(gap_constant(q, 8) == 18);
    for (long h = 1; h <= 200; ++h) CHECK(gap_radius(q, h) == geometric_radius(h));
  }

  TEST_CASE("gap radius rejects bad input") {
    const auto& q = qinv("x-2");
    CHECK_THROWS_AS(gap_radius(q, 0), Error);
    mpz_class huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 40);
    CHECK_THROWS_AS(gap_radius(q, huge), TailTooFat);
  }

  TEST_CASE("clustering") {
    const auto r = parse_polynomial("1+x+x^5+x^20+x^22");
    const auto c = cluster_support(r, 4);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == SupportSet(1, {{0}, {1}}));
    CHECK(c[1] == SupportSet(1, {{5}}));
    CHECK(c[2] == SupportSet(1, {{20}, {22}}));
    CHECK(cluster_support(r, 100).size() == 1);
    CHECK_THROWS_AS(cluster_support(IntLaurentPoly(1), 3), ZeroPolynomial);
  }

  TEST_CASE("quasi-inverse admission") {
    const auto& q = qinv("x-2");
    CHECK_NOTHROW(check_quasi_inverse(parse_polynomial("x-2"), q));
    CHECK_THROWS_AS(check_quasi_inverse(parse_polynomial("x-3"), q), QuasiInverseRejected);
    auto bad = q;
    bad.residual = 0.75;
    CHECK_THROWS_AS(check_quasi_inverse(q.f, bad), QuasiInverseRejected);
    auto uncertified = q;
    uncertified.tail_certified = false;
    CHECK_THROWS_AS(check_quasi_inverse(q.f, uncertified), QuasiInverseRejected);
  }

  TEST_CASE("round trip for x-2 with a multiple at distance 20") {
    const auto f = parse_polynomial("x-2");
    const auto& q = qinv("x-2");
    const auto p = f;
    const auto s = translate(f, LatticePoint{20});
    const auto t = proof_trace(f, q, p, s, 2);
    CHECK(t.passed());
    CHECK(t.identity_exact);
    CHECK(t.u == parse_polynomial("1"));
    CHECK(t.off_support_margin() > 0);
    CHECK(t.approximation_margin() > 0);
    CHECK(t.tail_term < 1);

    SplitOptions o;
    o.h_bound = 2;
    const auto cert = split_and_verify(f, q, p + s, o);
    CHECK(cert.gap == 12);
    REQUIRE(cert.clusters.size() == 2);
    CHECK(cert.clusters[0].quotient == parse_polynomial("1"));
    CHECK(cert.clusters[1].quotient == parse_polynomial("x^20"));
    CHECK(cert.all_divisible());
    CHECK(cert.anomalies.empty());
  }

  TEST_CASE("trace preconditions") {
    const auto f = parse_polynomial("x-2");
    const auto& q = qinv("x-2");
    CHECK_THROWS_AS(proof_trace(f, q, f, translate(f, LatticePoint{20}), 1), HTooSmall);
    CHECK_THROWS_AS(proof_trace(f, q, f, parse_polynomial("x^30"), 2), NotDivisible);
    CHECK_THROWS_AS(proof_trace(f, q, f, translate(f, LatticePoint{3}), 2), Error);
    const auto z = proof_trace(f, q, IntLaurentPoly(1), translate(f, LatticePoint{20}), 2);
    CHECK(z.u.is_zero());
    CHECK(z.identity_exact);
    CHECK(z.passed());
  }

  TEST_CASE("non-divisible pieces are reported as anomalies") {
    CHECK_THROWS_AS(split_and_verify(parse_polynomial("x-2"), qinv("x-2"), parse_polynomial("x-2+x^40")),
                    NotDivisible);
    // A forged quasi-inverse for the toral 1-x with a tiny claimed tail: the
    // split of 1-x^10 yields pieces 1 and -x^10, neither divisible.
    QuasiInverse forged;
    forged.f = parse_polynomial("1-x");
    forged.h = parse_polynomial("1");
    forged.fsharp = RealSummableArray(1);
    forged.tail_table = {1.0, 0.0};
    forged.tail_certified = true;
    const auto cert = split_and_verify(forged.f, forged, parse_polynomial("1-x^10"));
    CHECK_FALSE(cert.all_divisible());
    CHECK_FALSE(cert.anomalies.empty());
  }

  TEST_CASE("gap override below the computed gap is refused") {
    const auto f = parse_polynomial("x-2");
    SplitOptions o;
    o.gap = 2;
    CHECK_THROWS_AS(split_and_verify(f, qinv("x-2"), f, o), Error);
  }

  TEST_CASE("3+x+y with two far multiples") {
    const auto f = parse_polynomial("3+x+y");
    const auto& q = qinv("3+x+y");
    const auto r = parse_polynomial("1+x-y") * f + translate(parse_polynomial("2-x*y") * f, LatticePoint{40, 0});
    const auto cert = split_and_verify(f, q, r);
    CHECK(cert.h_bound == 6);
    CHECK(cert.radius == 7);
    CHECK(cert.gap == 21);
    CHECK(cert.clusters.size() == 2);
    CHECK(cert.all_divisible());
    for (const auto& c : cert.clusters) {
      REQUIRE(c.trace);
      CHECK(c.trace->passed());
    }
    const auto j = json::parse(to_json(cert).dump());
    CHECK(j["M"] == 21);
    CHECK(j["all_divisible"] == true);
  }
}

TEST_SUITE("gap-engine-properties") {
  TEST_CASE("randomized round trips, monotone gaps, certificate audit") {
    std::mt19937_64 rng(31337);
    for (const char* s : {"x-2", "3+x+y"}) {
      const auto f = parse_polynomial(s);
      const auto& q = qinv(s);
      for (int i = 0; i < 40; ++i) {
        const auto inst = gap_instances::make(rng, f, q);
        SplitOptions o;
        o.h_bound = inst.h_bound;
        const auto cert = split_and_verify(f, q, inst.r, o);
        INFO(s, " ", to_string(inst.r));
        CHECK(cert.gap == inst.gap);
        CHECK(cert.anomalies.empty());
        CHECK(cert.all_divisible());

        IntLaurentPoly sum(f.dim());
        for (const auto& c : cert.clusters) {
          sum += c.piece;
          CHECK(c.piece.support() == c.cluster);
          REQUIRE(c.trace);
          CHECK(c.trace->passed());
          CHECK(c.trace->identity_exact);
        }
        CHECK(sum == inst.r);
        for (std::size_t a = 0; a < cert.clusters.size(); ++a)
          for (std::size_t b = a + 1; b < cert.clusters.size(); ++b)
            CHECK(dist(cert.clusters[a].cluster, cert.clusters[b].cluster) >= cert.gap);

        o.gap = inst.gap + static_cast<std::int64_t>(rng() % 50);
        const auto coarse = split_and_verify(f, q, inst.r, o);
        CHECK(coarse.all_divisible());
        CHECK(coarse.clusters.size() <= cert.clusters.size());
      }
    }
  }

  TEST_CASE("f = 2+x+y^2") {
    const auto f = parse_polynomial("2+x+y^2");
    // |2+x+y^2| vanishes at x = y^2 = -1, so no certificate exists.
    CHECK_THROWS_AS(compute_empty_variety(f), NoCertificate);
  }
}
