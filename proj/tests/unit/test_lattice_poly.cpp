#include <random>

#include "atoral/lattice.hpp"
#include "atoral/laurent_poly.hpp"
#include "atoral/poly_json.hpp"
#include "atoral/summable_array.hpp"
#include "doctest.h"
#include "oracles/oracles.hpp"

using namespace atoral;

TEST_SUITE("lattice-poly") {
  TEST_CASE("lattice point norms and distance") {
    const LatticePoint a{3, -5, 1};
    CHECK(a.sup_norm() == 5);
    CHECK(a.l1_norm() == 9);
    CHECK(a.degree() == -1);
    CHECK(distance(a, LatticePoint{0, 0, 0}) == 5);
    CHECK((a + LatticePoint{1, 1, 1}) == LatticePoint{4, -4, 2});
    CHECK(a.scaled(-2) == LatticePoint{-6, 10, -2});
    CHECK_THROWS_AS(check_same_dim(2, 3), DimensionMismatch);
  }

  TEST_CASE("set distance") {
    const SupportSet s(2, {{0, 0}, {10, 0}});
    const SupportSet t(2, {{3, 4}, {20, 20}});
    CHECK(dist(s, t) == 4);
    CHECK(dist(t, s) == 4);
    CHECK(dist(s, s) == 0);
    CHECK(dist(LatticePoint{5, 0}, s) == 5);
    CHECK_THROWS_AS(dist(s, SupportSet(2)), EmptySet);
  }

  TEST_CASE("ball neighborhood equals union of translated balls") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-6, 6), k(1, 4);
    for (int trial = 0; trial < 20; ++trial)
      for (std::size_t d = 1; d <= 2; ++d)
        for (std::int64_t r = 0; r <= 5; ++r) {
          SupportSet s(d);
          const int n = k(rng);
          for (int i = 0; i < n; ++i) {
            LatticePoint p(d);
            for (std::size_t j = 0; j < d; ++j) p[j] = c(rng);
            s.insert(p);
          }
          SupportSet expected(d);
          for (const auto& p : s)
            for (const auto& b : ball_points(d, r)) expected.insert(p + b);
          CHECK(ball_neighborhood(s, r) == expected);
        }
  }

  TEST_CASE("ball point counts") {
    CHECK(ball_points(2, 3).size() == 49);
    CHECK(ball_points(3, 1).size() == 27);
    CHECK(sublattice_ball_points(1, 4, 2).size() == 5);
    CHECK(sublattice_ball_points(2, 4, 3).size() == 9);
  }

  TEST_CASE("polynomial basics") {
    const auto f = parse_polynomial("3+x+y+x^-1+y^-1");
    CHECK(f.dim() == 2);
    CHECK(f.size() == 5);
    CHECK(f.sup_norm() == 3);
    CHECK(f.l1_norm() == 7);
    CHECK(f.adjoint() == f);
    CHECK(f.min_exponent() == LatticePoint{-1, -1});
    CHECK(f.max_exponent() == LatticePoint{1, 1});
    auto g = f - f;
    CHECK(g.is_zero());
    CHECK(g.support().empty());
    CHECK_THROWS_AS(g.min_exponent(), ZeroPolynomial);
    CHECK(to_string(parse_polynomial("x-2")) == to_string(parse_polynomial("-2+x")));
  }

  TEST_CASE("no stored zeros after cancellation") {
    auto p = parse_polynomial("1+x");
    p.add_term(LatticePoint{1}, mpz_class(-1));
    CHECK(p.size() == 1);
    CHECK(p.coefficient(LatticePoint{1}) == 0);
  }

  TEST_CASE("product matches schoolbook oracle") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      const std::size_t d = 1 + i % 3;
      const auto a = oracle::random_poly(rng, d, 6, 4, 9);
      const auto b = oracle::random_poly(rng, d, 6, 4, 9);
      CHECK(oracle::terms_of(a * b) == oracle::schoolbook_mul(oracle::terms_of(a), oracle::terms_of(b)));
    }
  }

  TEST_CASE("translation, restriction, support geometry") {
    const auto f = parse_polynomial("2-x*y+5*y^3");
    CHECK(translate(f, LatticePoint{1, -1}) == f * parse_polynomial("x*y^-1"));
    const auto r = restrict_to(f, SupportSet(2, {{0, 0}, {0, 3}}));
    CHECK(r == parse_polynomial("2+5*y^3"));
    const auto g = support_geometry(f);
    CHECK(g.sup_norm == 5);
    CHECK(g.l1_norm == 8);
    CHECK(g.support == f.support());
  }

  TEST_CASE("large coefficients stay exact") {
    auto p = parse_polynomial("1+x");
    IntLaurentPoly q = IntLaurentPoly::one(1);
    for (int i = 0; i < 100; ++i) q *= p;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 100, 50);
    CHECK(q.coefficient(LatticePoint{50}) == b);
  }

  TEST_CASE("rational conversion") {
    RatLaurentPoly r(1);
    mpq_class two(4, 2);
    two.canonicalize();
    r.add_term(LatticePoint{0}, two);
    CHECK(is_integral(r));
    CHECK(to_integer(r) == parse_polynomial("2"));
    r.add_term(LatticePoint{1}, mpq_class(1, 3));
    CHECK_FALSE(is_integral(r));
    CHECK_THROWS_AS(to_integer(r), Error);
  }

  TEST_CASE("summable array arithmetic") {
    RealSummableArray v(1, 0.25);
    v.add_term(LatticePoint{0}, 0.5);
    v.add_term(LatticePoint{2}, -1.5);
    CHECK(v.stored_l1() == doctest::Approx(2.0));
    CHECK(v.l1_norm() == doctest::Approx(2.25));
    CHECK(v.sup_bound() == doctest::Approx(1.75));
    const auto w = mul(parse_polynomial("1+x"), v);
    CHECK(w.coefficient(LatticePoint{1}) == doctest::Approx(0.5));
    CHECK(w.coefficient(LatticePoint{3}) == doctest::Approx(-1.5));
    CHECK(w.tail_bound() == doctest::Approx(0.5));
    const auto p = v.pruned(1.0);
    CHECK(p.size() == 1);
    CHECK(p.tail_bound() == doctest::Approx(0.75));
    CHECK_THROWS_AS(RealSummableArray(1, -1.0), Error);
  }

  TEST_CASE("rounding") {
    RealSummableArray v(1);
    v.add_term(LatticePoint{0}, 2.9999999);
    v.add_term(LatticePoint{1}, 0.0000001);
    CHECK(round_to_int(v) == parse_polynomial("3"));
    v.add_term(LatticePoint{2}, 0.5);
    CHECK_THROWS_AS(round_to_int(v), AmbiguousRounding);
  }

  TEST_CASE("polynomial json round trip") {
    const auto f = parse_polynomial("123456789012345678901234567890*x^-3*y-7*y^2+1", 3);
    CHECK(f.dim() == 3);
    const auto j = to_json(f);
    CHECK(int_poly_from_json(j) == f);
    CHECK(int_poly_from_json(json::parse(j.dump())) == f);
    CHECK_THROWS_AS(int_poly_from_json(json::parse(R"({"d":1,"terms":[{"exp":[1,2],"coef":"1"}]})")), Error);
    CHECK_THROWS_AS(parse_polynomial("x+"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x+y", 1), Error);
  }

  TEST_CASE("real json keeps doubles bit exact") {
    RealSummableArray v(2, 1e-17);
    v.add_term(LatticePoint{0, 1}, 0.1);
    v.add_term(LatticePoint{-3, 2}, -1.0 / 3.0);
    CHECK(real_array_from_json(json::parse(to_json(v).dump())) == v);
  }
}

TEST_SUITE("lattice-poly-properties") {
  TEST_CASE("ring laws, adjoint, norms, support") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
      const std::size_t d = 1 + i % 3;
      const auto a = oracle::random_poly(rng, d, 6, 3, 5);
      const auto b = oracle::random_poly(rng, d, 6, 3, 5);
      const auto c = oracle::random_poly(rng, d, 6, 3, 5);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * IntLaurentPoly::one(d) == a);
      CHECK((a * b).adjoint() == a.adjoint() * b.adjoint());
      CHECK(a.adjoint().adjoint() == a);
      CHECK((a + b).adjoint() == a.adjoint() + b.adjoint());
      CHECK((a * b).l1_norm() <= a.l1_norm() * b.l1_norm());
      SupportSet sum(d);
      for (const auto& p : a.support())
        for (const auto& q : b.support()) sum.insert(p + q);
      for (const auto& p : (a * b).support()) CHECK(sum.contains(p));
    }
  }

  TEST_CASE("integer embedding commutes with convolution") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      const std::size_t d = 1 + i % 3;
      const auto a = oracle::random_poly(rng, d, 6, 3, 50);
      const auto b = oracle::random_poly(rng, d, 6, 3, 50);
      CHECK(mul(RealSummableArray::from_integer(a), RealSummableArray::from_integer(b)) ==
            RealSummableArray::from_integer(a * b));
    }
  }
}
