#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atoral/division.hpp"
#include "atoral/gf2_poly.hpp"

namespace atoral {

/// Stated in every report: a finite run can refute lacunary independence
/// for given data, or support it, but never prove it for all finite sets.
extern const char* const kScopeStatement;

/// Enumeration limit shared by every brute-force verifier.
inline constexpr std::uint64_t kMaxCases = 1'000'000;

/// Finite set of lattice points with pairwise sup-distance >= spacing.
struct SpacedConfiguration {
  std::size_t dim = 0;
  std::vector<LatticePoint> points;
  std::int64_t spacing = 1;
};

/// Throws Error if two points are closer than `spacing` or the set is empty.
SpacedConfiguration make_spaced_configuration(std::vector<LatticePoint> points, std::int64_t spacing);

/// A selection sum divisible by f although some part is not.
struct SpacingViolation {
  std::vector<std::size_t> selection;  ///< index into the family per point
  IntLaurentPoly sum;
};

struct SpacedDivisibilityReport {
  std::string scope = kScopeStatement;
  std::uint64_t selections = 0;
  std::uint64_t divisible_sums = 0;
  std::vector<SpacingViolation> violations;
  bool clean() const { return violations.empty(); }
};

/// Enumerates every selection n -> p^(n) from the family and tests whether
/// f | sum x^n p^(n) forces f | p^(n) for each n. Throws BlowUpGuard above
/// kMaxCases selections.
SpacedDivisibilityReport verify_spaced_divisibility(const IntLaurentPoly& f,
                                                    const std::vector<IntLaurentPoly>& family,
                                                    const SpacedConfiguration& cfg, std::size_t threads = 1);

struct GapSearchOptions {
  std::int64_t max_spacing = 8;
  std::size_t trials = 20;      ///< configurations per spacing
  std::size_t points = 2;       ///< points per configuration
  std::uint64_t seed = 1;
  std::size_t threads = 1;
};

struct GapSearchFinding {
  std::int64_t spacing;
  SpacedConfiguration configuration;
  SpacingViolation violation;
};

struct GapSearchReport {
  std::string scope = kScopeStatement;
  /// One more than the largest spacing with a violation (1 if none was
  /// found); empty when violations occur at max_spacing itself.
  std::optional<std::int64_t> empirical_gap;
  std::vector<GapSearchFinding> findings;  ///< first violation per spacing
  std::uint64_t configurations = 0;
};

/// Random configurations at each spacing 1..max_spacing. Every configuration
/// contains a pair at exactly the spacing. Throws Error if max_spacing < 1.
GapSearchReport empirical_gap_search(const IntLaurentPoly& f, const std::vector<IntLaurentPoly>& family,
                                     const GapSearchOptions& opts);

struct IndependenceReport {
  std::string scope = kScopeStatement;
  std::uint64_t expected = 0;              ///< product of the family sizes
  std::uint64_t distinct_sum_count = 0;    ///< distinct classes in R_d/<f>
  bool independent = false;
  /// Two selections with equal sums in R_d/<f>.
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> witness;
  /// Pairs that agree over Q but differ over Z (not counted as collisions).
  std::uint64_t rational_only_collisions = 0;
};

/// The families are finite sets of coset representatives in R_d/<f>.
/// Sums are compared through their labels over Q; every Q-collision is
/// rechecked by exact division over Z. Throws BlowUpGuard above kMaxCases.
IndependenceReport independence_check(const IntLaurentPoly& f,
                                      const std::vector<std::vector<IntLaurentPoly>>& families);

/// |B_R| = (2R + 1)^d by enumeration.
std::uint64_t ball_size(std::size_t dim, std::int64_t radius);
/// |B_{R,M}| by enumeration.
std::uint64_t sublattice_ball_size(std::size_t dim, std::int64_t radius, std::int64_t spacing);

struct SumsetReport {
  std::string scope = kScopeStatement;
  std::uint64_t ball = 0;            ///< |B_R|
  std::uint64_t sublattice_ball = 0; ///< |B_{R,M}|
  std::uint64_t spacing_ball = 0;    ///< |B_M|
  std::uint64_t sumset_size = 0;     ///< distinct classes of sum_{n in B_{R,M}} x^n F
  std::uint64_t independent_size = 0;  ///< 2^{|B_{R,M}|}
  /// gamma = |B_{R,M}| log 2 / |B_R|; counting guarantees it is at least
  /// log 2 / |B_M|, so 2^{|B_R| / |B_M|} is a lower bound when independent.
  double gamma = 0.0;
  double gamma_floor = 0.0;
  bool counting_bound_holds = false;  ///< |B_{R,M}| |B_M| >= |B_R|
};

/// F must have two elements. Throws BlowUpGuard when 2^{|B_{R,M}|} > kMaxCases.
SumsetReport sumset_growth(const IntLaurentPoly& f, const std::vector<IntLaurentPoly>& two_set,
                           std::int64_t radius, std::int64_t spacing);

/// Integral of the character chi_p against Haar measure: 1 iff p in <f>.
int haar_pairing(const IntLaurentPoly& f, const IntLaurentPoly& p);

struct FactorizationReport {
  mpq_class joint;     ///< sum over selections of prod w * pairing(sum)
  mpq_class product;   ///< prod_j sum_e w_e pairing(e)
  bool factorizes = false;
};

/// Compares the integral of prod_j (sum_e w_e chi_e) with the product of
/// the integrals. Weights default to 1. Throws BlowUpGuard above kMaxCases.
FactorizationReport haar_product_factorization(const IntLaurentPoly& f,
                                               const std::vector<std::vector<IntLaurentPoly>>& families,
                                               const std::vector<std::vector<mpq_class>>& weights = {});

struct FrobeniusEntry {
  unsigned n = 0;
  bool identity_holds = false;         ///< (1+x+y)^{2^n} = 1 + x^{2^n} + y^{2^n} mod 2
  bool sum_divisible_mod2 = false;     ///< 1+x+y | 1 + x^{2^n} + y^{2^n} mod 2
  bool parts_divisible_mod2 = false;   ///< some single monomial part divisible mod 2
  std::optional<Divisibility> integer_status;  ///< divides(1+x+y, ...) over Z
};

struct FrobeniusReport {
  std::string scope = kScopeStatement;
  std::vector<FrobeniusEntry> entries;
  bool all_hold() const;
};

/// n ranges over 1..n_max with 1 <= n_max <= 12 (else Error). The integer
/// check costs about 4^n division steps and can be skipped.
FrobeniusReport frobenius_counterexample(unsigned n_max, bool check_integers = true);

}  // namespace atoral
