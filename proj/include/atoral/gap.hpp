#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atoral/division.hpp"
#include "atoral/quasi_inverse.hpp"

namespace atoral {

/// Least R with tail_mass(q, R) < 1 / (2 H ||f||_1), compared exactly.
/// Throws TailTooFat if the certified tail never drops below the threshold.
std::int64_t gap_radius(const QuasiInverse& q, const mpz_class& h_bound);
/// M = 3R.
std::int64_t gap_constant(const QuasiInverse& q, const mpz_class& h_bound);

/// Connected components of supp(r) under "sup-distance < M". Components are
/// pairwise at distance >= M and are listed in order of their least point.
std::vector<SupportSet> cluster_support(const IntLaurentPoly& r, std::int64_t m);

/// Throws QuasiInverseRejected unless q belongs to f, has residual < 1/2,
/// and is tail-certified or explicitly experimental.
void check_quasi_inverse(const IntLaurentPoly& f, const QuasiInverse& q);

/// The inequalities of the splitting argument evaluated for r = p + q with
/// supp p = S, supp q = T, dist(S, T) >= M = 3R.
///
/// Every bound includes the certified tail of f# and an allowance for
/// floating rounding, so a passing check is a proof for this instance.
struct ProofTrace {
  std::int64_t radius = 0;
  std::int64_t gap = 0;
  /// 2 H ||f||_1 tail(R); below 1 by the choice of R.
  double tail_term = 0.0;
  /// (i) max |(r f#)_n| over n outside B_R(S u T); must stay below 1/2.
  double off_support_max = 0.0;
  /// (ii) ||u - p f#||_inf against 1 / (2 ||f||_1).
  double approximation_error = 0.0;
  double approximation_threshold = 0.0;
  /// u = round(restrict(r f#, B_R(S))).
  IntLaurentPoly u;
  /// (iii) u f == p h in exact integer arithmetic.
  bool identity_exact = false;
  /// Set when the rounding in step (ii) was ambiguous.
  std::optional<std::string> rounding_failure;

  double off_support_margin() const { return 0.5 - off_support_max; }
  double approximation_margin() const { return approximation_threshold - approximation_error; }
  bool passed() const {
    return tail_term < 1.0 && off_support_margin() > 0 && approximation_margin() > 0 && identity_exact &&
           !rounding_failure;
  }
};

/// Preconditions: ||p||_inf, ||q||_inf <= H (else HTooSmall), f | p + q
/// (else NotDivisible), q accepted (else QuasiInverseRejected), and
/// dist(supp p, supp q) >= M (else Error).
ProofTrace proof_trace(const IntLaurentPoly& f, const QuasiInverse& q, const IntLaurentPoly& p,
                       const IntLaurentPoly& qpoly, const mpz_class& h_bound);

struct SplitOptions {
  std::optional<mpz_class> h_bound;  ///< defaults to ||r||_inf
  std::optional<std::int64_t> gap;   ///< override, must be >= the computed M
  bool irreducible_asserted = false;
  bool with_traces = true;
  std::size_t threads = 1;
};

struct ClusterReport {
  SupportSet cluster;
  IntLaurentPoly piece;
  Divisibility status = Divisibility::kNotDivisible;
  std::optional<IntLaurentPoly> quotient;
  std::optional<ProofTrace> trace;
};

struct GapCertificate {
  IntLaurentPoly f;
  IntLaurentPoly r;
  mpz_class h_bound;
  std::int64_t radius = 0;
  std::int64_t computed_gap = 0;  ///< 3R
  std::int64_t gap = 0;           ///< separation used for clustering
  double tail_term = 0.0;
  bool experimental_quasi_inverse = false;
  bool irreducible_asserted = false;
  std::vector<ClusterReport> clusters;
  /// Non-divisible pieces or failed trace checks. Each one contradicts an
  /// assumption (irreducible, atoral) or exposes a defect.
  std::vector<std::string> anomalies;

  bool all_divisible() const;
};

/// Splits r at the gap constant and decides divisibility of every piece.
/// Failures are recorded as anomalies, never thrown.
GapCertificate split_and_verify(const IntLaurentPoly& f, const QuasiInverse& q, const IntLaurentPoly& r,
                                const SplitOptions& opts = {});

}  // namespace atoral
