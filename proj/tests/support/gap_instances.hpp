#pragma once

// Random gap-separated sums of multiples of f, shared by the unit suite
// and the acceptance runner.

#include <random>
#include <vector>

#include "atoral/gap.hpp"
#include "oracles/oracles.hpp"

namespace gap_instances {

struct Instance {
  std::vector<atoral::IntLaurentPoly> pieces;  ///< each a multiple of f, pairwise >= M apart
  atoral::IntLaurentPoly r;
  mpz_class h_bound;
  std::int64_t gap = 0;
};

/// 2 to 4 pieces k_i f with random k_i; the pieces are spread along the
/// first axis at sup-distance M + extra, extra in [0, M].
template <class Rng>
Instance make(Rng& rng, const atoral::IntLaurentPoly& f, const atoral::QuasiInverse& q) {
  const std::size_t d = f.dim();
  std::uniform_int_distribution<int> count(2, 4), jitter(-3, 3);
  Instance inst;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    atoral::IntLaurentPoly k(d);
    while (k.is_zero()) k = oracle::random_poly(rng, d, 4, 2, 3);
    inst.pieces.push_back(k * f);
  }
  inst.h_bound = 0;
  for (const auto& p : inst.pieces) inst.h_bound = std::max(inst.h_bound, p.sup_norm());
  inst.gap = atoral::gap_constant(q, inst.h_bound);
  std::uniform_int_distribution<std::int64_t> extra(0, inst.gap);

  inst.r = atoral::IntLaurentPoly(d);
  std::int64_t next = 0;
  for (auto& p : inst.pieces) {
    atoral::LatticePoint shift(d);
    shift[0] = next - p.min_exponent()[0];
    for (std::size_t j = 1; j < d; ++j) shift[j] = jitter(rng);
    p = p.translated(shift);
    next = p.max_exponent()[0] + inst.gap + extra(rng);
    inst.r += p;
  }
  return inst;
}

}  // namespace gap_instances
