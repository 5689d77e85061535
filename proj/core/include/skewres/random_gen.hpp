#ifndef SKEWRES_RANDOM_GEN_HPP
#define SKEWRES_RANDOM_GEN_HPP

#include <random>

#include "skewres/skew_fraction.hpp"

namespace skewres {

// Deterministic source for the randomized suites; identical seeds give
// identical instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    return bound == 0 ? 0 : eng_() % bound;
  }
  long range(long lo, long hi) {  // inclusive
    return lo + long(below(std::uint64_t(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

KElement random_k(const FieldTower& tw, Rng& rng);
KElement random_k_nonzero(const FieldTower& tw, Rng& rng);

// Dense skew polynomial with degree <= max_deg (nonzero).
SkewPoly random_skew(const FieldTower& tw, Rng& rng, long max_deg);
// Laurent variant with valuation in [min_val, 0].
SkewPoly random_skew_laurent(const FieldTower& tw, Rng& rng, long min_val,
                             long max_deg);

KPoly random_kpoly(const FieldTower& tw, Rng& rng, long max_deg);
KPoly random_kpoly_nonzero(const FieldTower& tw, Rng& rng, long max_deg);

// Monic product of (Y - z) factors with z in F\{0}; total degree in
// [1, max_total], per-root multiplicity <= max_mult.
FpPoly random_split_center(const FieldTower& tw, Rng& rng, long max_total,
                           long max_mult);

// Fraction with a split denominator (the residue-theory regime).
SkewFraction random_split_fraction(const FieldTower& tw, Rng& rng,
                                   long max_total, long max_mult,
                                   long num_span);

// As above but every finite pole of the *result* is simple (regenerates
// until the expansion orders confirm it).
SkewFraction random_simple_pole_fraction(const FieldTower& tw, Rng& rng,
                                         long num_span);

}  // namespace skewres

#endif
