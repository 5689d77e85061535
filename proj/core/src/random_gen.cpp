#include "skewres/random_gen.hpp"

#include "skewres/residues.hpp"

namespace skewres {

KElement random_k(const FieldTower& tw, Rng& rng) {
  return tw.element(rng.below(tw.cardinality()));
}

KElement random_k_nonzero(const FieldTower& tw, Rng& rng) {
  return tw.element(1 + rng.below(tw.cardinality() - 1));
}

SkewPoly random_skew(const FieldTower& tw, Rng& rng, long max_deg) {
  long d = rng.range(0, max_deg);
  std::vector<KElement> cs;
  cs.reserve(std::size_t(d) + 1);
  for (long i = 0; i < d; ++i) cs.push_back(random_k(tw, rng));
  cs.push_back(random_k_nonzero(tw, rng));
  return SkewPoly::from_coeffs(&tw, std::move(cs));
}

SkewPoly random_skew_laurent(const FieldTower& tw, Rng& rng, long min_val,
                             long max_deg) {
  long v = rng.range(min_val, 0);
  return random_skew(tw, rng, max_deg - v).shifted(v);
}

KPoly random_kpoly(const FieldTower& tw, Rng& rng, long max_deg) {
  long d = rng.range(0, max_deg);
  std::vector<KElement> cs;
  for (long i = 0; i <= d; ++i) cs.push_back(random_k(tw, rng));
  return KPoly(tw.kfield(), std::move(cs));
}

KPoly random_kpoly_nonzero(const FieldTower& tw, Rng& rng, long max_deg) {
  for (;;) {
    KPoly f = random_kpoly(tw, rng, max_deg);
    if (!f.is_zero()) return f;
  }
}

FpPoly random_split_center(const FieldTower& tw, Rng& rng, long max_total,
                           long max_mult) {
  const PrimeField& fp = tw.fp();
  FpPoly d = FpPoly::one(tw.fp_ptr());
  long total = rng.range(1, max_total);
  long used = 0;
  while (used < total) {
    std::uint32_t z = std::uint32_t(rng.range(1, long(fp.p()) - 1));
    long mult = std::min(rng.range(1, max_mult), total - used);
    FpPoly lin(tw.fp_ptr(), {fp.neg(z), 1});
    d = d * lin.pow(std::uint64_t(mult));
    used += mult;
  }
  return d;
}

SkewFraction random_split_fraction(const FieldTower& tw, Rng& rng,
                                   long max_total, long max_mult,
                                   long num_span) {
  for (;;) {
    FpPoly den = random_split_center(tw, rng, max_total, max_mult);
    SkewPoly num = random_skew_laurent(tw, rng, -long(tw.r()), num_span);
    SkewFraction f(num, den);
    if (!f.is_zero()) return f;
  }
}

SkewFraction random_simple_pole_fraction(const FieldTower& tw, Rng& rng,
                                         long num_span) {
  for (;;) {
    SkewFraction f =
        random_split_fraction(tw, rng, /*max_total=*/2, /*max_mult=*/1,
                              num_span);
    bool simple = true;
    for (std::uint32_t z = 1; z < tw.p() && simple; ++z) {
      if (f.den().eval(z) != 0) continue;
      auto ord = order_at(f, z);
      if (ord && *ord < -1) simple = false;
    }
    if (simple && !f.is_zero()) return f;
  }
}

}  // namespace skewres
