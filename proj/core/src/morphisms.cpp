#include "skewres/morphisms.hpp"

namespace skewres {

KRat twisted_norm(const KRat& c, long n, const FieldTower& tw) {
  const KField* kf = tw.kfield();
  KRat acc(KPoly::one(kf));
  if (n >= 0) {
    for (long t = 0; t < n; ++t) acc = acc * tw.theta_rat(c, t);
    return acc;
  }
  if (c.is_zero())
    fail(errc::zero_to_negative_power, "N_n(0) with n < 0");
  KRat cinv = c.inverse();
  for (long t = -1; t >= n; --t) acc = acc * tw.theta_rat(cinv, t);
  return acc;
}

KRat twisted_trace(const KRat& c, long n, const FieldTower& tw) {
  const KField* kf = tw.kfield();
  KRat acc(kf);
  if (n >= 0) {
    for (long t = 0; t < n; ++t) acc = acc + tw.theta_rat(c, t);
    return acc;
  }
  for (long t = -1; t >= n; --t) acc = acc - tw.theta_rat(c, t);
  return acc;
}

FpRat to_central(const KRat& c, const FieldTower& tw) {
  return FpRat(tw.to_center(c.num()), tw.to_center(c.den()));
}

KRat from_central(const FpRat& c, const FieldTower& tw) {
  return KRat(tw.embed(c.num()), tw.embed(c.den()));
}

SkewPoly apply_morphism(const KPoly& c, const SkewPoly& f) {
  const FieldTower* tw = f.tower_ptr();
  if (c.is_zero()) fail(errc::zero_c, "gamma_C with C = 0");
  if (f.is_zero()) return f;
  if (!f.is_polynomial())
    fail(errc::internal, "polynomial gamma_C needs nonnegative valuation");
  SkewPoly acc = SkewPoly::zero(tw);
  KPoly norm = KPoly::one(tw->kfield());  // N_i(C), updated incrementally
  for (long i = 0; i <= f.degree(); ++i) {
    KElement a = f.coeff(i);
    if (!a.is_zero()) {
      YLaurent term(0, norm.scaled(a));
      acc = acc + mul_coef_left(term, SkewPoly::one(tw)).shifted(i);
    }
    norm = norm * tw->theta_poly(c, i);
  }
  return acc;
}

namespace {

// sum over i of coeff_i(Y) X^i with rational coefficients, cleared to a
// single central denominator.
SkewFraction assemble_with_central_denominator(
    const FieldTower& tw, const std::vector<std::pair<long, KRat>>& terms) {
  const KField* kf = tw.kfield();
  KPoly common = KPoly::one(kf);
  for (const auto& [i, c] : terms) {
    (void)i;
    if (c.is_zero()) continue;
    KPoly g = KPoly::gcd(common, c.den());
    common = common * (c.den().divmod(g).first);
  }
  // central multiple of the common denominator
  KPoly central = KPoly::one(kf);
  for (std::uint32_t t = 0; t < tw.r(); ++t)
    central = central * tw.theta_poly(common, long(t));
  FpPoly d = tw.to_center(central);

  SkewPoly num = SkewPoly::zero(&tw);
  for (const auto& [i, c] : terms) {
    if (c.is_zero()) continue;
    KPoly scaled = c.num() * (central.divmod(c.den()).first);
    num = num + mul_coef_left(YLaurent(0, scaled), SkewPoly::one(&tw))
                    .shifted(i);
  }
  return SkewFraction(num, d);
}

}  // namespace

SkewFraction apply_morphism(const KRat& c, const SkewFraction& f,
                            const FieldTower& tw) {
  if (c.is_zero()) fail(errc::zero_c, "gamma_C with C = 0");
  if (f.is_zero()) return SkewFraction::zero(&tw);

  const SkewPoly& num = f.num();
  std::vector<std::pair<long, KRat>> terms;
  // N_i(C) for the needed index range, extended incrementally both ways
  KRat npos(KPoly::one(tw.kfield()));
  long ipos = 0;
  KRat nneg = npos;
  long ineg = 0;
  KRat cinv;
  bool have_cinv = false;
  for (long i = num.valuation(); i <= num.degree(); ++i) {
    KElement a = num.coeff(i);
    if (a.is_zero()) continue;
    KRat norm(tw.kfield());
    if (i >= 0) {
      while (ipos < i) {
        npos = npos * tw.theta_rat(c, ipos);
        ++ipos;
      }
      norm = npos;
    } else {
      if (!have_cinv) {
        cinv = c.inverse();
        have_cinv = true;
      }
      while (ineg > i) {
        --ineg;
        nneg = nneg * tw.theta_rat(cinv, ineg);
      }
      norm = nneg;
    }
    terms.emplace_back(i, norm * KRat(KPoly::constant(tw.kfield(), a)));
  }
  SkewFraction image_num = assemble_with_central_denominator(tw, terms);

  // denominator transforms through Y -> N_r(C) Y
  FpRat nr = to_central(twisted_norm(c, long(tw.r()), tw), tw);
  FpRat zrat = nr * FpRat(FpPoly::monomial(tw.fp_ptr(), 1, 1));
  FpRat den_image(tw.fp_ptr());
  FpRat zpow(FpPoly::one(tw.fp_ptr()));
  for (std::size_t k = 0; k < f.den().size(); ++k) {
    if (f.den().coeff(k) != 0)
      den_image =
          den_image +
          zpow * FpRat(FpPoly::constant(tw.fp_ptr(), f.den().coeff(k)));
    zpow = zpow * zrat;
  }
  return mul_central(image_num, den_image.inverse());
}

SkewPoly apply_derivation(const KPoly& c, const SkewPoly& f) {
  const FieldTower* tw = f.tower_ptr();
  if (f.is_zero()) return f;
  if (!f.is_polynomial())
    fail(errc::internal, "polynomial partial_C needs nonnegative valuation");
  SkewPoly acc = SkewPoly::zero(tw);
  KPoly tr(tw->kfield());  // Tr_i(C)
  for (long i = 0; i <= f.degree(); ++i) {
    KElement a = f.coeff(i);
    if (!a.is_zero() && !tr.is_zero()) {
      YLaurent term(0, tr.scaled(a));
      acc = acc + mul_coef_left(term, SkewPoly::one(tw)).shifted(i);
    }
    tr = tr + tw->theta_poly(c, i);
  }
  return acc;
}

SkewFraction apply_derivation(const KRat& c, const SkewFraction& f,
                              const FieldTower& tw) {
  if (f.is_zero()) return f;
  const SkewPoly& num = f.num();
  std::vector<std::pair<long, KRat>> terms;
  for (long i = num.valuation(); i <= num.degree(); ++i) {
    KElement a = num.coeff(i);
    if (a.is_zero()) continue;
    KRat tr = twisted_trace(c, i, tw);
    terms.emplace_back(i, tr * KRat(KPoly::constant(tw.kfield(), a)));
  }
  SkewFraction dnum = assemble_with_central_denominator(tw, terms);
  SkewFraction part1 = mul_central(
      dnum, FpRat(FpPoly::one(tw.fp_ptr()), f.den()));
  if (f.den().degree() == 0) return part1;

  // quotient rule: d(num/D) = d(num)/D - num d(D)/D^2 with
  // d(D) = Tr_r(C) Y D'(Y), all central.
  FpRat trr = to_central(twisted_trace(c, long(tw.r()), tw), tw);
  FpRat dden = trr * FpRat(FpPoly::monomial(tw.fp_ptr(), 1, 1)) *
               FpRat(f.den().derivative());
  SkewFraction part2 = mul_central(
      SkewFraction(f.num(), f.den() * f.den()), dden);
  return part1 - part2;
}

SkewPoly divided_power(const SkewPoly& f, std::uint64_t n) {
  const FieldTower* tw = f.tower_ptr();
  const PrimeField& fp = tw->fp();
  if (tw->r() % fp.p() == 0)
    fail(errc::characteristic_divides_r, "canonical derivation needs p coprime to r");
  if (n == 0) return f;
  if (f.is_zero()) return f;
  const long r = long(tw->r());
  SkewPoly acc = SkewPoly::zero(tw);
  for (long i = f.valuation(); i <= f.degree(); ++i) {
    KElement a = f.coeff(i);
    if (a.is_zero()) continue;
    std::uint32_t cni = padic_binomial(i, tw->r(), n, fp);
    if (cni == 0) continue;
    acc = acc + SkewPoly::monomial(tw, a * tw->from_base(cni),
                                   i - r * long(n));
  }
  return acc;
}

SkewPoly canonical_derivation(const SkewPoly& f) { return divided_power(f, 1); }

}  // namespace skewres
