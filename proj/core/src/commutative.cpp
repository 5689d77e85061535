#include "skewres/commutative.hpp"

#include <algorithm>

namespace skewres {

void check_split(const KPoly& den, const FieldTower& tw) {
  KPoly rest = den;
  for (std::uint32_t w = 0; w < tw.p() && rest.degree() > 0; ++w)
    rest.deflate_root(tw.from_base(w));
  if (rest.degree() > 0)
    fail(errc::unsplit_denominator,
         "denominator has an irreducible factor of degree > 1 over F");
}

namespace {

KElement residue_finite(const KRat& c, const KElement& z,
                        const FieldTower& tw) {
  KPoly rest = c.den();
  std::size_t e = rest.deflate_root(z);
  if (e == 0) return tw.zero();
  // residue = coefficient of u^{e-1} in num(z+u) / E(z+u)
  KPoly ns = c.num().shift_at(z).truncated(e);
  KPoly es = rest.shift_at(z).truncated(e);
  KPoly inv = es.series_inverse(e);
  KElement acc = tw.zero();
  for (std::size_t a = 0; a < e; ++a)
    acc = acc + ns.coeff(a) * inv.coeff(e - 1 - a);
  return acc;
}

}  // namespace

KElement residue_at(const KRat& c, const Point& pt, const FieldTower& tw) {
  if (c.is_zero()) return tw.zero();
  check_split(c.den(), tw);
  return residue_at_local(c, pt, tw);
}

KElement residue_at_local(const KRat& c, const Point& pt,
                          const FieldTower& tw) {
  if (c.is_zero()) return tw.zero();
  const KField* kf = tw.kfield();
  switch (pt.kind) {
    case Point::Kind::finite:
      return residue_finite(c, tw.from_base(pt.z), tw);
    case Point::Kind::zero:
      return residue_finite(c, tw.zero(), tw);
    case Point::Kind::infinity: {
      // res_inf(C dY) = res_0(-W^{-2} C(1/W) dW)
      long dn = c.num().degree();
      long dd = c.den().degree();
      std::vector<KElement> rn(c.num().coeffs().rbegin(),
                               c.num().coeffs().rend());
      std::vector<KElement> rd(c.den().coeffs().rbegin(),
                               c.den().coeffs().rend());
      KPoly revn(kf, std::move(rn));
      KPoly revd(kf, std::move(rd));
      long shift = dd - dn - 2;
      KRat g(revn, revd);
      if (shift >= 0)
        g = g * KRat(KPoly::monomial(kf, kf->one(), std::size_t(shift)));
      else
        g = g / KRat(KPoly::monomial(kf, kf->one(), std::size_t(-shift)));
      return -residue_finite(g, tw.zero(), tw);
    }
  }
  fail(errc::internal, "bad point kind");
}

std::vector<KElement> rho(const KRat& c, const Point& pt,
                          const FieldTower& tw) {
  std::vector<KElement> out;
  out.reserve(tw.r());
  for (std::uint32_t i = 0; i < tw.r(); ++i)
    out.push_back(residue_at(tw.theta_rat(c, long(i)), pt, tw));
  return out;
}

KRat substitute_root(const KRat& c, const FieldTower& tw) {
  const KField* kf = tw.kfield();
  auto stretch = [&](const KPoly& f) {
    if (f.is_zero()) return KPoly(kf);
    std::vector<KElement> cs(std::size_t(f.degree()) * tw.r() + 1, tw.zero());
    for (std::size_t k = 0; k < f.size(); ++k)
      cs[k * tw.r()] = f.coeff(k);
    return KPoly(kf, std::move(cs));
  };
  return KRat(stretch(c.num()), stretch(c.den()));
}

KElement residue_at_zeta(const KRat& c, std::uint32_t zeta,
                         const FieldTower& tw) {
  return residue_at_local(substitute_root(c, tw), Point::finite(zeta), tw);
}

}  // namespace skewres
