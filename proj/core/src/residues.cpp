#include "skewres/residues.hpp"

#include <algorithm>

namespace skewres {

namespace {

TaylorSeries expand_for_residue(const SkewFraction& f, std::uint32_t z,
                                Method method, long prec) {
  if (method == Method::canonical) return expand_canonical(f, z, prec);
  FpPoly d = f.den();
  std::size_t k = d.deflate_root(z);
  std::uint32_t m = std::uint32_t(std::max<long>(prec + long(k), 1));
  return expand_admissible(f, hensel_lift(f.tower(), z, m), prec);
}

}  // namespace

ResidueRecord sres(const SkewFraction& f, std::uint32_t z, Method method) {
  const FieldTower& tw = f.tower();
  if (z == 0 || z % tw.p() == 0)
    fail(errc::zero_point, "sres needs a point in F\\{0}");
  z %= tw.p();
  ResidueRecord rec;
  rec.point = Point::finite(z);
  if (f.is_zero()) {
    rec.full = QuotientElement::zero(&tw, z, 1);
    rec.partial.assign(tw.r(), tw.zero());
    return rec;
  }
  TaylorSeries s = expand_for_residue(f, z, method, 1);
  QuotientElement full = s.coeff(-1);
  rec.full = full;
  rec.partial.reserve(tw.r());
  for (std::uint32_t j = 0; j < tw.r(); ++j)
    rec.partial.push_back(full.rep().coeff(long(j)));
  return rec;
}

KElement sres_zero(const SkewFraction& f, std::uint32_t j) {
  const FieldTower& tw = f.tower();
  XSeries s = expand_at_zero(f, 1);
  return s.coeff(long(j) - long(tw.r()));
}

KElement sres_infinity(const SkewFraction& f, std::uint32_t j) {
  const FieldTower& tw = f.tower();
  XSeries s = expand_at_infinity(f, long(tw.r()) + 1);
  return -s.coeff(long(tw.r()) - long(j));
}

ResidueRecord sres_special(const SkewFraction& f, const Point& pt) {
  const FieldTower& tw = f.tower();
  ResidueRecord rec;
  rec.point = pt;
  rec.partial.reserve(tw.r());
  for (std::uint32_t j = 0; j < tw.r(); ++j)
    rec.partial.push_back(pt.kind == Point::Kind::zero
                              ? sres_zero(f, j)
                              : sres_infinity(f, j));
  return rec;
}

std::optional<long> order_at(const SkewFraction& f, std::uint32_t z) {
  if (f.is_zero()) return std::nullopt;
  TaylorSeries s = expand_for_residue(f, z, Method::hensel, 1);
  if (s.is_zero_to_precision()) return std::nullopt;
  return s.valuation();
}

PoleSupport pole_support(const SkewFraction& f) {
  const FieldTower& tw = f.tower();
  PoleSupport sup;
  sup.at_zero.assign(tw.r(), std::nullopt);
  sup.at_infinity.assign(tw.r(), std::nullopt);
  if (f.is_zero()) return sup;
  for (std::uint32_t z = 1; z < tw.p(); ++z) {
    FpPoly d = f.den();
    if (d.eval(z) != 0) continue;
    auto ord = order_at(f, z);
    if (ord && *ord < 0) sup.finite[z] = -*ord;
  }
  long margin = long(tw.r()) + 1;
  XSeries s0 = expand_at_zero(f, f.num().valuation() + margin);
  if (!s0.is_zero_to_precision())
    sup.at_zero = order_and_principal(s0).ord_j;
  XSeries si = expand_at_infinity(f, -f.degree() + margin);
  if (!si.is_zero_to_precision())
    sup.at_infinity = order_and_principal(si).ord_j;
  return sup;
}

BridgeResult bridge_check(const SkewFraction& f, const Point& pt,
                          std::uint32_t j) {
  const FieldTower& tw = f.tower();
  BridgeResult out{tw.zero(), tw.zero(), false};
  switch (pt.kind) {
    case Point::Kind::finite:
      out.skew = sres(f, pt.z, Method::hensel).partial[j];
      break;
    case Point::Kind::zero:
      out.skew = sres_zero(f, j);
      break;
    case Point::Kind::infinity:
      out.skew = sres_infinity(f, j);
      break;
  }
  out.commutative = residue_at(f.section(long(j)), pt, tw);
  out.equal = out.skew == out.commutative;
  return out;
}

ResidueSum residue_sum(const SkewFraction& f, std::uint32_t j) {
  const FieldTower& tw = f.tower();
  ResidueSum out{tw.zero(), {}};
  if (f.is_zero()) return out;
  if (j >= tw.r()) fail(errc::internal, "section index out of range");
  // library-wide restriction: the denominator must split over F
  check_split(tw.embed(f.den()), tw);

  std::vector<std::uint32_t> roots;
  for (std::uint32_t z = 1; z < tw.p(); ++z)
    if (f.den().eval(z) == 0) roots.push_back(z);

  if (j != 0) {
    for (std::uint32_t z : roots) {
      auto ord = order_at(f, z);
      if (ord && *ord < -1)
        fail(errc::simple_pole_required,
             "partial residue sums with j != 0 need simple finite poles");
    }
  }

  for (std::uint32_t z : roots) {
    KElement v = sres(f, z, Method::hensel).partial[j];
    out.breakdown.emplace_back(std::to_string(z), v);
    out.sum = out.sum + v;
  }
  KElement v0 = sres_zero(f, j);
  out.breakdown.emplace_back("0", v0);
  out.sum = out.sum + v0;
  KElement vi = sres_infinity(f, j);
  out.breakdown.emplace_back("inf", vi);
  out.sum = out.sum + vi;
  return out;
}

ZetaCheck zeta_root_check(const SkewFraction& f, std::uint32_t j,
                          std::uint32_t zeta) {
  const FieldTower& tw = f.tower();
  const PrimeField& fp = tw.fp();
  if (tw.r() % fp.p() == 0)
    fail(errc::characteristic_divides_r, "zeta-root identity needs p coprime to r");
  zeta %= fp.p();
  if (zeta == 0) fail(errc::zero_point, "zeta must be nonzero");
  std::uint32_t z = fp.pow(zeta, tw.r());

  ZetaCheck out{tw.zero(), tw.zero(), false};
  out.lhs = sres(f, z, Method::canonical).partial[j];

  KRat sect = f.section(long(j));
  KRat iny = substitute_root(sect, tw);
  KRat form = iny * KRat(KPoly::monomial(tw.kfield(), tw.one(),
                                         std::size_t(j + tw.r() - 1)));
  KElement res = residue_at_local(form, Point::finite(zeta), tw);
  std::uint32_t scale =
      fp.mul(fp.from_int(long(tw.r())), fp.inv(fp.pow(zeta, j)));
  out.rhs = res * tw.from_base(scale);
  out.equal = out.lhs == out.rhs;
  return out;
}

FpRat gamma_coordinate(const FpRat& c, const FieldTower& tw) {
  if (c.is_zero()) fail(errc::zero_c, "gamma with C = 0");
  FpRat y(FpPoly::monomial(tw.fp_ptr(), 1, 1));
  return c.pow(long(tw.r())) * y;
}

bool is_gamma_regular(const FpRat& c, std::uint32_t z, const FieldTower& tw) {
  if (c.is_zero()) return false;
  FpRat zc = gamma_coordinate(c, tw);
  if (zc.den().eval(z) == 0 || zc.num().eval(z) == 0) return false;
  // The transported local parameter must have valuation 1: dZ/dY may
  // vanish at a point that is neither a zero nor a pole (the coordinate
  // ramifies there), and residues then pick up the ramification index.
  const PrimeField& fp = tw.fp();
  std::uint32_t dnum = fp.sub(
      fp.mul(zc.num().derivative().eval(z), zc.den().eval(z)),
      fp.mul(zc.den().derivative().eval(z), zc.num().eval(z)));
  return dnum != 0;
}

std::uint32_t gamma_star(const FpRat& c, std::uint32_t z,
                         const FieldTower& tw) {
  if (!is_gamma_regular(c, z, tw))
    fail(errc::not_regular, "point is not gamma-regular");
  return gamma_coordinate(c, tw).eval(z);
}

ChvarResult chvar_check(const FpRat& c, std::uint32_t z,
                        const SkewFraction& f, Method method) {
  const FieldTower& tw = f.tower();
  const PrimeField& fp = tw.fp();
  z %= fp.p();
  if (z == 0) fail(errc::zero_point, "change of variables at z = 0");
  std::uint32_t gz = gamma_star(c, z, tw);
  if (method == Method::canonical) {
    if (tw.r() % fp.p() == 0)
      fail(errc::characteristic_divides_r,
           "canonical change of variables needs p coprime to r");
  } else {
    auto ord = order_at(f, gz);
    if (!ord || *ord != -1)
      fail(errc::simple_pole_required,
           "hensel change of variables needs a simple pole at gamma* z");
  }

  ChvarResult out;
  // left side: sres at gamma* z transported through X -> C(z) X
  ResidueRecord lhs = sres(f, gz, method);
  std::uint32_t cz = c.eval(z);
  ResidueRecord mapped;
  mapped.point = Point::finite(z);
  SkewPoly rep = SkewPoly::zero(&tw);
  mapped.partial.assign(tw.r(), tw.zero());
  for (std::uint32_t j = 0; j < tw.r(); ++j) {
    KElement b = lhs.partial[j] * tw.from_base(fp.pow(cz, j));
    mapped.partial[j] = b;
    rep = rep + SkewPoly::monomial(&tw, b, long(j));
  }
  mapped.full = QuotientElement(&tw, z, 1, rep);
  out.lhs = mapped;

  // right side: sres_z(gamma(f) dZ/dY)
  FpRat zc = gamma_coordinate(c, tw);
  FpRat dz(zc.num().derivative() * zc.den() -
               zc.den().derivative() * zc.num(),
           zc.den() * zc.den());
  SkewFraction g = apply_morphism(from_central(c, tw), f, tw);
  out.rhs = sres(mul_central(g, dz), z, method);
  bool eq = true;
  for (std::uint32_t j = 0; j < tw.r(); ++j)
    eq = eq && mapped.partial[j] == out.rhs.partial[j];
  eq = eq && *mapped.full == *out.rhs.full;
  out.equal = eq;
  return out;
}

MorphismWitness quotient_morphism_exists(std::uint32_t z1, std::uint32_t z2,
                                         const FieldTower& tw) {
  const PrimeField& fp = tw.fp();
  z1 %= fp.p();
  z2 %= fp.p();
  if (z1 == 0 || z2 == 0) fail(errc::zero_point, "points must be nonzero");
  std::uint32_t target = fp.div(z1, z2);
  for (std::uint64_t n = 0; n < tw.cardinality(); ++n) {
    KElement e = tw.element(n);
    if (e.is_zero()) continue;
    if (e.norm().base_value() == target) return {true, e};
  }
  return {false, std::nullopt};  // unreachable over a finite field
}

}  // namespace skewres
