#include "skewres/skew_fraction.hpp"

namespace skewres {

SkewFraction::SkewFraction(const FieldTower* tw)
    : num_(SkewPoly::zero(tw)), den_(FpPoly::one(tw->fp_ptr())) {}

SkewFraction::SkewFraction(SkewPoly num, FpPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

SkewFraction SkewFraction::from_poly(SkewPoly f) {
  const FieldTower* tw = f.tower_ptr();
  return SkewFraction(std::move(f), FpPoly::one(tw->fp_ptr()));
}

void SkewFraction::normalize() {
  const FieldTower* tw = num_.tower_ptr();
  const PrimeField& fp = tw->fp();
  if (den_.is_zero()) fail(errc::division_by_zero, "zero denominator");
  if (num_.is_zero()) {
    den_ = FpPoly::one(&fp);
    return;
  }
  // monic denominator (leading coefficient is central, so it may move left)
  if (den_.lc() != 1) {
    std::uint32_t s = fp.inv(den_.lc());
    den_ = den_.scaled(s);
    num_ = num_.scaled_left(tw->from_base(s));
  }
  // strip powers of Y from the denominator into the X-valuation
  std::size_t t = 0;
  while (t < den_.size() && den_.coeff(t) == 0) ++t;
  if (t > 0) {
    std::vector<std::uint32_t> cs;
    for (std::size_t i = t; i < den_.size(); ++i) cs.push_back(den_.coeff(i));
    den_ = FpPoly(&fp, std::move(cs));
    num_ = num_.shifted(-long(tw->r()) * long(t));
  }
  // cancel shared degree-1 central factors (the split part of den)
  for (std::uint32_t z = 1; z < fp.p() && den_.degree() > 0; ++z) {
    while (den_.eval(z) == 0) {
      long v = num_.valuation();
      SkewPoly body = num_.shifted(-v);
      SkewPoly lin = SkewPoly::monomial(tw, tw->one(), long(tw->r())) -
                     SkewPoly::constant(tw, tw->from_base(z));
      auto [q, rem] = right_divide(body, lin);
      if (!rem.is_zero()) break;
      num_ = q.shifted(v);
      FpPoly linc(&fp, {fp.neg(z), 1});
      den_ = den_.divmod(linc).first;
    }
  }
}

long SkewFraction::degree() const {
  if (num_.is_zero()) return kNegInfDeg;
  return num_.degree() - long(num_.tower().r()) * den_.degree();
}

bool SkewFraction::operator==(const SkewFraction& o) const {
  return mul_center(num_, o.den_) == mul_center(o.num_, den_);
}

SkewFraction SkewFraction::operator+(const SkewFraction& o) const {
  return SkewFraction(mul_center(num_, o.den_) + mul_center(o.num_, den_),
                      den_ * o.den_);
}

SkewFraction SkewFraction::operator-() const {
  return SkewFraction(-num_, den_);
}

SkewFraction SkewFraction::operator-(const SkewFraction& o) const {
  return *this + (-o);
}

SkewFraction SkewFraction::operator*(const SkewFraction& o) const {
  return SkewFraction(num_ * o.num_, den_ * o.den_);
}

SkewFraction SkewFraction::inverse() const {
  if (is_zero()) fail(errc::zero_inverse, "inverse of 0");
  const FieldTower* tw = num_.tower_ptr();
  const long r = long(tw->r());
  long v = num_.valuation();
  SkewPoly body = num_.shifted(-v);  // valuation 0, nonzero constant term
  auto [g, n] = central_right_multiple(body);
  // num = body * X^v, so num^{-1} = X^{-v} g N^{-1}; write X^{-v} = X^s Y^t
  // with 0 <= s < r.
  long t = -v >= 0 ? (-v) / r : -((v + r - 1) / r);
  long s = -v - r * t;
  return SkewFraction(mul_center(g.x_mul_left(s), den_).shifted(r * t), n);
}

KRat SkewFraction::section(long j) const {
  const FieldTower* tw = num_.tower_ptr();
  KRat s = skewres::section(num_, j).to_rational();
  return s / KRat(tw->embed(den_));
}

SkewFraction mul_central(const SkewFraction& f, const FpRat& c) {
  if (f.is_zero() || c.is_zero())
    return SkewFraction::zero(f.tower_ptr());
  return SkewFraction(mul_center(f.num(), c.num()), f.den() * c.den());
}

}  // namespace skewres
