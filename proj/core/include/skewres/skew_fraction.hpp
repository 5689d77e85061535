#ifndef SKEWRES_SKEW_FRACTION_HPP
#define SKEWRES_SKEW_FRACTION_HPP

#include "skewres/skew_poly.hpp"

namespace skewres {

// Skew rational function num/den with a central denominator in F[Y].
// Normal form: den monic with nonzero constant term (powers of Y are moved
// into the numerator's X-valuation); shared degree-1 central factors of the
// denominator are cancelled.  Equality is decided by cross-multiplication,
// which the central denominators make unambiguous.
class SkewFraction {
 public:
  SkewFraction() = default;
  explicit SkewFraction(const FieldTower* tw);
  SkewFraction(SkewPoly num, FpPoly den);
  static SkewFraction from_poly(SkewPoly f);
  static SkewFraction zero(const FieldTower* tw) { return SkewFraction(tw); }
  static SkewFraction one(const FieldTower* tw) {
    return from_poly(SkewPoly::one(tw));
  }

  const SkewPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  const FieldTower& tower() const { return num_.tower(); }
  const FieldTower* tower_ptr() const { return num_.tower_ptr(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const {
    return den_.degree() == 0 && num_.is_polynomial();
  }

  // deg num - r * deg den; kNegInfDeg for 0.
  long degree() const;

  bool operator==(const SkewFraction& o) const;
  bool operator!=(const SkewFraction& o) const { return !(*this == o); }

  SkewFraction operator+(const SkewFraction& o) const;
  SkewFraction operator-(const SkewFraction& o) const;
  SkewFraction operator-() const;
  SkewFraction operator*(const SkewFraction& o) const;
  SkewFraction operator/(const SkewFraction& o) const {
    return *this * o.inverse();
  }

  // Two-sided inverse via the central bound of the numerator.
  SkewFraction inverse() const;

  // sec_j(num)/den as a rational function of Y over K.
  KRat section(long j) const;

 private:
  void normalize();

  SkewPoly num_;
  FpPoly den_;
};

// f * c for a central rational c in F(Y).
SkewFraction mul_central(const SkewFraction& f, const FpRat& c);

}  // namespace skewres

#endif
