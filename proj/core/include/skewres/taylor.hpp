#ifndef SKEWRES_TAYLOR_HPP
#define SKEWRES_TAYLOR_HPP

#include <optional>
#include <vector>

#include "skewres/morphisms.hpp"
#include "skewres/skew_fraction.hpp"

namespace skewres {

// (X^r - z)^m as a skew polynomial (central).
SkewPoly central_modulus(const FieldTower& tw, std::uint32_t z,
                         std::uint32_t m);

// Element of A / (Y-z)^m A, held as the canonical remainder of X-degree
// < r*m.  Laurent representatives are folded in through the central inverse
// of Y (z != 0 keeps Y invertible in the quotient).
class QuotientElement {
 public:
  QuotientElement() : tw_(nullptr) {}
  QuotientElement(const FieldTower* tw, std::uint32_t z, std::uint32_t m,
                  const SkewPoly& value);
  static QuotientElement zero(const FieldTower* tw, std::uint32_t z,
                              std::uint32_t m) {
    return QuotientElement(tw, z, m, SkewPoly::zero(tw));
  }

  const FieldTower& tower() const { return *tw_; }
  std::uint32_t z() const { return z_; }
  std::uint32_t m() const { return m_; }
  const SkewPoly& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool operator==(const QuotientElement& o) const;
  bool operator!=(const QuotientElement& o) const { return !(*this == o); }

  QuotientElement operator+(const QuotientElement& o) const;
  QuotientElement operator-(const QuotientElement& o) const;
  QuotientElement operator*(const QuotientElement& o) const;
  QuotientElement scaled(const KElement& a) const;  // a * u

  // Canonical remainder at a lower precision.
  QuotientElement at_precision(std::uint32_t m2) const;
  // Exact division by (Y - z); the value must be divisible and the
  // precision exponent drops by one.
  QuotientElement divided_by_modulus() const;

 private:
  void check_compatible(const QuotientElement& o) const;

  const FieldTower* tw_;
  std::uint32_t z_ = 0, m_ = 1;
  SkewPoly rep_;
};

// Hensel-lifted multiplier C = 1 + a Z_m with Tr(a) = 1, Z_m in F[Y],
// satisfying C = 1 mod (Y-z) and N_r(C) Y = z mod (Y-z)^m, i.e. CX is a
// root of Y - z to precision m.
struct AdmissibleLift {
  std::uint32_t z = 0;
  std::uint32_t m = 1;
  KPoly c;
  KElement a;
};

AdmissibleLift hensel_lift(const FieldTower& tw, std::uint32_t z,
                           std::uint32_t m);

// Truncated Laurent series over A/(Y-z)A in the variable T.  Coefficients
// are known for exponents in [valuation, prec); the leading one is nonzero
// unless the series vanishes to its precision.
class TaylorSeries {
 public:
  TaylorSeries() : tw_(nullptr) {}
  TaylorSeries(const FieldTower* tw, std::uint32_t z, long val,
               std::vector<QuotientElement> coeffs, long prec);

  const FieldTower& tower() const { return *tw_; }
  std::uint32_t z() const { return z_; }
  long prec() const { return prec_; }
  bool is_zero_to_precision() const { return c_.empty(); }
  // Valuation; returns prec() when the series vanishes to its precision.
  long valuation() const { return c_.empty() ? prec_ : val_; }

  QuotientElement coeff(long n) const;

  TaylorSeries operator+(const TaylorSeries& o) const;
  TaylorSeries operator*(const TaylorSeries& o) const;

  // Coefficientwise comparison over the common window of validity.
  bool agrees_with(const TaylorSeries& o) const;

 private:
  const FieldTower* tw_;
  std::uint32_t z_ = 0;
  long val_ = 0;
  std::vector<QuotientElement> c_;
  long prec_ = 0;
};

// tau_z(f) for the admissible morphism attached to a Hensel lift.
// Coefficients are produced for exponents < prec; the lift must satisfy
// lift.m >= prec + k where k is the (Y-z)-adic valuation of the
// denominator, else insufficient_precision.
TaylorSeries expand_admissible(const SkewFraction& f,
                               const AdmissibleLift& lift, long prec);

// Canonical expansion via divided powers (requires p coprime to r).
TaylorSeries expand_canonical(const SkewFraction& f, std::uint32_t z,
                              long prec);

// Truncated skew Laurent series in X (chart at 0) or in Xt = X^{-1} with
// twist theta^{-1} (chart at infinity).
class XSeries {
 public:
  XSeries() : tw_(nullptr) {}
  XSeries(const FieldTower* tw, bool at_infinity, long val,
          std::vector<KElement> coeffs, long prec);

  const FieldTower& tower() const { return *tw_; }
  bool at_infinity() const { return at_inf_; }
  long prec() const { return prec_; }
  bool is_zero_to_precision() const { return c_.empty(); }
  long valuation() const { return c_.empty() ? prec_ : val_; }
  KElement coeff(long i) const;

 private:
  const FieldTower* tw_;
  bool at_inf_ = false;
  long val_ = 0;
  std::vector<KElement> c_;
  long prec_ = 0;
};

XSeries expand_at_zero(const SkewFraction& f, long prec);
XSeries expand_at_infinity(const SkewFraction& f, long prec);

// Orders and principal parts of a Taylor series: the T-adic valuation, the
// per-section valuations ord_j, the leading coefficient and the leading
// per-section coefficients.  ord_j is empty when section j vanishes to the
// precision of the series.
struct OrderRecord {
  long ord = 0;
  QuotientElement principal;
  std::vector<std::optional<long>> ord_j;
  std::vector<KElement> principal_j;
};

OrderRecord order_and_principal(const TaylorSeries& s);

// Same data for an X-series; exponent n for section j corresponds to the
// coefficient of X^{j+rn} at 0 and of Xt^{rn-j} at infinity.
struct XOrderRecord {
  long ord = 0;
  std::vector<std::optional<long>> ord_j;
  std::vector<KElement> principal_j;
};

XOrderRecord order_and_principal(const XSeries& s);

}  // namespace skewres

#endif
