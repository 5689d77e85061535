#ifndef SKEWRES_SKEW_POLY_HPP
#define SKEWRES_SKEW_POLY_HPP

#include <tuple>
#include <utility>
#include <vector>

#include "skewres/field_tower.hpp"

namespace skewres {

// Valuation of the zero Laurent polynomial.
inline constexpr long kPosInfVal = -kNegInfDeg;

// Laurent polynomial in Y over K, used for section values and coefficient
// rings.  body.coeff(i) is the coefficient of Y^{val+i}; zero has empty body
// and val 0.
struct YLaurent {
  long val = 0;
  KPoly body;

  YLaurent() = default;
  explicit YLaurent(const FieldTower* tw) : body(tw->kfield()) {}
  YLaurent(long v, KPoly b);

  bool is_zero() const { return body.is_zero(); }
  const FieldTower& tower() const { return *body.field().tw; }

  bool operator==(const YLaurent& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return val == o.val && body == o.body;
  }
  bool operator!=(const YLaurent& o) const { return !(*this == o); }

  YLaurent operator+(const YLaurent& o) const;
  YLaurent operator-(const YLaurent& o) const;
  YLaurent operator*(const YLaurent& o) const;
  YLaurent shifted(long k) const;  // * Y^k
  YLaurent theta(long i) const;    // theta^i on coefficients

  // As a rational function of Y (negative valuation goes to the
  // denominator).
  KRat to_rational() const;
};

// Skew Laurent polynomial over K in X with the twist X a = theta(a) X.
// coeff index is absolute: coefficient of X^{valuation()+i} is held at slot
// i.  The zero value has empty coefficients and valuation +inf.
class SkewPoly {
 public:
  SkewPoly() : tw_(nullptr) {}
  explicit SkewPoly(const FieldTower* tw) : tw_(tw) {}
  SkewPoly(const FieldTower* tw, long val, std::vector<KElement> coeffs);

  static SkewPoly zero(const FieldTower* tw) { return SkewPoly(tw); }
  static SkewPoly constant(const FieldTower* tw, const KElement& a);
  static SkewPoly one(const FieldTower* tw) {
    return constant(tw, tw->one());
  }
  static SkewPoly monomial(const FieldTower* tw, const KElement& a, long k);
  static SkewPoly x(const FieldTower* tw) {
    return monomial(tw, tw->one(), 1);
  }
  // Coefficients starting at X^0.
  static SkewPoly from_coeffs(const FieldTower* tw,
                              std::vector<KElement> coeffs) {
    return SkewPoly(tw, 0, std::move(coeffs));
  }

  const FieldTower& tower() const { return *tw_; }
  const FieldTower* tower_ptr() const { return tw_; }

  bool is_zero() const { return c_.empty(); }
  long valuation() const { return c_.empty() ? kPosInfVal : val_; }
  long degree() const {
    return c_.empty() ? kNegInfDeg : val_ + long(c_.size()) - 1;
  }
  bool is_polynomial() const { return c_.empty() || val_ >= 0; }
  std::size_t term_span() const { return c_.size(); }

  // Coefficient of X^i for any integer i.
  KElement coeff(long i) const;
  KElement lc() const;

  bool operator==(const SkewPoly& o) const;
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator-() const;
  SkewPoly operator*(const SkewPoly& o) const;

  SkewPoly scaled_left(const KElement& a) const;   // a * f
  SkewPoly scaled_right(const KElement& a) const;  // f * a
  SkewPoly shifted(long k) const;                  // f * X^k
  SkewPoly x_mul_left(long k) const;               // X^k * f
  SkewPoly theta_map(long t) const;  // theta^t applied to all coefficients

  // Left-multiplication normalization to a monic leading coefficient.
  SkewPoly monic_left() const;

 private:
  void trim();

  const FieldTower* tw_;
  long val_ = 0;
  std::vector<KElement> c_;
};

// f * D for central D in F[Y] (Y = X^r).
SkewPoly mul_center(const SkewPoly& f, const FpPoly& d);
// f * C(Y) and C(Y) * f for C with coefficients in K.
SkewPoly mul_coef_right(const SkewPoly& f, const YLaurent& c);
SkewPoly mul_coef_left(const YLaurent& c, const SkewPoly& f);

// Euclidean divisions on K[X; theta] (nonnegative valuations, B != 0):
// right: A = Q*B + R, left: A = B*Q + R, both with deg R < deg B.
std::pair<SkewPoly, SkewPoly> right_divide(const SkewPoly& a,
                                           const SkewPoly& b);
std::pair<SkewPoly, SkewPoly> left_divide(const SkewPoly& a,
                                          const SkewPoly& b);

// Right gcd with Bezout cofactors: u*f + v*g = d,   d monic,
// f and g both in A*d.
struct GcdResult {
  SkewPoly d, u, v;
};
GcdResult rgcd(const SkewPoly& f, const SkewPoly& g);
// Left gcd: f*u + g*v = d, d monic, f and g in d*A.
GcdResult lgcd(const SkewPoly& f, const SkewPoly& g);
// Least common multiples: llcm in A*f intersect A*g, rlcm in f*A intersect
// g*A; both monic and of minimal degree.
SkewPoly llcm(const SkewPoly& f, const SkewPoly& g);
SkewPoly rlcm(const SkewPoly& f, const SkewPoly& g);

// Minimal-degree central bound: returns (g, N) with f*g = N = g*f,
// N in F[Y] monic of minimal Y-degree.  f must be nonzero with
// valuation >= 0.
std::pair<SkewPoly, FpPoly> central_right_multiple(const SkewPoly& f);

// Section operator: sec_j(sum a_i X^i) = sum_i a_{j+ir} Y^i; defined for
// every integer j.
YLaurent section(const SkewPoly& f, long j);
// Inverse of the section decomposition: sum_j sections[j] * X^j for
// j = 0..r-1.
SkewPoly from_sections(const FieldTower* tw,
                       const std::vector<YLaurent>& sections);

}  // namespace skewres

#endif
