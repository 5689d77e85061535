#ifndef SKEWRES_POLYNOMIAL_HPP
#define SKEWRES_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "skewres/errors.hpp"

namespace skewres {

// Degree of the zero polynomial.  Kept very negative so that degree sums of
// nonzero polynomials can never collide with it at desk scale.
inline constexpr long kNegInfDeg = std::numeric_limits<long>::min() / 4;

// Dense univariate polynomial over a field context.  The context type F
// provides Elem, zero/one, add/sub/mul/neg/inv, is_zero and eq; the
// polynomial stores a pointer to it (contexts are immutable and outlive all
// values).  Coefficient 0 is the constant term.
template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;

  Polynomial() : fld_(nullptr) {}
  explicit Polynomial(const F* fld) : fld_(fld) {}
  Polynomial(const F* fld, std::vector<Elem> coeffs)
      : fld_(fld), c_(std::move(coeffs)) {
    trim();
  }

  static Polynomial zero(const F* fld) { return Polynomial(fld); }
  static Polynomial constant(const F* fld, Elem a) {
    return Polynomial(fld, {a});
  }
  static Polynomial one(const F* fld) { return constant(fld, fld->one()); }
  static Polynomial monomial(const F* fld, Elem a, std::size_t k) {
    std::vector<Elem> c(k + 1, fld->zero());
    c[k] = a;
    return Polynomial(fld, std::move(c));
  }

  const F& field() const { return *fld_; }
  const F* field_ptr() const { return fld_; }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return c_.empty() ? kNegInfDeg : long(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  // Coefficient access valid for any k >= 0; out of range reads as zero.
  Elem coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : fld_->zero();
  }
  const std::vector<Elem>& coeffs() const { return c_; }

  Elem lc() const {
    if (c_.empty()) fail(errc::zero_input, "leading coefficient of 0");
    return c_.back();
  }

  bool operator==(const Polynomial& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!fld_->eq(c_[i], o.c_[i])) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& a : r.c_) a = fld_->neg(a);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r(fld_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), fld_->zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = fld_->add(coeff(i), o.coeff(i));
    r.trim();
    return r;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return zero(fld_);
    Polynomial r(fld_);
    r.c_.assign(c_.size() + o.c_.size() - 1, fld_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (fld_->is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] = fld_->add(r.c_[i + j], fld_->mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
  }

  Polynomial scaled(Elem a) const {
    Polynomial r(fld_);
    if (fld_->is_zero(a)) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = fld_->mul(x, a);
    r.trim();
    return r;
  }

  // Multiplication by Y^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Polynomial r(fld_);
    r.c_.assign(c_.size() + k, fld_->zero());
    std::copy(c_.begin(), c_.end(), r.c_.begin() + long(k));
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) fail(errc::zero_input, "monic(0)");
    return scaled(fld_->inv(lc()));
  }

  Elem eval(Elem x) const {
    Elem acc = fld_->zero();
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = fld_->add(fld_->mul(acc, x), c_[i]);
    return acc;
  }

  Polynomial derivative() const {
    Polynomial r(fld_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.c_[i - 1] = fld_->mul(c_[i], fld_->from_int(std::int64_t(i)));
    r.trim();
    return r;
  }

  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) fail(errc::division_by_zero, "polynomial division by 0");
    Polynomial q(fld_), r(*this);
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(std::size_t(r.degree() - d.degree()) + 1, fld_->zero());
    Elem dinv = fld_->inv(d.lc());
    while (!r.is_zero() && r.degree() >= d.degree()) {
      std::size_t k = std::size_t(r.degree() - d.degree());
      Elem t = fld_->mul(r.lc(), dinv);
      q.c_[k] = fld_->add(q.c_[k], t);
      for (std::size_t i = 0; i < d.c_.size(); ++i)
        r.c_[i + k] = fld_->sub(r.c_[i + k], fld_->mul(t, d.c_[i]));
      r.trim();
    }
    q.trim();
    return {q, r};
  }
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  // Monic gcd.
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
  }

  // Returns (g, u, v) with u*a + v*b = g, g monic (or zero).
  static std::tuple<Polynomial, Polynomial, Polynomial> ext_gcd(
      const Polynomial& a, const Polynomial& b) {
    const F* fld = a.fld_ ? a.fld_ : b.fld_;
    Polynomial r0 = a, r1 = b;
    Polynomial u0 = one(fld), u1 = zero(fld);
    Polynomial v0 = zero(fld), v1 = one(fld);
    while (!r1.is_zero()) {
      auto [q, r2] = r0.divmod(r1);
      r0 = std::move(r1);
      r1 = std::move(r2);
      Polynomial u2 = u0 - q * u1;
      u0 = std::move(u1);
      u1 = std::move(u2);
      Polynomial v2 = v0 - q * v1;
      v0 = std::move(v1);
      v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Elem s = fld->inv(r0.lc());
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
  }

  // Inverse modulo m; fails if gcd(this, m) != 1.
  Polynomial inverse_mod(const Polynomial& m) const {
    auto [g, u, v] = ext_gcd(*this % m, m);
    (void)v;
    if (g.degree() != 0)
      fail(errc::division_by_zero, "non-invertible element modulo m");
    return u % m;
  }

  // Multiplicative inverse as a power series, modulo Y^n.
  Polynomial series_inverse(std::size_t n) const {
    if (is_zero() || fld_->is_zero(coeff(0)))
      fail(errc::division_by_zero, "series inverse needs a unit constant term");
    Polynomial r(fld_);
    r.c_.assign(n, fld_->zero());
    Elem c0inv = fld_->inv(coeff(0));
    r.c_[0] = c0inv;
    for (std::size_t k = 1; k < n; ++k) {
      Elem acc = fld_->zero();
      for (std::size_t i = 1; i <= k; ++i)
        acc = fld_->add(acc, fld_->mul(coeff(i), r.c_[k - i]));
      r.c_[k] = fld_->neg(fld_->mul(acc, c0inv));
    }
    r.trim();
    return r;
  }

  Polynomial truncated(std::size_t n) const {
    Polynomial r(fld_);
    r.c_.assign(c_.begin(),
                c_.begin() + long(std::min(c_.size(), n)));
    r.trim();
    return r;
  }

  // Coefficients of P(z + u) as a polynomial in u (repeated synthetic
  // division by (Y - z); exact in any characteristic).
  Polynomial shift_at(Elem z) const {
    Polynomial r(fld_);
    if (is_zero()) return r;
    std::size_t n = c_.size();
    r.c_.assign(n, fld_->zero());
    std::vector<Elem> w = c_;
    for (std::size_t k = 0; k < n; ++k) {
      Elem carry = fld_->zero();
      for (std::size_t i = n - k; i-- > 0;) {
        Elem t = fld_->add(w[i], fld_->mul(z, carry));
        w[i] = carry;
        carry = t;
      }
      r.c_[k] = carry;
    }
    r.trim();
    return r;
  }

  Polynomial pow(std::uint64_t e) const {
    Polynomial acc = one(fld_), base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // Divides out (Y - z)^m with m maximal; returns m and overwrites *this.
  std::size_t deflate_root(Elem z) {
    std::size_t m = 0;
    Polynomial lin(fld_, {fld_->neg(z), fld_->one()});
    while (!is_zero() && fld_->is_zero(eval(z))) {
      *this = divmod(lin).first;
      ++m;
    }
    return m;
  }

 private:
  void trim() {
    while (!c_.empty() && fld_->is_zero(c_.back())) c_.pop_back();
  }

  const F* fld_;
  std::vector<Elem> c_;
};

// Rational function num/den over a field context, kept gcd-reduced with a
// monic denominator.
template <class F>
class Rational {
 public:
  using Poly = Polynomial<F>;
  using Elem = typename F::Elem;

  Rational() = default;
  explicit Rational(const F* fld)
      : num_(Poly::zero(fld)), den_(Poly::one(fld)) {}
  explicit Rational(Poly num)
      : num_(std::move(num)), den_(Poly::one(num_.field_ptr())) {}
  Rational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const F& field() const { return num_.field(); }
  const F* field_ptr() const { return num_.field_ptr(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) fail(errc::division_by_zero, "rational division by 0");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational inverse() const {
    if (is_zero()) fail(errc::zero_inverse, "inverse of 0");
    return Rational(den_, num_);
  }
  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return Rational(num_.pow(std::uint64_t(e)), den_.pow(std::uint64_t(e)));
  }

  bool has_pole_at(Elem z) const {
    return num_.field().is_zero(den_.eval(z));
  }
  Elem eval(Elem z) const {
    Elem d = den_.eval(z);
    if (num_.field().is_zero(d))
      fail(errc::division_by_zero, "evaluation at a pole");
    return num_.field().mul(num_.eval(z), num_.field().inv(d));
  }

 private:
  void normalize() {
    if (den_.is_zero()) fail(errc::division_by_zero, "zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::one(num_.field_ptr());
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
    Elem s = num_.field().inv(den_.lc());
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }

  Poly num_, den_;
};

}  // namespace skewres

#endif
