#include "skewres/skew_poly.hpp"

#include <algorithm>

namespace skewres {

YLaurent::YLaurent(long v, KPoly b) : val(v), body(std::move(b)) {
  if (body.is_zero()) {
    val = 0;
    return;
  }
  // strip a zero low end into the valuation
  std::size_t low = 0;
  while (low < body.size() && body.coeff(low).is_zero()) ++low;
  if (low > 0) {
    std::vector<KElement> cs;
    for (std::size_t i = low; i < body.size(); ++i) cs.push_back(body.coeff(i));
    body = KPoly(body.field_ptr(), std::move(cs));
    val += long(low);
  }
}

YLaurent YLaurent::operator+(const YLaurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long v = std::min(val, o.val);
  return YLaurent(v, body.shifted(std::size_t(val - v)) +
                         o.body.shifted(std::size_t(o.val - v)));
}

YLaurent YLaurent::operator-(const YLaurent& o) const {
  if (o.is_zero()) return *this;
  YLaurent n(o.val, -o.body);
  return *this + n;
}

YLaurent YLaurent::operator*(const YLaurent& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  return YLaurent(val + o.val, body * o.body);
}

YLaurent YLaurent::shifted(long k) const {
  if (is_zero()) return *this;
  return YLaurent(val + k, body);
}

YLaurent YLaurent::theta(long i) const {
  if (is_zero()) return *this;
  return YLaurent(val, tower().theta_poly(body, i));
}

KRat YLaurent::to_rational() const {
  const KField* kf = body.field_ptr();
  if (is_zero()) return KRat(kf);
  if (val >= 0) return KRat(body.shifted(std::size_t(val)));
  return KRat(body, KPoly::monomial(kf, kf->one(), std::size_t(-val)));
}

SkewPoly::SkewPoly(const FieldTower* tw, long val, std::vector<KElement> coeffs)
    : tw_(tw), val_(val), c_(std::move(coeffs)) {
  trim();
}

void SkewPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t low = 0;
  while (low < c_.size() && c_[low].is_zero()) ++low;
  if (low > 0) {
    c_.erase(c_.begin(), c_.begin() + long(low));
    val_ += long(low);
  }
  if (c_.empty()) val_ = 0;
}

SkewPoly SkewPoly::constant(const FieldTower* tw, const KElement& a) {
  return SkewPoly(tw, 0, {a});
}

SkewPoly SkewPoly::monomial(const FieldTower* tw, const KElement& a, long k) {
  return SkewPoly(tw, k, {a});
}

KElement SkewPoly::coeff(long i) const {
  if (c_.empty() || i < val_ || i >= val_ + long(c_.size()))
    return tw_->zero();
  return c_[std::size_t(i - val_)];
}

KElement SkewPoly::lc() const {
  if (c_.empty()) fail(errc::zero_input, "leading coefficient of 0");
  return c_.back();
}

bool SkewPoly::operator==(const SkewPoly& o) const {
  return val_ == o.val_ && c_ == o.c_;
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long lo = std::min(val_, o.val_);
  long hi = std::max(degree(), o.degree());
  std::vector<KElement> cs;
  cs.reserve(std::size_t(hi - lo + 1));
  for (long i = lo; i <= hi; ++i) cs.push_back(coeff(i) + o.coeff(i));
  return SkewPoly(tw_, lo, std::move(cs));
}

SkewPoly SkewPoly::operator-() const {
  std::vector<KElement> cs;
  cs.reserve(c_.size());
  for (const auto& a : c_) cs.push_back(-a);
  return SkewPoly(tw_, val_, std::move(cs));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  if (is_zero() || o.is_zero()) return zero(tw_);
  long lo = val_ + o.val_;
  std::vector<KElement> cs(c_.size() + o.c_.size() - 1, tw_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    long xi = val_ + long(i);
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      cs[i + j] = cs[i + j] + c_[i] * o.c_[j].frobenius(xi);
    }
  }
  return SkewPoly(tw_, lo, std::move(cs));
}

SkewPoly SkewPoly::scaled_left(const KElement& a) const {
  if (a.is_zero()) return zero(tw_);
  std::vector<KElement> cs;
  cs.reserve(c_.size());
  for (const auto& b : c_) cs.push_back(a * b);
  return SkewPoly(tw_, val_, std::move(cs));
}

SkewPoly SkewPoly::scaled_right(const KElement& a) const {
  if (a.is_zero()) return zero(tw_);
  std::vector<KElement> cs;
  cs.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    cs.push_back(c_[i] * a.frobenius(val_ + long(i)));
  return SkewPoly(tw_, val_, std::move(cs));
}

SkewPoly SkewPoly::shifted(long k) const {
  if (is_zero()) return *this;
  return SkewPoly(tw_, val_ + k, c_);
}

SkewPoly SkewPoly::x_mul_left(long k) const {
  if (is_zero()) return *this;
  std::vector<KElement> cs;
  cs.reserve(c_.size());
  for (const auto& a : c_) cs.push_back(a.frobenius(k));
  return SkewPoly(tw_, val_ + k, std::move(cs));
}

SkewPoly SkewPoly::theta_map(long t) const {
  if (is_zero()) return *this;
  std::vector<KElement> cs;
  cs.reserve(c_.size());
  for (const auto& a : c_) cs.push_back(a.frobenius(t));
  return SkewPoly(tw_, val_, std::move(cs));
}

SkewPoly SkewPoly::monic_left() const {
  if (is_zero()) fail(errc::zero_input, "monic(0)");
  return scaled_left(lc().inv());
}

SkewPoly mul_center(const SkewPoly& f, const FpPoly& d) {
  const FieldTower* tw = f.tower_ptr();
  if (f.is_zero() || d.is_zero()) return SkewPoly::zero(tw);
  SkewPoly acc = SkewPoly::zero(tw);
  const long r = long(tw->r());
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d.coeff(k) == 0) continue;
    acc = acc + f.scaled_left(tw->from_base(d.coeff(k))).shifted(r * long(k));
  }
  return acc;
}

SkewPoly mul_coef_right(const SkewPoly& f, const YLaurent& c) {
  const FieldTower* tw = f.tower_ptr();
  if (f.is_zero() || c.is_zero()) return SkewPoly::zero(tw);
  const long r = long(tw->r());
  SkewPoly acc = SkewPoly::zero(tw);
  for (long i = f.valuation(); i <= f.degree(); ++i) {
    KElement a = f.coeff(i);
    if (a.is_zero()) continue;
    for (std::size_t k = 0; k < c.body.size(); ++k) {
      KElement b = c.body.coeff(k).frobenius(i);
      if (b.is_zero()) continue;
      acc = acc +
            SkewPoly::monomial(tw, a * b, i + r * (c.val + long(k)));
    }
  }
  return acc;
}

SkewPoly mul_coef_left(const YLaurent& c, const SkewPoly& f) {
  const FieldTower* tw = f.tower_ptr();
  if (f.is_zero() || c.is_zero()) return SkewPoly::zero(tw);
  const long r = long(tw->r());
  SkewPoly acc = SkewPoly::zero(tw);
  for (std::size_t k = 0; k < c.body.size(); ++k) {
    KElement b = c.body.coeff(k);
    if (b.is_zero()) continue;
    acc = acc + f.scaled_left(b).shifted(r * (c.val + long(k)));
  }
  return acc;
}

namespace {

void require_poly(const SkewPoly& f, const char* who) {
  if (!f.is_polynomial())
    fail(errc::internal,
         std::string(who) + " requires nonnegative valuation");
}

}  // namespace

std::pair<SkewPoly, SkewPoly> right_divide(const SkewPoly& a,
                                           const SkewPoly& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "right division by 0");
  require_poly(a, "right_divide");
  require_poly(b, "right_divide");
  const FieldTower* tw = a.tower_ptr();
  SkewPoly q = SkewPoly::zero(tw), r = a;
  const long db = b.degree();
  KElement blc = b.lc();
  while (!r.is_zero() && r.degree() >= db) {
    long k = r.degree() - db;
    KElement t = r.lc() / blc.frobenius(k);
    SkewPoly m = SkewPoly::monomial(tw, t, k);
    q = q + m;
    r = r - m * b;
  }
  return {q, r};
}

std::pair<SkewPoly, SkewPoly> left_divide(const SkewPoly& a,
                                          const SkewPoly& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "left division by 0");
  require_poly(a, "left_divide");
  require_poly(b, "left_divide");
  const FieldTower* tw = a.tower_ptr();
  SkewPoly q = SkewPoly::zero(tw), r = a;
  const long db = b.degree();
  KElement blc = b.lc();
  while (!r.is_zero() && r.degree() >= db) {
    long k = r.degree() - db;
    KElement t = (r.lc() / blc).frobenius(-db);
    SkewPoly m = SkewPoly::monomial(tw, t, k);
    q = q + m;
    r = r - b * m;
  }
  return {q, r};
}

GcdResult rgcd(const SkewPoly& f, const SkewPoly& g) {
  if (f.is_zero() && g.is_zero())
    fail(errc::both_zero, "rgcd(0, 0)");
  const FieldTower* tw = f.tower_ptr();
  SkewPoly r0 = f, r1 = g;
  SkewPoly u0 = SkewPoly::one(tw), u1 = SkewPoly::zero(tw);
  SkewPoly v0 = SkewPoly::zero(tw), v1 = SkewPoly::one(tw);
  while (!r1.is_zero()) {
    auto [q, r2] = right_divide(r0, r1);
    r0 = r1;
    r1 = r2;
    SkewPoly u2 = u0 - q * u1;
    u0 = u1;
    u1 = u2;
    SkewPoly v2 = v0 - q * v1;
    v0 = v1;
    v1 = v2;
  }
  KElement s = r0.lc().inv();
  return {r0.scaled_left(s), u0.scaled_left(s), v0.scaled_left(s)};
}

GcdResult lgcd(const SkewPoly& f, const SkewPoly& g) {
  if (f.is_zero() && g.is_zero())
    fail(errc::both_zero, "lgcd(0, 0)");
  const FieldTower* tw = f.tower_ptr();
  SkewPoly r0 = f, r1 = g;
  SkewPoly u0 = SkewPoly::one(tw), u1 = SkewPoly::zero(tw);
  SkewPoly v0 = SkewPoly::zero(tw), v1 = SkewPoly::one(tw);
  while (!r1.is_zero()) {
    auto [q, r2] = left_divide(r0, r1);
    r0 = r1;
    r1 = r2;
    SkewPoly u2 = u0 - u1 * q;
    u0 = u1;
    u1 = u2;
    SkewPoly v2 = v0 - v1 * q;
    v0 = v1;
    v1 = v2;
  }
  // monic via right multiplication
  KElement s = r0.lc().inv().frobenius(-r0.degree());
  return {r0.scaled_right(s), u0.scaled_right(s), v0.scaled_right(s)};
}

SkewPoly llcm(const SkewPoly& f, const SkewPoly& g) {
  if (f.is_zero() || g.is_zero())
    fail(errc::zero_input, "llcm needs nonzero inputs");
  const FieldTower* tw = f.tower_ptr();
  SkewPoly r0 = f, r1 = g;
  SkewPoly u0 = SkewPoly::one(tw), u1 = SkewPoly::zero(tw);
  while (!r1.is_zero()) {
    auto [q, r2] = right_divide(r0, r1);
    r0 = r1;
    r1 = r2;
    SkewPoly u2 = u0 - q * u1;
    u0 = u1;
    u1 = u2;
  }
  SkewPoly m = u1 * f;  // = -v1 * g, the minimal left common multiple
  return m.monic_left();
}

SkewPoly rlcm(const SkewPoly& f, const SkewPoly& g) {
  if (f.is_zero() || g.is_zero())
    fail(errc::zero_input, "rlcm needs nonzero inputs");
  const FieldTower* tw = f.tower_ptr();
  SkewPoly r0 = f, r1 = g;
  SkewPoly u0 = SkewPoly::one(tw), u1 = SkewPoly::zero(tw);
  while (!r1.is_zero()) {
    auto [q, r2] = left_divide(r0, r1);
    r0 = r1;
    r1 = r2;
    SkewPoly u2 = u0 - u1 * q;
    u0 = u1;
    u1 = u2;
  }
  SkewPoly m = f * u1;
  KElement s = m.lc().inv().frobenius(-m.degree());
  return m.scaled_right(s);
}

std::pair<SkewPoly, FpPoly> central_right_multiple(const SkewPoly& f) {
  if (f.is_zero()) fail(errc::zero_input, "central bound of 0");
  require_poly(f, "central_right_multiple");
  const FieldTower* tw = f.tower_ptr();
  const PrimeField& fp = tw->fp();
  const std::uint32_t r = tw->r();
  const std::size_t dim = std::size_t(r) * std::size_t(f.degree());

  // Reduce Y^i modulo the right ideal f*A (left-division remainders), view
  // the remainders as F-vectors and stop at the first linear dependence.
  SkewPoly ypow = SkewPoly::one(tw);
  SkewPoly ystep = SkewPoly::x(tw).shifted(long(r) - 1);  // X^r

  struct Row {
    std::vector<std::uint32_t> vec;    // reduced remainder vector
    std::vector<std::uint32_t> combo;  // expression in Y^0..Y^i
  };
  std::vector<Row> basis;           // rows with distinct pivots
  std::vector<std::size_t> pivots;  // pivot column per basis row

  std::vector<SkewPoly> quotients;

  for (std::size_t i = 0;; ++i) {
    auto [q, rem] = left_divide(ypow, f);
    quotients.push_back(q);

    std::vector<std::uint32_t> vec(std::max<std::size_t>(dim, 1), 0);
    for (long d = rem.valuation(); !rem.is_zero() && d <= rem.degree(); ++d) {
      KElement cd = rem.coeff(d);
      for (std::uint32_t t = 0; t < r; ++t)
        vec[std::size_t(d) * r + t] = cd.coords()[t];
    }
    std::vector<std::uint32_t> combo(i + 1, 0);
    combo[i] = 1;

    // eliminate against basis
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::uint32_t c = vec[pivots[b]];
      if (c == 0) continue;
      for (std::size_t t = 0; t < vec.size(); ++t)
        vec[t] = fp.sub(vec[t], fp.mul(c, basis[b].vec[t]));
      for (std::size_t t = 0; t < basis[b].combo.size(); ++t)
        combo[t] = fp.sub(combo[t], fp.mul(c, basis[b].combo[t]));
    }

    std::size_t piv = vec.size();
    for (std::size_t t = 0; t < vec.size(); ++t)
      if (vec[t] != 0) {
        piv = t;
        break;
      }

    if (piv == vec.size()) {
      // dependence found: combo gives N = sum combo[k] Y^k in f*A
      FpPoly n(&fp, std::vector<std::uint32_t>(combo));
      SkewPoly g = SkewPoly::zero(tw);
      for (std::size_t k = 0; k < combo.size(); ++k) {
        if (combo[k] == 0) continue;
        g = g + quotients[k].scaled_left(tw->from_base(combo[k]));
      }
      std::uint32_t s = fp.inv(n.lc());
      n = n.scaled(s);
      g = g.scaled_left(tw->from_base(s));
      return {g, n};
    }

    std::uint32_t pinv = fp.inv(vec[piv]);
    for (auto& t : vec) t = fp.mul(t, pinv);
    for (auto& t : combo) t = fp.mul(t, pinv);
    basis.push_back(Row{std::move(vec), std::move(combo)});
    pivots.push_back(piv);

    ypow = ypow * ystep;
  }
}

YLaurent section(const SkewPoly& f, long j) {
  const FieldTower* tw = f.tower_ptr();
  const long r = long(tw->r());
  if (f.is_zero()) return YLaurent(tw);
  // indices i with j + i*r in [val, deg]
  long lo = f.valuation() - j;
  long ilo = lo >= 0 ? (lo + r - 1) / r : -((-lo) / r);
  long hi = f.degree() - j;
  long ihi = hi >= 0 ? hi / r : -((-hi + r - 1) / r);
  if (ilo > ihi) return YLaurent(tw);
  std::vector<KElement> cs;
  cs.reserve(std::size_t(ihi - ilo + 1));
  for (long i = ilo; i <= ihi; ++i) cs.push_back(f.coeff(j + i * r));
  return YLaurent(ilo, KPoly(tw->kfield(), std::move(cs)));
}

SkewPoly from_sections(const FieldTower* tw,
                       const std::vector<YLaurent>& sections) {
  SkewPoly acc = SkewPoly::zero(tw);
  for (std::size_t j = 0; j < sections.size(); ++j) {
    if (sections[j].is_zero()) continue;
    acc = acc + mul_coef_left(sections[j], SkewPoly::one(tw)).shifted(long(j));
  }
  return acc;
}

}  // namespace skewres
