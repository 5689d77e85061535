#include "skewres/taylor.hpp"

#include <algorithm>

namespace skewres {

SkewPoly central_modulus(const FieldTower& tw, std::uint32_t z,
                         std::uint32_t m) {
  FpPoly lin(tw.fp_ptr(), {tw.fp().neg(z), 1});
  return mul_center(SkewPoly::one(&tw), lin.pow(m));
}

QuotientElement::QuotientElement(const FieldTower* tw, std::uint32_t z,
                                 std::uint32_t m, const SkewPoly& value)
    : tw_(tw), z_(z), m_(m), rep_(SkewPoly::zero(tw)) {
  if (z == 0 || z >= tw->p()) fail(errc::zero_point, "quotient point must lie in F\\{0}");
  if (m < 1) fail(errc::internal, "precision exponent must be >= 1");
  const PrimeField& fp = tw->fp();
  const long r = long(tw->r());
  FpPoly lin(&fp, {fp.neg(z), 1});
  FpPoly mod = lin.pow(m);
  SkewPoly folded = SkewPoly::zero(tw);
  if (value.is_polynomial()) {
    folded = value;
  } else {
    // X^i = Y^t X^s with 0 <= s < r; Y^{-1} is invertible mod (Y-z)^m
    FpPoly yinv =
        FpPoly::monomial(&fp, 1, 1).inverse_mod(mod);
    for (long i = value.valuation(); i <= value.degree(); ++i) {
      KElement a = value.coeff(i);
      if (a.is_zero()) continue;
      long s = ((i % r) + r) % r;
      long t = (i - s) / r;
      FpPoly central = t >= 0 ? FpPoly::monomial(&fp, 1, std::size_t(t)) % mod
                              : yinv.pow(std::size_t(-t)) % mod;
      folded = folded + mul_center(SkewPoly::monomial(tw, a, s), central);
    }
  }
  rep_ = right_divide(folded, central_modulus(*tw, z, m)).second;
}

void QuotientElement::check_compatible(const QuotientElement& o) const {
  if (z_ != o.z_ || m_ != o.m_)
    fail(errc::mixed_moduli, "operands live in different quotients");
}

bool QuotientElement::operator==(const QuotientElement& o) const {
  check_compatible(o);
  return rep_ == o.rep_;
}

QuotientElement QuotientElement::operator+(const QuotientElement& o) const {
  check_compatible(o);
  return QuotientElement(tw_, z_, m_, rep_ + o.rep_);
}

QuotientElement QuotientElement::operator-(const QuotientElement& o) const {
  check_compatible(o);
  return QuotientElement(tw_, z_, m_, rep_ - o.rep_);
}

QuotientElement QuotientElement::operator*(const QuotientElement& o) const {
  check_compatible(o);
  return QuotientElement(tw_, z_, m_, rep_ * o.rep_);
}

QuotientElement QuotientElement::scaled(const KElement& a) const {
  return QuotientElement(tw_, z_, m_, rep_.scaled_left(a));
}

QuotientElement QuotientElement::at_precision(std::uint32_t m2) const {
  return QuotientElement(tw_, z_, m2, rep_);
}

QuotientElement QuotientElement::divided_by_modulus() const {
  if (m_ < 2) fail(errc::internal, "cannot divide at precision 1");
  auto [q, rem] = right_divide(rep_, central_modulus(*tw_, z_, 1));
  if (!rem.is_zero())
    fail(errc::internal, "element not divisible by the modulus");
  return QuotientElement(tw_, z_, m_ - 1, q);
}

AdmissibleLift hensel_lift(const FieldTower& tw, std::uint32_t z,
                           std::uint32_t m) {
  const PrimeField& fp = tw.fp();
  if (z == 0 || z % fp.p() == 0) fail(errc::zero_point, "lift point must be nonzero");
  z %= fp.p();
  if (m < 1) fail(errc::internal, "lift precision must be >= 1");
  KElement a = tw.trace_one_element();
  FpPoly lin(tw.fp_ptr(), {fp.neg(z), 1});
  FpPoly modulus = lin.pow(m);
  KPoly modulus_k = tw.embed(modulus);

  FpPoly zm = FpPoly::zero(tw.fp_ptr());
  FpPoly linpow = FpPoly::one(tw.fp_ptr());
  for (std::uint32_t step = 1; step < m; ++step) {
    linpow = linpow * lin;  // (Y-z)^step
    // N(CX) = N_r(C) Y - z for C = 1 + a Z
    KPoly c = KPoly::one(tw.kfield()) + tw.embed(zm).scaled(a);
    KPoly nr = KPoly::one(tw.kfield());
    for (std::uint32_t t = 0; t < tw.r(); ++t)
      nr = (nr * tw.theta_poly(c, long(t))) % modulus_k;
    FpPoly ncx =
        (tw.to_center(nr).shifted(1) - FpPoly::constant(tw.fp_ptr(), z)) %
        modulus;
    auto [s, rem] = ncx.divmod(linpow);
    if (!rem.is_zero()) fail(errc::internal, "lift invariant broken");
    // solve S + Y * Z = 0 mod (Y - z) for a constant Z
    std::uint32_t zc = fp.neg(fp.div(s.eval(z), z));
    zm = zm + linpow.scaled(zc);
  }
  KPoly c = KPoly::one(tw.kfield()) + tw.embed(zm).scaled(a);
  return AdmissibleLift{z, m, c, a};
}

TaylorSeries::TaylorSeries(const FieldTower* tw, std::uint32_t z, long val,
                           std::vector<QuotientElement> coeffs, long prec)
    : tw_(tw), z_(z), val_(val), c_(std::move(coeffs)), prec_(prec) {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + long(lead));
    val_ += long(lead);
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) val_ = 0;
}

QuotientElement TaylorSeries::coeff(long n) const {
  if (c_.empty() || n < val_ || n >= val_ + long(c_.size()))
    return QuotientElement::zero(tw_, z_, 1);
  return c_[std::size_t(n - val_)];
}

TaylorSeries TaylorSeries::operator+(const TaylorSeries& o) const {
  if (z_ != o.z_) fail(errc::mixed_moduli, "series at different points");
  long prec = std::min(prec_, o.prec_);
  long lo = std::min(valuation(), o.valuation());
  std::vector<QuotientElement> cs;
  for (long n = lo; n < prec; ++n) cs.push_back(coeff(n) + o.coeff(n));
  return TaylorSeries(tw_, z_, lo, std::move(cs), prec);
}

TaylorSeries TaylorSeries::operator*(const TaylorSeries& o) const {
  if (z_ != o.z_) fail(errc::mixed_moduli, "series at different points");
  long prec = std::min(prec_ + o.valuation(), o.prec_ + valuation());
  if (is_zero_to_precision() || o.is_zero_to_precision())
    return TaylorSeries(tw_, z_, 0, {}, prec);
  long lo = valuation() + o.valuation();
  std::vector<QuotientElement> cs;
  for (long n = lo; n < prec; ++n) {
    QuotientElement acc = QuotientElement::zero(tw_, z_, 1);
    for (long i = valuation(); i <= n - o.valuation() && i < prec_; ++i)
      acc = acc + coeff(i) * o.coeff(n - i);
    cs.push_back(acc);
  }
  return TaylorSeries(tw_, z_, lo, std::move(cs), prec);
}

bool TaylorSeries::agrees_with(const TaylorSeries& o) const {
  if (z_ != o.z_) return false;
  long prec = std::min(prec_, o.prec_);
  long lo = std::min(valuation(), o.valuation());
  for (long n = lo; n < prec; ++n)
    if (coeff(n) != o.coeff(n)) return false;
  return true;
}

namespace {

// Shared tail of both expansions: divide the numerator coefficient series
// by the unit part of den(z+T) and shift by T^{-k}.
TaylorSeries divide_by_denominator(const FieldTower& tw, std::uint32_t z,
                                   std::vector<QuotientElement> numc,
                                   const FpPoly& den, std::size_t k,
                                   long prec) {
  const std::size_t need = numc.size();
  FpPoly ds = den.shift_at(z);
  std::vector<std::uint32_t> unit_coeffs;
  for (std::size_t i = k; i < ds.size(); ++i) unit_coeffs.push_back(ds.coeff(i));
  FpPoly unit(tw.fp_ptr(), std::move(unit_coeffs));
  FpPoly inv = unit.series_inverse(std::max<std::size_t>(need, 1));
  std::vector<QuotientElement> out;
  out.reserve(need);
  for (std::size_t n = 0; n < need; ++n) {
    QuotientElement acc = QuotientElement::zero(&tw, z, 1);
    for (std::size_t a = 0; a <= n; ++a) {
      std::uint32_t e = inv.coeff(n - a);
      if (e == 0) continue;
      acc = acc + numc[a].scaled(tw.from_base(e));
    }
    out.push_back(acc);
  }
  return TaylorSeries(&tw, z, -long(k), std::move(out), prec);
}

}  // namespace

TaylorSeries expand_admissible(const SkewFraction& f,
                               const AdmissibleLift& lift, long prec) {
  const FieldTower& tw = f.tower();
  const std::uint32_t z = lift.z;
  FpPoly dcopy = f.den();
  std::size_t k = dcopy.deflate_root(z);
  long need = prec + long(k);
  if (need <= 0 || f.is_zero()) return TaylorSeries(&tw, z, 0, {}, prec);
  if (long(lift.m) < need)
    fail(errc::insufficient_precision,
         "lift precision is too small for the requested expansion");

  const std::uint32_t r = tw.r();
  const std::uint32_t m = lift.m;
  FpPoly lin(tw.fp_ptr(), {tw.fp().neg(z), 1});
  KPoly modulus_k = tw.embed(lin.pow(m));

  // N_j(C) mod (Y-z)^m for 0 <= j < r
  std::vector<KPoly> nj;
  nj.reserve(r);
  KPoly acc = KPoly::one(tw.kfield());
  for (std::uint32_t j = 0; j < r; ++j) {
    nj.push_back(acc);
    acc = (acc * tw.theta_poly(lift.c, long(j))) % modulus_k;
  }

  QuotientElement u(&tw, z, m, f.num());
  std::vector<QuotientElement> numc;
  numc.reserve(std::size_t(need));
  for (long n = 0; n < need; ++n) {
    QuotientElement gn = u.at_precision(1);
    numc.push_back(gn);
    if (n + 1 == need) break;
    SkewPoly img = SkewPoly::zero(&tw);
    for (std::uint32_t j = 0; j < r; ++j) {
      KElement b = gn.rep().coeff(long(j));
      if (b.is_zero()) continue;
      img = img + mul_coef_left(YLaurent(0, nj[j].scaled(b)),
                                SkewPoly::one(&tw))
                      .shifted(long(j));
    }
    QuotientElement img_q(&tw, z, u.m(), img);
    u = (u - img_q).divided_by_modulus();
  }
  return divide_by_denominator(tw, z, std::move(numc), f.den(), k, prec);
}

TaylorSeries expand_canonical(const SkewFraction& f, std::uint32_t z,
                              long prec) {
  const FieldTower& tw = f.tower();
  if (tw.r() % tw.p() == 0)
    fail(errc::characteristic_divides_r,
         "canonical expansion needs p coprime to r");
  if (z == 0 || z >= tw.p()) fail(errc::zero_point, "expansion point must lie in F\\{0}");
  FpPoly den = f.den();
  std::size_t k = den.deflate_root(z);
  long need = prec + long(k);
  if (need <= 0 || f.is_zero()) return TaylorSeries(&tw, z, 0, {}, prec);
  std::vector<QuotientElement> numc;
  numc.reserve(std::size_t(need));
  for (long n = 0; n < need; ++n)
    numc.emplace_back(&tw, z, 1,
                      divided_power(f.num(), std::uint64_t(n)));
  return divide_by_denominator(tw, z, std::move(numc), f.den(), k, prec);
}

XSeries::XSeries(const FieldTower* tw, bool at_infinity, long val,
                 std::vector<KElement> coeffs, long prec)
    : tw_(tw), at_inf_(at_infinity), val_(val), c_(std::move(coeffs)),
      prec_(prec) {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + long(lead));
    val_ += long(lead);
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) val_ = 0;
}

KElement XSeries::coeff(long i) const {
  if (c_.empty() || i < val_ || i >= val_ + long(c_.size()))
    return tw_->zero();
  return c_[std::size_t(i - val_)];
}

XSeries expand_at_zero(const SkewFraction& f, long prec) {
  const FieldTower& tw = f.tower();
  if (f.is_zero()) return XSeries(&tw, false, 0, {}, prec);
  const long r = long(tw.r());
  long v = f.num().valuation();
  if (prec <= v) return XSeries(&tw, false, 0, {}, prec);
  std::size_t ksteps = std::size_t((prec - v) / r) + 1;
  FpPoly inv = f.den().series_inverse(ksteps);
  std::vector<KElement> out(std::size_t(prec - v), tw.zero());
  for (long i = f.num().valuation(); i <= f.num().degree(); ++i) {
    KElement a = f.num().coeff(i);
    if (a.is_zero()) continue;
    for (std::size_t t = 0; t < inv.size(); ++t) {
      std::uint32_t e = inv.coeff(t);
      if (e == 0) continue;
      long expn = i + r * long(t);
      if (expn >= prec) break;
      out[std::size_t(expn - v)] =
          out[std::size_t(expn - v)] + a * tw.from_base(e);
    }
  }
  return XSeries(&tw, false, v, std::move(out), prec);
}

XSeries expand_at_infinity(const SkewFraction& f, long prec) {
  const FieldTower& tw = f.tower();
  if (f.is_zero()) return XSeries(&tw, true, 0, {}, prec);
  const long r = long(tw.r());
  const long e = f.den().degree();
  // 1/den = Xt^{re} V(Xt^r)^{-1} with V(W) = sum den_{e-t} W^t, V(0) = 1
  std::vector<std::uint32_t> vc;
  for (long t = 0; t <= e; ++t) vc.push_back(f.den().coeff(std::size_t(e - t)));
  FpPoly v(tw.fp_ptr(), std::move(vc));
  long lowest = -f.num().degree() + r * e;
  if (prec <= lowest) return XSeries(&tw, true, 0, {}, prec);
  std::size_t ksteps = std::size_t((prec - lowest) / r) + 1;
  FpPoly inv = v.series_inverse(ksteps);
  std::vector<KElement> out(std::size_t(prec - lowest), tw.zero());
  for (long i = f.num().valuation(); i <= f.num().degree(); ++i) {
    KElement a = f.num().coeff(i);
    if (a.is_zero()) continue;
    for (std::size_t t = 0; t < inv.size(); ++t) {
      std::uint32_t c = inv.coeff(t);
      if (c == 0) continue;
      long expn = -i + r * (e + long(t));
      if (expn >= prec || expn < lowest) continue;
      out[std::size_t(expn - lowest)] =
          out[std::size_t(expn - lowest)] + a * tw.from_base(c);
    }
  }
  return XSeries(&tw, true, lowest, std::move(out), prec);
}

OrderRecord order_and_principal(const TaylorSeries& s) {
  if (s.is_zero_to_precision())
    fail(errc::zero_to_precision, "series vanishes to its precision");
  const FieldTower& tw = s.tower();
  const std::uint32_t r = tw.r();
  OrderRecord rec;
  rec.ord = s.valuation();
  rec.principal = s.coeff(rec.ord);
  rec.ord_j.assign(r, std::nullopt);
  rec.principal_j.assign(r, tw.zero());
  for (std::uint32_t j = 0; j < r; ++j) {
    for (long n = s.valuation(); n < s.prec(); ++n) {
      KElement b = s.coeff(n).rep().coeff(long(j));
      if (!b.is_zero()) {
        rec.ord_j[j] = n;
        rec.principal_j[j] = b;
        break;
      }
    }
  }
  return rec;
}

XOrderRecord order_and_principal(const XSeries& s) {
  if (s.is_zero_to_precision())
    fail(errc::zero_to_precision, "series vanishes to its precision");
  const FieldTower& tw = s.tower();
  const long r = long(tw.r());
  XOrderRecord rec;
  rec.ord_j.assign(std::size_t(r), std::nullopt);
  rec.principal_j.assign(std::size_t(r), tw.zero());
  bool have = false;
  for (long j = 0; j < r; ++j) {
    // exponent of the series variable carrying section j at level n
    for (long i = s.valuation(); i < s.prec(); ++i) {
      long rem = s.at_infinity() ? ((-i - j) % r + r) % r : ((i - j) % r + r) % r;
      if (rem != 0) continue;
      if (s.coeff(i).is_zero()) continue;
      long n = s.at_infinity() ? (i + j) / r : (i - j) / r;
      rec.ord_j[std::size_t(j)] = n;
      rec.principal_j[std::size_t(j)] = s.coeff(i);
      break;
    }
    if (rec.ord_j[std::size_t(j)] &&
        (!have || *rec.ord_j[std::size_t(j)] < rec.ord)) {
      rec.ord = *rec.ord_j[std::size_t(j)];
      have = true;
    }
  }
  if (!have) fail(errc::zero_to_precision, "series vanishes to its precision");
  return rec;
}

}  // namespace skewres
