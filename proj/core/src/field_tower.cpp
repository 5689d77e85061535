#include "skewres/field_tower.hpp"

#include <algorithm>

namespace skewres {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) fail(errc::config_error, "p must be prime");
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  std::uint64_t acc = 1, base = a % p_;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Elem(acc);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) fail(errc::division_by_zero, "inverse of 0 in GF(p)");
  return pow(a, p_ - 2);
}

namespace {

// x^e mod m over F[x].
FpPoly powmod(const FpPoly& x, std::uint64_t e, const FpPoly& m) {
  FpPoly acc = FpPoly::one(x.field_ptr());
  FpPoly base = x % m;
  while (e) {
    if (e & 1) acc = (acc * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return acc;
}

// Rabin irreducibility test for a monic polynomial of degree d over GF(q).
bool is_irreducible(const FpPoly& f, std::uint64_t q) {
  const long d = f.degree();
  if (d < 1) return false;
  const PrimeField* fp = f.field_ptr();
  FpPoly x = FpPoly::monomial(fp, fp->one(), 1);

  auto qpow = [&](std::uint32_t k) {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < k; ++i) e *= q;
    return e;
  };

  FpPoly top = powmod(x, qpow(std::uint32_t(d)), f);
  if (top != (x % f)) return false;
  for (std::uint32_t ell = 2; ell <= std::uint32_t(d); ++ell) {
    if (std::uint32_t(d) % ell != 0 || !is_prime(ell)) continue;
    FpPoly h = powmod(x, qpow(std::uint32_t(d) / ell), f) - (x % f);
    if (FpPoly::gcd(h, f).degree() != 0) return false;
  }
  return true;
}

}  // namespace

KElement::KElement(const FieldTower* tw, std::vector<std::uint32_t> coords)
    : tw_(tw), c_(std::move(coords)) {
  if (c_.size() != tw->r()) fail(errc::internal, "bad coordinate length");
}

bool KElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](auto v) { return v == 0; });
}

bool KElement::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool KElement::in_base() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::uint32_t KElement::base_value() const {
  if (!in_base()) fail(errc::not_in_field, "element not in the base field");
  return c_[0];
}

KElement KElement::operator+(const KElement& o) const {
  std::vector<std::uint32_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    v[i] = tw_->fp().add(c_[i], o.c_[i]);
  return KElement(tw_, std::move(v));
}

KElement KElement::operator-(const KElement& o) const {
  std::vector<std::uint32_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    v[i] = tw_->fp().sub(c_[i], o.c_[i]);
  return KElement(tw_, std::move(v));
}

KElement KElement::operator-() const {
  std::vector<std::uint32_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = tw_->fp().neg(c_[i]);
  return KElement(tw_, std::move(v));
}

KElement KElement::operator*(const KElement& o) const {
  const PrimeField& fp = tw_->fp();
  FpPoly a(&fp, std::vector<std::uint32_t>(c_));
  FpPoly b(&fp, std::vector<std::uint32_t>(o.c_));
  FpPoly prod = (a * b) % tw_->modulus();
  std::vector<std::uint32_t> v(c_.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = prod.coeff(i);
  return KElement(tw_, std::move(v));
}

KElement KElement::inv() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of 0 in K");
  const PrimeField& fp = tw_->fp();
  FpPoly a(&fp, std::vector<std::uint32_t>(c_));
  FpPoly u = a.inverse_mod(tw_->modulus());
  std::vector<std::uint32_t> v(c_.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = u.coeff(i);
  return KElement(tw_, std::move(v));
}

KElement KElement::operator/(const KElement& o) const { return *this * o.inv(); }

KElement KElement::pow(std::uint64_t e) const {
  KElement acc = tw_->one(), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

KElement KElement::frobenius(long i) const {
  const std::uint32_t r = tw_->r();
  long k = i % long(r);
  if (k < 0) k += r;
  const auto& table = tw_->frob_[std::size_t(k)];
  std::vector<std::uint32_t> v(c_.size(), 0);
  const PrimeField& fp = tw_->fp();
  for (std::size_t b = 0; b < c_.size(); ++b) {
    if (c_[b] == 0) continue;
    for (std::size_t t = 0; t < v.size(); ++t)
      v[t] = fp.add(v[t], fp.mul(c_[b], table[b][t]));
  }
  return KElement(tw_, std::move(v));
}

KElement KElement::trace() const {
  KElement acc = tw_->zero();
  for (std::uint32_t i = 0; i < tw_->r(); ++i) acc = acc + frobenius(i);
  return acc;
}

KElement KElement::norm() const {
  KElement acc = tw_->one();
  for (std::uint32_t i = 0; i < tw_->r(); ++i) acc = acc * frobenius(i);
  return acc;
}

KField::Elem KField::zero() const { return tw->zero(); }
KField::Elem KField::one() const { return tw->one(); }
KField::Elem KField::from_int(std::int64_t v) const { return tw->from_int(v); }

FieldTower::FieldTower(const FieldConfig& cfg)
    : cfg_(cfg), fp_(cfg.p), modulus_(&fp_) {
  if (cfg.s != 1)
    fail(errc::config_error, "only s = 1 towers are supported");
  if (cfg.r < 1) fail(errc::config_error, "r must be >= 1");
  modulus_ = FpPoly(&fp_, std::vector<std::uint32_t>(cfg.modulus));
  if (modulus_.degree() != long(cfg.r))
    fail(errc::config_error, "modulus must have degree exactly r");
  modulus_ = modulus_.monic();
  if (cfg.r > 1 && !is_irreducible(modulus_, fp_.p()))
    fail(errc::config_error, "modulus is reducible over GF(p)");
  kf_.tw = this;
  build_frobenius_tables();

  // theta = x -> x^q must have order exactly r on K.
  if (cfg.r > 1) {
    KElement g = gen();
    for (std::uint32_t i = 1; i < cfg.r; ++i)
      if (g.frobenius(i) == g)
        fail(errc::config_error, "theta has order < r");
    if (g.frobenius(long(cfg.r)) != g)
      fail(errc::config_error, "theta^r is not the identity");
  }
}

void FieldTower::build_frobenius_tables() {
  const std::uint32_t r = cfg_.r;
  frob_.assign(r, std::vector<std::vector<std::uint32_t>>(
                      r, std::vector<std::uint32_t>(r, 0)));
  // theta^0 = id
  for (std::uint32_t k = 0; k < r; ++k) frob_[0][k][k] = 1;
  if (r == 1) return;

  FpPoly x = FpPoly::monomial(&fp_, fp_.one(), 1);
  FpPoly gq = powmod(x, fp_.p(), modulus_);  // image of g under theta
  // theta(g^k) = (g^q)^k mod modulus
  FpPoly acc = FpPoly::one(&fp_);
  std::vector<FpPoly> theta_basis;
  for (std::uint32_t k = 0; k < r; ++k) {
    theta_basis.push_back(acc);
    acc = (acc * gq) % modulus_;
  }
  for (std::uint32_t k = 0; k < r; ++k)
    for (std::uint32_t t = 0; t < r; ++t)
      frob_[1][k][t] = theta_basis[k].coeff(t);

  // Higher powers by composing with the theta matrix.
  for (std::uint32_t i = 2; i < r; ++i) {
    for (std::uint32_t k = 0; k < r; ++k) {
      // apply theta to frob_[i-1][k]
      std::vector<std::uint32_t> img(r, 0);
      for (std::uint32_t b = 0; b < r; ++b) {
        std::uint32_t cb = frob_[i - 1][k][b];
        if (cb == 0) continue;
        for (std::uint32_t t = 0; t < r; ++t)
          img[t] = fp_.add(img[t], fp_.mul(cb, frob_[1][b][t]));
      }
      frob_[i][k] = img;
    }
  }
}

std::uint64_t FieldTower::cardinality() const {
  std::uint64_t c = 1;
  for (std::uint32_t i = 0; i < cfg_.r; ++i) c *= fp_.p();
  return c;
}

KElement FieldTower::zero() const {
  return KElement(this, std::vector<std::uint32_t>(cfg_.r, 0));
}

KElement FieldTower::one() const { return from_base(1); }

KElement FieldTower::gen() const {
  if (cfg_.r == 1) return one();
  std::vector<std::uint32_t> v(cfg_.r, 0);
  v[1] = 1;
  return KElement(this, std::move(v));
}

KElement FieldTower::from_base(std::uint32_t a) const {
  std::vector<std::uint32_t> v(cfg_.r, 0);
  v[0] = a % fp_.p();
  return KElement(this, std::move(v));
}

KElement FieldTower::from_coords(std::vector<std::uint32_t> coords) const {
  if (coords.size() != cfg_.r)
    fail(errc::config_error, "coordinate vector must have length r");
  for (auto& c : coords) c %= fp_.p();
  return KElement(this, std::move(coords));
}

KElement FieldTower::element(std::uint64_t n) const {
  std::vector<std::uint32_t> v(cfg_.r, 0);
  for (std::uint32_t i = 0; i < cfg_.r; ++i) {
    v[i] = std::uint32_t(n % fp_.p());
    n /= fp_.p();
  }
  return KElement(this, std::move(v));
}

KElement FieldTower::trace_one_element() const {
  KElement b = one();
  for (std::uint32_t k = 0; k < cfg_.r; ++k) {
    KElement t = b.trace();
    if (!t.is_zero()) return b * t.inv();
    b = b * gen();
  }
  fail(errc::internal, "trace form degenerate");  // unreachable: Tr surjective
}

KPoly FieldTower::embed(const FpPoly& f) const {
  std::vector<KElement> cs;
  cs.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) cs.push_back(from_base(f.coeff(i)));
  return KPoly(kfield(), std::move(cs));
}

FpPoly FieldTower::to_center(const KPoly& f) const {
  std::vector<std::uint32_t> cs;
  cs.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) cs.push_back(f.coeff(i).base_value());
  return FpPoly(&fp_, std::move(cs));
}

bool FieldTower::is_central(const KPoly& f) const {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f.coeff(i).in_base()) return false;
  return true;
}

KPoly FieldTower::theta_poly(const KPoly& f, long i) const {
  std::vector<KElement> cs;
  cs.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    cs.push_back(f.coeff(k).frobenius(i));
  return KPoly(kfield(), std::move(cs));
}

KRat FieldTower::theta_rat(const KRat& f, long i) const {
  return KRat(theta_poly(f.num(), i), theta_poly(f.den(), i));
}

std::uint32_t binomial_mod_p(std::uint64_t a, std::uint64_t b,
                             const PrimeField& fp) {
  const std::uint64_t p = fp.p();
  std::uint32_t acc = 1;
  while (b > 0) {
    std::uint64_t ad = a % p, bd = b % p;
    if (bd > ad) return 0;
    // binomial(ad, bd) directly
    std::uint32_t num = 1, den = 1;
    for (std::uint64_t t = 0; t < bd; ++t) {
      num = fp.mul(num, std::uint32_t((ad - t) % p));
      den = fp.mul(den, std::uint32_t((t + 1) % p));
    }
    acc = fp.mul(acc, fp.mul(num, fp.inv(den)));
    a /= p;
    b /= p;
  }
  return acc;
}

std::uint32_t padic_binomial(long j, std::uint32_t r, std::uint64_t n,
                             const PrimeField& fp) {
  const std::uint64_t p = fp.p();
  if (r % p == 0)
    fail(errc::characteristic_divides_r, "p divides r");
  std::uint32_t rinv = fp.inv(std::uint32_t(r % p));
  std::uint32_t acc = 1;
  long num = j;
  while (n > 0) {
    // next p-adic digit of j/r
    std::uint32_t digit = fp.mul(fp.from_int(num), rinv);
    std::uint64_t nd = n % p;
    if (nd > digit) return 0;
    std::uint32_t c = 1;
    for (std::uint64_t t = 0; t < nd; ++t)
      c = fp.mul(c, fp.mul(fp.from_int(long(digit) - long(t)),
                           fp.inv(fp.from_int(long(t) + 1))));
    acc = fp.mul(acc, c);
    num = (num - long(digit) * long(r)) / long(p);
    n /= p;
  }
  return acc;
}

std::vector<std::uint32_t> binomial_fraction_coeffs(long j, std::uint32_t r,
                                                    std::size_t n_max,
                                                    const PrimeField& fp) {
  if (r % fp.p() == 0)
    fail(errc::characteristic_divides_r, "p divides r");
  std::vector<std::uint32_t> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    out[n] = padic_binomial(j, r, n, fp);
  return out;
}

}  // namespace skewres
