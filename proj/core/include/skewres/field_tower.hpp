#ifndef SKEWRES_FIELD_TOWER_HPP
#define SKEWRES_FIELD_TOWER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "skewres/polynomial.hpp"
#include "skewres/prime_field.hpp"

namespace skewres {

class FieldTower;

// Element of K = F[g]/(modulus), stored on the power basis 1, g, ..., g^{r-1}
// with coordinates in F = GF(q).  Values are immutable after construction
// and safe to share across threads.
class KElement {
 public:
  KElement() : tw_(nullptr) {}
  KElement(const FieldTower* tw, std::vector<std::uint32_t> coords);

  const FieldTower& tower() const { return *tw_; }
  const FieldTower* tower_ptr() const { return tw_; }
  const std::vector<std::uint32_t>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // True iff the element lies in the base field F.
  bool in_base() const;
  // Base-field value; fails with not_in_field otherwise.
  std::uint32_t base_value() const;

  KElement operator+(const KElement& o) const;
  KElement operator-(const KElement& o) const;
  KElement operator*(const KElement& o) const;
  KElement operator/(const KElement& o) const;
  KElement operator-() const;
  bool operator==(const KElement& o) const { return c_ == o.c_; }
  bool operator!=(const KElement& o) const { return c_ != o.c_; }

  KElement inv() const;
  KElement pow(std::uint64_t e) const;

  // theta^i with theta : x -> x^q; i may be negative.
  KElement frobenius(long i) const;
  KElement trace() const;
  KElement norm() const;

 private:
  const FieldTower* tw_;
  std::vector<std::uint32_t> c_;
};

// Field context adapter so Polynomial<KField> works over K.
struct KField {
  using Elem = KElement;

  const FieldTower* tw = nullptr;

  Elem zero() const;
  Elem one() const;
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inv(); }
  Elem from_int(std::int64_t v) const;
};

using FpPoly = Polynomial<PrimeField>;
using FpRat = Rational<PrimeField>;
using KPoly = Polynomial<KField>;
using KRat = Rational<KField>;

struct FieldConfig {
  std::uint32_t p = 5;
  std::uint32_t s = 1;  // v1 supports s = 1 only; kept for forward compat
  std::uint32_t r = 2;
  std::vector<std::uint32_t> modulus;  // constant term first, degree r
};

// The tower F = GF(q) inside K = GF(q^r) together with the Frobenius
// generator theta of Gal(K/F).  Immutable; construction validates the
// config (p prime, modulus irreducible of degree r, theta of exact order r).
class FieldTower {
 public:
  explicit FieldTower(const FieldConfig& cfg);

  const FieldConfig& config() const { return cfg_; }
  const PrimeField& fp() const { return fp_; }
  const PrimeField* fp_ptr() const { return &fp_; }
  const KField* kfield() const { return &kf_; }

  std::uint32_t p() const { return fp_.p(); }
  std::uint32_t q() const { return fp_.p(); }  // q = p^s with s = 1
  std::uint32_t r() const { return cfg_.r; }
  std::uint64_t cardinality() const;
  const FpPoly& modulus() const { return modulus_; }

  KElement zero() const;
  KElement one() const;
  KElement gen() const;  // the class of g; equals 1 when r = 1
  KElement from_base(std::uint32_t a) const;
  KElement from_int(std::int64_t v) const { return from_base(fp_.from_int(v)); }
  KElement from_coords(std::vector<std::uint32_t> coords) const;
  // Element number n in the deterministic enumeration of K
  // (little-endian base-p coordinates).
  KElement element(std::uint64_t n) const;

  // Deterministic element with trace 1: first basis vector g^k of nonzero
  // trace, rescaled.
  KElement trace_one_element() const;

  // Embedding F[Y] -> K[Y] and its partial inverse.
  KPoly embed(const FpPoly& f) const;
  FpPoly to_center(const KPoly& f) const;  // fails unless all coeffs in F
  bool is_central(const KPoly& f) const;

  // theta^i applied to every coefficient.
  KPoly theta_poly(const KPoly& f, long i) const;
  KRat theta_rat(const KRat& f, long i) const;

 private:
  friend class KElement;

  void build_frobenius_tables();

  FieldConfig cfg_;
  PrimeField fp_;
  KField kf_;
  FpPoly modulus_;
  // frob_[i][k] = coordinates of theta^i(g^k), for 0 <= i, k < r.
  std::vector<std::vector<std::vector<std::uint32_t>>> frob_;
};

// Coefficients c_0..c_{n_max} of the binomial series (1+u)^{j/r} reduced
// modulo p.  They satisfy c_0 = 1 and c_{n+1} = c_n * (j/r - n)/(n+1)
// whenever n+1 is invertible; values for all n come from the p-adic digit
// product, which agrees with the recurrence and stays defined past n >= p.
// Fails with characteristic_divides_r when p | r.
std::vector<std::uint32_t> binomial_fraction_coeffs(long j, std::uint32_t r,
                                                    std::size_t n_max,
                                                    const PrimeField& fp);

// binomial(j/r, n) mod p for a single n (p-adic Lucas product).
std::uint32_t padic_binomial(long j, std::uint32_t r, std::uint64_t n,
                             const PrimeField& fp);

// binomial(a, b) mod p for nonnegative integers (Lucas).
std::uint32_t binomial_mod_p(std::uint64_t a, std::uint64_t b,
                             const PrimeField& fp);

}  // namespace skewres

#endif
