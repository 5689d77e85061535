#ifndef SKEWRES_PRIME_FIELD_HPP
#define SKEWRES_PRIME_FIELD_HPP

#include <cstdint>

#include "skewres/errors.hpp"

namespace skewres {

// GF(p) with elements stored as uint32_t in [0, p).  All arithmetic is done
// in 64 bits before reduction, so p may be any prime below 2^31.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  PrimeField() : p_(2) {}
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return p_ == 1 ? 0 : 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return Elem(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return b <= a ? a - b : Elem(a + p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return Elem((std::uint64_t(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // Reduces an arbitrary signed integer into [0, p).
  Elem from_int(std::int64_t v) const {
    std::int64_t m = v % std::int64_t(p_);
    if (m < 0) m += p_;
    return Elem(m);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace skewres

#endif
