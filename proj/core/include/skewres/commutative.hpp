#ifndef SKEWRES_COMMUTATIVE_HPP
#define SKEWRES_COMMUTATIVE_HPP

#include <vector>

#include "skewres/field_tower.hpp"

namespace skewres {

// A point of the residue theory: an element of F, the origin, or infinity.
struct Point {
  enum class Kind { finite, zero, infinity };

  Kind kind = Kind::zero;
  std::uint32_t z = 0;

  static Point finite(std::uint32_t z) { return {Kind::finite, z}; }
  static Point origin() { return {Kind::zero, 0}; }
  static Point infinity() { return {Kind::infinity, 0}; }

  bool operator==(const Point& o) const {
    return kind == o.kind && (kind != Kind::finite || z == o.z);
  }
};

// Fails with unsplit_denominator unless den factors into degree-1 factors
// over F.
void check_split(const KPoly& den, const FieldTower& tw);

// Classical residue of the differential form C dY at a point.  The
// denominator must split over F; infinity goes through Y -> 1/W with the
// -1/W^2 Jacobian so arbitrary pole orders are covered by one code path.
KElement residue_at(const KRat& c, const Point& pt, const FieldTower& tw);

// Local residue without the split screening.  The computation only ever
// inspects the factor at the point itself; the zeta-root identity needs
// this because substituting Y -> y^r turns split denominators into
// generally unsplit ones.
KElement residue_at_local(const KRat& c, const Point& pt,
                          const FieldTower& tw);

// beta-coordinates of rho_z(C dY): coordinate i is res_z(theta^i(C) dY).
std::vector<KElement> rho(const KRat& c, const Point& pt,
                          const FieldTower& tw);

// Substitution Y -> y^r into the commutative variable y.
KRat substitute_root(const KRat& c_in_y_power_r, const FieldTower& tw);

// res_zeta(substitute_root(C) dy) for zeta in F.
KElement residue_at_zeta(const KRat& c, std::uint32_t zeta,
                         const FieldTower& tw);

}  // namespace skewres

#endif
