#ifndef SKEWRES_RESIDUES_HPP
#define SKEWRES_RESIDUES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewres/commutative.hpp"
#include "skewres/taylor.hpp"

namespace skewres {

enum class Method { canonical, hensel };

// Skew residue at a point: the full T^{-1} coefficient (absent at 0 and
// infinity, where only partial residues exist) and the r partial residues
// as elements of K.
struct ResidueRecord {
  Point point;
  std::optional<QuotientElement> full;
  std::vector<KElement> partial;
};

// Residue at a rational point z in F\{0}.  method = canonical requires p
// coprime to r; the record is method-independent whenever ord_z(f) >= -1.
ResidueRecord sres(const SkewFraction& f, std::uint32_t z, Method method);

// Choice-free partial residues at 0 and infinity, read off the X-series.
KElement sres_zero(const SkewFraction& f, std::uint32_t j);
KElement sres_infinity(const SkewFraction& f, std::uint32_t j);
ResidueRecord sres_special(const SkewFraction& f, const Point& pt);

// Poles of f: finite orders are the actual expansion orders (cancellation
// included); the charts at 0 and infinity carry per-section orders.
struct PoleSupport {
  std::map<std::uint32_t, long> finite;
  std::vector<std::optional<long>> at_zero;
  std::vector<std::optional<long>> at_infinity;
};
PoleSupport pole_support(const SkewFraction& f);

// ord_z(f) through a Hensel expansion; empty when f vanishes at z to the
// probed precision (in particular: no pole).
std::optional<long> order_at(const SkewFraction& f, std::uint32_t z);

// Compares the partial skew residue with the classical residue of
// sec_j(f) dY.  Preconditions (split denominator; ord_{z,j} >= -1 for
// j != 0 at finite z) are the caller's business; the comparison itself is
// unconditional.
struct BridgeResult {
  KElement skew, commutative;
  bool equal = false;
};
BridgeResult bridge_check(const SkewFraction& f, const Point& pt,
                          std::uint32_t j);

// Sum of the j-th partial residues over F\{0}, 0 and infinity, with the
// per-point breakdown (denominator roots in increasing order, then "0",
// then "inf").  j != 0 requires every finite pole to be simple.
struct ResidueSum {
  KElement sum;
  std::vector<std::pair<std::string, KElement>> breakdown;
};
ResidueSum residue_sum(const SkewFraction& f, std::uint32_t j);

// Canonical partial residue at zeta^r against the classical residue of
// r zeta^{-j} y^{j+r-1} sec_j(f) dy at zeta.
struct ZetaCheck {
  KElement lhs, rhs;
  bool equal = false;
};
ZetaCheck zeta_root_check(const SkewFraction& f, std::uint32_t j,
                          std::uint32_t zeta);

// Z = gamma(Y) = C^r Y for central C, and the transported point.
FpRat gamma_coordinate(const FpRat& c, const FieldTower& tw);
bool is_gamma_regular(const FpRat& c, std::uint32_t z, const FieldTower& tw);
std::uint32_t gamma_star(const FpRat& c, std::uint32_t z,
                         const FieldTower& tw);  // not_regular otherwise

// Change of variables for a central multiplier: compares gamma applied to
// sres_{gamma* z}(f) with sres_z(gamma(f) dZ/dY).  method = canonical needs
// p coprime to r; method = hensel demands a simple pole at gamma* z.
struct ChvarResult {
  ResidueRecord lhs;  // transported through the induced quotient morphism
  ResidueRecord rhs;
  bool equal = false;
};
ChvarResult chvar_check(const FpRat& c, std::uint32_t z,
                        const SkewFraction& f, Method method);

// Existence of a K-algebra morphism A/(Y-z1)A -> A/(Y-z2)A: equivalent to
// z1/z2 being a norm of K/F, hence always true over a finite field; the
// witness is the first element of K (in enumeration order) of norm z1/z2.
struct MorphismWitness {
  bool exists = false;
  std::optional<KElement> witness;
};
MorphismWitness quotient_morphism_exists(std::uint32_t z1, std::uint32_t z2,
                                         const FieldTower& tw);

}  // namespace skewres

#endif
