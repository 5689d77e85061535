#ifndef SKEWRES_EXPR_HPP
#define SKEWRES_EXPR_HPP

#include <string>

#include "skewres/skew_fraction.hpp"
#include "skewres/taylor.hpp"

namespace skewres {

// Grammar:
//   input  := expr ('/' expr)?
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | 'g' | 'X' | 'Y' | '(' expr ')'
// Multiplication keeps operand order (the ring is noncommutative).  In the
// numerator Y elaborates to X^r; the denominator must be central: no X, and
// all coefficients in F after normalization.
SkewFraction parse_value(const std::string& text, const FieldTower& tw);

// Same grammar restricted to the commutative variable Y over K (no X);
// used by the classical-residue front end.
KRat parse_commutative(const std::string& text, const FieldTower& tw);

// Element of K in the canonical ascending form, e.g. "2+4*g" or "0".
std::string k_to_string(const KElement& a);

// Canonical forms (round-trip through parse_value): every coefficient
// parenthesized, ascending degrees.
std::string skew_to_canonical(const SkewPoly& f);
std::string center_to_canonical(const FpPoly& d);
std::string fraction_to_canonical(const SkewFraction& f);

// Compact forms for CLI reports: descending degrees, no redundant parens,
// e.g. "g*X+4".
std::string skew_to_compact(const SkewPoly& f);
std::string center_to_compact(const FpPoly& d);
std::string fraction_to_compact(const SkewFraction& f);

// Series pretty-printers (" + "-joined, ascending exponents).
std::string series_to_string(const TaylorSeries& s);
std::string series_to_string(const XSeries& s);

}  // namespace skewres

#endif
