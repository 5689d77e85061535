#ifndef SKEWRES_MORPHISMS_HPP
#define SKEWRES_MORPHISMS_HPP

#include "skewres/skew_fraction.hpp"

namespace skewres {

// Twisted norm N_n(C) = C theta(C) ... theta^{n-1}(C) and its negative-n
// extension through C^{-1}; twisted trace Tr_n(C) likewise.  N_r and Tr_r
// land in the central rational functions F(Y).
KRat twisted_norm(const KRat& c, long n, const FieldTower& tw);
KRat twisted_trace(const KRat& c, long n, const FieldTower& tw);

// Central conversions (fail with not_in_field when coefficients leave F).
FpRat to_central(const KRat& c, const FieldTower& tw);
KRat from_central(const FpRat& c, const FieldTower& tw);

// gamma_C: X -> C X, so sum a_i X^i -> sum a_i N_i(C) X^i.  The polynomial
// flavour keeps everything in K[X; theta]; the rational flavour accepts any
// nonzero C in Frac(C) and clears denominators into a central one.
SkewPoly apply_morphism(const KPoly& c, const SkewPoly& f);
SkewFraction apply_morphism(const KRat& c, const SkewFraction& f,
                            const FieldTower& tw);

// partial_C: X -> C X as a derivation, sum a_i X^i -> sum a_i Tr_i(C) X^i,
// extended to fractions by the quotient rule.
SkewPoly apply_derivation(const KPoly& c, const SkewPoly& f);
SkewFraction apply_derivation(const KRat& c, const SkewFraction& f,
                              const FieldTower& tw);

// Canonical derivation (p coprime to r): sum a_i X^i ->
// r^{-1} sum i a_i X^{i-r}, and its divided powers
// dp_n(sum a_i X^i) = sum binom(i/r, n) a_i X^{i-rn}.
SkewPoly canonical_derivation(const SkewPoly& f);
SkewPoly divided_power(const SkewPoly& f, std::uint64_t n);

}  // namespace skewres

#endif
