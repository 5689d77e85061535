#ifndef SKEWRES_SELFTEST_HPP
#define SKEWRES_SELFTEST_HPP

#include <string>
#include <vector>

#include "skewres/random_gen.hpp"
#include "skewres/residues.hpp"

namespace skewres {

// Single-instance property checks.  Each encodes one identity of the
// library's contract; the randomized suites and the acceptance gate drive
// them with their own instance counts.
namespace checks {

bool division(const FieldTower& tw, const SkewPoly& a, const SkewPoly& b,
              Rng& rng);
bool ideal(const FieldTower& tw, const SkewPoly& f, const SkewPoly& g);
bool central_bound(const FieldTower& tw, const SkewPoly& f, Rng& rng);
bool sections_identities(const FieldTower& tw, const SkewPoly& f,
                         const YLaurent& c, long j);
bool morphism_laws(const FieldTower& tw, const KPoly& c, const SkewPoly& f,
                   const SkewPoly& g, long j);
bool cocycle(const FieldTower& tw, const KRat& c, long j, long jp);
bool derivation_laws(const FieldTower& tw, const KPoly& c, const SkewPoly& f,
                     const SkewPoly& g);
bool canonical_p_power(const FieldTower& tw, const SkewPoly& f);
bool divided_power_composition(const FieldTower& tw, std::uint64_t m,
                               std::uint64_t n, long i);
bool hensel_root(const FieldTower& tw, std::uint32_t z, std::uint32_t m);
bool taylor_multiplicative(const FieldTower& tw, const SkewFraction& f,
                           const SkewFraction& g, std::uint32_t z, long prec);
bool taylor_sends_y(const FieldTower& tw, std::uint32_t z, long prec);
bool taylor_roundtrip(const FieldTower& tw, const SkewPoly& f,
                      std::uint32_t z, std::uint32_t m);
bool canonical_x_normalization(const FieldTower& tw, std::uint32_t z,
                               long prec);
bool ord_subadditive(const FieldTower& tw, const SkewFraction& f,
                     const SkewFraction& g, std::uint32_t z, long prec);
bool choice_invariance(const FieldTower& tw, const SkewFraction& f,
                       std::uint32_t z, long prec);
// Returns false on mismatch, true when equal; instances violating the
// sections precondition (ord_{z,j} < -1 at finite z with j != 0) are the
// caller's job to filter with bridge_applicable.
bool bridge_applicable(const SkewFraction& f, const Point& pt,
                       std::uint32_t j);
bool bridge(const FieldTower& tw, const SkewFraction& f, const Point& pt,
            std::uint32_t j);
bool residue_theorem(const FieldTower& tw, const SkewFraction& f,
                     std::uint32_t j);
bool zeta_identity(const FieldTower& tw, const SkewFraction& f,
                   std::uint32_t j, std::uint32_t zeta);
bool chvar(const FieldTower& tw, const FpRat& c, std::uint32_t z,
           const SkewFraction& f, Method method);
bool fraction_axioms(const FieldTower& tw, const SkewFraction& f,
                     const SkewFraction& g, const SkewFraction& h);
bool parser_roundtrip(const FieldTower& tw, const SkewFraction& f);

}  // namespace checks

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool ok() const {
    for (const auto& s : suites)
      if (s.failures != 0) return false;
    return true;
  }
};

// Runs the full invariant battery on the stock desk towers
// (GF(25)/GF(5), GF(343)/GF(7), and GF(4)/GF(2) for the p | r
// restrictions).  `scale` multiplies the per-suite trial counts.
SelftestReport run_selftest(std::uint64_t seed, int scale);

// The three stock configurations.
FieldConfig desk_config_gf25();
FieldConfig desk_config_gf343();
FieldConfig desk_config_gf4();

}  // namespace skewres

#endif
