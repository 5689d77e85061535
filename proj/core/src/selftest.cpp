#include "skewres/selftest.hpp"

#include <functional>

#include "skewres/expr.hpp"

namespace skewres {

namespace checks {

bool division(const FieldTower& tw, const SkewPoly& a, const SkewPoly& b,
              Rng& rng) {
  auto [qr, rr] = right_divide(a, b);
  if (a != qr * b + rr) return false;
  if (rr.degree() >= b.degree()) return false;
  auto [ql, rl] = left_divide(a, b);
  if (a != b * ql + rl) return false;
  if (rl.degree() >= b.degree()) return false;
  // uniqueness probe: any perturbation of the quotient pushes the remainder
  // degree to deg b or above
  SkewPoly e = random_skew(tw, rng, std::max<long>(qr.degree(), 0));
  if (!e.is_zero()) {
    if ((a - (qr + e) * b).degree() < b.degree()) return false;
    if ((a - b * (ql + e)).degree() < b.degree()) return false;
  }
  return true;
}

bool ideal(const FieldTower& tw, const SkewPoly& f, const SkewPoly& g) {
  (void)tw;
  GcdResult rg = rgcd(f, g);
  if (rg.u * f + rg.v * g != rg.d) return false;
  if (!right_divide(f, rg.d).second.is_zero()) return false;
  if (!right_divide(g, rg.d).second.is_zero()) return false;
  GcdResult lg = lgcd(f, g);
  if (f * lg.u + g * lg.v != lg.d) return false;
  if (!left_divide(f, lg.d).second.is_zero()) return false;
  if (!left_divide(g, lg.d).second.is_zero()) return false;
  if (f.is_zero() || g.is_zero()) return true;
  SkewPoly ml = llcm(f, g);
  if (!right_divide(ml, f).second.is_zero()) return false;
  if (!right_divide(ml, g).second.is_zero()) return false;
  if (ml.degree() != f.degree() + g.degree() - rg.d.degree()) return false;
  SkewPoly mr = rlcm(f, g);
  if (!left_divide(mr, f).second.is_zero()) return false;
  if (!left_divide(mr, g).second.is_zero()) return false;
  if (mr.degree() != f.degree() + g.degree() - lg.d.degree()) return false;
  return true;
}

bool central_bound(const FieldTower& tw, const SkewPoly& f, Rng& rng) {
  auto [g, n] = central_right_multiple(f);
  SkewPoly ncs = mul_center(SkewPoly::one(&tw), n);
  if (f * g != ncs) return false;
  if (g * f != ncs) return false;
  if (n.degree() > f.degree()) return false;
  SkewPoly probe = SkewPoly::constant(&tw, random_k(tw, rng)) +
                   SkewPoly::x(&tw);
  return ncs * probe == probe * ncs;
}

bool sections_identities(const FieldTower& tw, const SkewPoly& f,
                         const YLaurent& c, long j) {
  const long r = long(tw.r());
  // (i) reconstruction over 0..r-1
  std::vector<YLaurent> secs;
  for (long t = 0; t < r; ++t) secs.push_back(section(f, t));
  if (from_sections(&tw, secs) != f) return false;
  // (ii)
  if (section(mul_coef_right(f, c), j) != section(f, j) * c.theta(j))
    return false;
  if (section(f.shifted(1), j) != section(f, j - 1)) return false;
  // (iii)
  if (section(mul_coef_left(c, f), j) != c * section(f, j)) return false;
  if (section(f.x_mul_left(1), j) != section(f, j - 1).theta(1)) return false;
  // (iv)
  if (section(f, j - r) != section(f, j).shifted(1)) return false;
  return true;
}

bool morphism_laws(const FieldTower& tw, const KPoly& c, const SkewPoly& f,
                   const SkewPoly& g, long j) {
  const KField* kf = tw.kfield();
  if (apply_morphism(c, f * g) != apply_morphism(c, f) * apply_morphism(c, g))
    return false;
  // gamma_C(Y) = N_r(C) Y
  KPoly nr = KPoly::one(kf);
  for (std::uint32_t t = 0; t < tw.r(); ++t)
    nr = nr * tw.theta_poly(c, long(t));
  SkewPoly y = SkewPoly::x(&tw).shifted(long(tw.r()) - 1);
  if (apply_morphism(c, y) !=
      mul_coef_left(YLaurent(1, nr), SkewPoly::one(&tw)))
    return false;
  // identity morphism
  if (apply_morphism(KPoly::one(kf), f) != f) return false;
  // sec_j(gamma_C(f)) = N_j(C) * gamma_C(sec_j(f)) where gamma_C acts on
  // K[Y] by Y -> N_r(C) Y
  YLaurent lhs = section(apply_morphism(c, f), j);
  KPoly nj = KPoly::one(kf);
  for (long t = 0; t < j; ++t) nj = nj * tw.theta_poly(c, t);
  YLaurent sec = section(f, j);
  // substitute Y -> nr*Y in sec (f polynomial => sec.val >= 0)
  KPoly subst(kf);
  KPoly pw = KPoly::one(kf);
  for (long k = 0; k < sec.val; ++k) pw = pw * nr;
  for (std::size_t t = 0; t < sec.body.size(); ++t) {
    subst = subst + pw.scaled(sec.body.coeff(t)).shifted(std::size_t(sec.val) + t);
    pw = pw * nr;
  }
  YLaurent rhs = YLaurent(0, nj * subst);
  return lhs == rhs;
}

bool cocycle(const FieldTower& tw, const KRat& c, long j, long jp) {
  KRat lhs = twisted_norm(c, j + jp, tw);
  KRat rhs = twisted_norm(c, j, tw) *
             tw.theta_rat(twisted_norm(c, jp, tw), j);
  return lhs == rhs;
}

bool derivation_laws(const FieldTower& tw, const KPoly& c, const SkewPoly& f,
                     const SkewPoly& g) {
  if (apply_derivation(c, f * g) !=
      apply_derivation(c, f) * g + f * apply_derivation(c, g))
    return false;
  // constants are killed, partial_C(X) = C X
  if (!apply_derivation(c, SkewPoly::one(&tw)).is_zero()) return false;
  if (apply_derivation(c, SkewPoly::x(&tw)) !=
      mul_coef_left(YLaurent(0, c), SkewPoly::x(&tw)))
    return false;
  return true;
}

bool canonical_p_power(const FieldTower& tw, const SkewPoly& f) {
  SkewPoly acc = f;
  for (std::uint32_t t = 0; t < tw.p(); ++t) acc = canonical_derivation(acc);
  return acc.is_zero();
}

bool divided_power_composition(const FieldTower& tw, std::uint64_t m,
                               std::uint64_t n, long i) {
  SkewPoly mono = SkewPoly::monomial(&tw, tw.gen(), i);
  SkewPoly lhs = divided_power(divided_power(mono, n), m);
  std::uint32_t b = binomial_mod_p(m + n, n, tw.fp());
  SkewPoly rhs = divided_power(mono, m + n).scaled_left(tw.from_base(b));
  return lhs == rhs;
}

bool hensel_root(const FieldTower& tw, std::uint32_t z, std::uint32_t m) {
  AdmissibleLift lift = hensel_lift(tw, z, m);
  const PrimeField& fp = tw.fp();
  FpPoly lin(tw.fp_ptr(), {fp.neg(z), 1});
  // C = 1 mod (Y - z)
  KPoly cm = lift.c % tw.embed(lin);
  if (cm != KPoly::one(tw.kfield())) return false;
  // C - 1 lies in a * F[Y]
  KPoly diff = lift.c - KPoly::one(tw.kfield());
  for (std::size_t t = 0; t < diff.size(); ++t) {
    if (diff.coeff(t).is_zero()) continue;
    if (!(diff.coeff(t) / lift.a).in_base()) return false;
  }
  // N_r(C) Y = z mod (Y - z)^m
  KPoly nr = KPoly::one(tw.kfield());
  for (std::uint32_t t = 0; t < tw.r(); ++t)
    nr = nr * tw.theta_poly(lift.c, long(t));
  FpPoly ncx = tw.to_center(nr).shifted(1) - FpPoly::constant(tw.fp_ptr(), z);
  return (ncx % lin.pow(m)).is_zero();
}

bool taylor_multiplicative(const FieldTower& tw, const SkewFraction& f,
                           const SkewFraction& g, std::uint32_t z,
                           long prec) {
  SkewFraction fg = f * g;
  if (tw.r() % tw.p() != 0) {
    TaylorSeries a = expand_canonical(f, z, prec);
    TaylorSeries b = expand_canonical(g, z, prec);
    TaylorSeries ab = expand_canonical(fg, z, prec);
    if (!(a * b).agrees_with(ab)) return false;
  }
  auto kof = [&](const SkewFraction& h) {
    FpPoly d = h.den();
    return long(d.deflate_root(z));
  };
  std::uint32_t m =
      std::uint32_t(std::max<long>(prec + kof(f) + kof(g) + kof(fg), 1));
  AdmissibleLift lift = hensel_lift(tw, z, m);
  TaylorSeries a = expand_admissible(f, lift, prec);
  TaylorSeries b = expand_admissible(g, lift, prec);
  TaylorSeries ab = expand_admissible(fg, lift, prec);
  return (a * b).agrees_with(ab);
}

bool taylor_sends_y(const FieldTower& tw, std::uint32_t z, long prec) {
  SkewFraction y = SkewFraction::from_poly(
      SkewPoly::x(&tw).shifted(long(tw.r()) - 1));
  FpPoly lin(tw.fp_ptr(), {tw.fp().neg(z), 1});
  SkewFraction n = SkewFraction::from_poly(mul_center(SkewPoly::one(&tw), lin));
  auto check = [&](const TaylorSeries& s, bool is_n) {
    if (s.valuation() != (is_n ? 1 : 0)) return false;
    for (long t = s.valuation(); t < s.prec(); ++t) {
      QuotientElement c = s.coeff(t);
      SkewPoly want = SkewPoly::zero(&tw);
      if (!is_n && t == 0) want = SkewPoly::constant(&tw, tw.from_base(z));
      if (t == 1) want = SkewPoly::one(&tw);
      if (c.rep() != want) return false;
    }
    return true;
  };
  AdmissibleLift lift = hensel_lift(tw, z, std::uint32_t(std::max(prec, 1l)));
  if (!check(expand_admissible(y, lift, prec), false)) return false;
  if (!check(expand_admissible(n, lift, prec), true)) return false;
  if (tw.r() % tw.p() != 0) {
    if (!check(expand_canonical(y, z, prec), false)) return false;
    if (!check(expand_canonical(n, z, prec), true)) return false;
  }
  return true;
}

bool taylor_roundtrip(const FieldTower& tw, const SkewPoly& f,
                      std::uint32_t z, std::uint32_t m) {
  AdmissibleLift lift = hensel_lift(tw, z, m);
  TaylorSeries s = expand_admissible(SkewFraction::from_poly(f), lift,
                                     long(m));
  // substitute T -> (Y-z), X -> C X and compare mod (Y-z)^m
  FpPoly lin(tw.fp_ptr(), {tw.fp().neg(z), 1});
  KPoly modulus_k = tw.embed(lin.pow(m));
  std::vector<KPoly> nj;
  KPoly acc = KPoly::one(tw.kfield());
  for (std::uint32_t j = 0; j < tw.r(); ++j) {
    nj.push_back(acc);
    acc = (acc * tw.theta_poly(lift.c, long(j))) % modulus_k;
  }
  QuotientElement total = QuotientElement::zero(&tw, z, m);
  FpPoly npow = FpPoly::one(tw.fp_ptr());
  for (long n = 0; n < long(m); ++n) {
    QuotientElement cn = s.coeff(n);
    if (!cn.is_zero()) {
      SkewPoly img = SkewPoly::zero(&tw);
      for (std::uint32_t j = 0; j < tw.r(); ++j) {
        KElement b = cn.rep().coeff(long(j));
        if (b.is_zero()) continue;
        img = img + mul_coef_left(YLaurent(0, nj[j].scaled(b)),
                                  SkewPoly::one(&tw))
                        .shifted(long(j));
      }
      total = total + QuotientElement(&tw, z, m, mul_center(img, npow));
    }
    npow = npow * lin;
  }
  return total == QuotientElement(&tw, z, m, f);
}

bool canonical_x_normalization(const FieldTower& tw, std::uint32_t z,
                               long prec) {
  SkewFraction x = SkewFraction::from_poly(SkewPoly::x(&tw));
  TaylorSeries s = expand_canonical(x, z, prec);
  if (s.valuation() != 0) return false;
  for (long n = s.valuation(); n < s.prec(); ++n) {
    SkewPoly rep = s.coeff(n).rep();
    if (rep.is_zero()) continue;
    if (rep.valuation() != 1 || rep.degree() != 1) return false;
    if (!rep.coeff(1).in_base()) return false;
  }
  // r-th power of the series is the expansion of Y: z + T
  TaylorSeries pw = s;
  for (std::uint32_t t = 1; t < tw.r(); ++t) pw = pw * s;
  SkewFraction y = SkewFraction::from_poly(
      SkewPoly::x(&tw).shifted(long(tw.r()) - 1));
  return pw.agrees_with(expand_canonical(y, z, prec));
}

bool ord_subadditive(const FieldTower& tw, const SkewFraction& f,
                     const SkewFraction& g, std::uint32_t z, long prec) {
  if (f.is_zero() || g.is_zero()) return true;
  auto of = order_at(f, z), og = order_at(g, z), ofg = order_at(f * g, z);
  if (!of || !og) return true;  // vanishing beyond probe depth
  (void)prec;
  if (!ofg) return true;
  if (*ofg < *of + *og) return false;
  if (*ofg > *of + *og) {
    // strictness is allowed only when the principal parts multiply to zero
    TaylorSeries sf = expand_canonical(f, z, 1);
    TaylorSeries sg = expand_canonical(g, z, 1);
    if (sf.is_zero_to_precision() || sg.is_zero_to_precision()) return true;
    QuotientElement pf = sf.coeff(*of), pg = sg.coeff(*og);
    return (pf * pg).is_zero();
  }
  return true;
}

bool choice_invariance(const FieldTower& tw, const SkewFraction& f,
                       std::uint32_t z, long prec) {
  TaylorSeries can = expand_canonical(f, z, prec);
  FpPoly d = f.den();
  std::uint32_t m = std::uint32_t(std::max<long>(prec + long(d.deflate_root(z)), 1));
  TaylorSeries hen =
      expand_admissible(f, hensel_lift(tw, z, m), prec);
  if (can.is_zero_to_precision() != hen.is_zero_to_precision()) return false;
  if (can.is_zero_to_precision()) return true;
  OrderRecord a = order_and_principal(can);
  OrderRecord b = order_and_principal(hen);
  if (a.ord != b.ord) return false;
  if (a.principal != b.principal) return false;
  for (std::uint32_t j = 0; j < tw.r(); ++j) {
    if (a.ord_j[j] != b.ord_j[j]) return false;
    if (a.principal_j[j] != b.principal_j[j]) return false;
  }
  // sec_0 of the whole series is choice-free
  for (long n = can.valuation(); n < std::min(can.prec(), hen.prec()); ++n)
    if (can.coeff(n).rep().coeff(0) != hen.coeff(n).rep().coeff(0))
      return false;
  return true;
}

bool bridge_applicable(const SkewFraction& f, const Point& pt,
                       std::uint32_t j) {
  if (j == 0 || pt.kind != Point::Kind::finite) return true;
  if (f.is_zero()) return true;
  const FieldTower& tw = f.tower();
  FpPoly d = f.den();
  std::size_t k = d.deflate_root(pt.z);
  if (k == 0) return true;
  AdmissibleLift lift = hensel_lift(tw, pt.z, std::uint32_t(k));
  TaylorSeries s = expand_admissible(f, lift, 0);
  if (s.is_zero_to_precision()) return true;
  for (long n = s.valuation(); n < std::min(-1L, s.prec()); ++n)
    if (!s.coeff(n).rep().coeff(long(j)).is_zero()) return false;
  return true;
}

bool bridge(const FieldTower& tw, const SkewFraction& f, const Point& pt,
            std::uint32_t j) {
  (void)tw;
  return bridge_check(f, pt, j).equal;
}

bool residue_theorem(const FieldTower& tw, const SkewFraction& f,
                     std::uint32_t j) {
  (void)tw;
  return residue_sum(f, j).sum.is_zero();
}

bool zeta_identity(const FieldTower& tw, const SkewFraction& f,
                   std::uint32_t j, std::uint32_t zeta) {
  (void)tw;
  return zeta_root_check(f, j, zeta).equal;
}

bool chvar(const FieldTower& tw, const FpRat& c, std::uint32_t z,
           const SkewFraction& f, Method method) {
  (void)tw;
  return chvar_check(c, z, f, method).equal;
}

bool fraction_axioms(const FieldTower& tw, const SkewFraction& f,
                     const SkewFraction& g, const SkewFraction& h) {
  (void)tw;
  if ((f + g) + h != f + (g + h)) return false;
  if ((f * g) * h != f * (g * h)) return false;
  if (f * (g + h) != f * g + f * h) return false;
  if ((g + h) * f != g * f + h * f) return false;
  if (!f.is_zero()) {
    SkewFraction inv = f.inverse();
    if (f * inv != SkewFraction::one(f.tower_ptr())) return false;
    if (inv * f != SkewFraction::one(f.tower_ptr())) return false;
    if (!g.is_zero() && (f * g).degree() != f.degree() + g.degree())
      return false;
  }
  return true;
}

bool parser_roundtrip(const FieldTower& tw, const SkewFraction& f) {
  return parse_value(fraction_to_canonical(f), tw) == f;
}

}  // namespace checks

FieldConfig desk_config_gf25() { return FieldConfig{5, 1, 2, {3, 0, 1}}; }
FieldConfig desk_config_gf343() { return FieldConfig{7, 1, 3, {5, 0, 0, 1}}; }
FieldConfig desk_config_gf4() { return FieldConfig{2, 1, 2, {1, 1, 1}}; }

namespace {

std::uint32_t random_point(const FieldTower& tw, Rng& rng) {
  return std::uint32_t(rng.range(1, long(tw.p()) - 1));
}

void run_suite(SelftestReport& rep, const std::string& name, int trials,
               const std::function<bool(int)>& body) {
  SuiteResult s{name, trials, 0};
  for (int t = 0; t < trials; ++t)
    if (!body(t)) ++s.failures;
  rep.suites.push_back(s);
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, int scale) {
  SelftestReport rep;
  FieldTower t25(desk_config_gf25());
  FieldTower t343(desk_config_gf343());
  FieldTower t4(desk_config_gf4());
  std::vector<const FieldTower*> towers{&t25, &t343};
  Rng rng(seed);

  const int n = std::max(1, scale);

  run_suite(rep, "euclidean", 24 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    SkewPoly a = random_skew(tw, rng, 6);
    SkewPoly b = random_skew(tw, rng, 4);
    return checks::division(tw, a, b, rng);
  });
  run_suite(rep, "ideals", 12 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    return checks::ideal(tw, random_skew(tw, rng, 5),
                         random_skew(tw, rng, 4));
  });
  run_suite(rep, "central_bound", 12 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    return checks::central_bound(tw, random_skew(tw, rng, 4), rng);
  });
  run_suite(rep, "sections", 12 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    SkewPoly f = random_skew_laurent(tw, rng, -3, 5);
    YLaurent c(rng.range(-1, 1), random_kpoly_nonzero(tw, rng, 2));
    return checks::sections_identities(tw, f, c, rng.range(-4, 4));
  });
  run_suite(rep, "morphisms", 10 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    return checks::morphism_laws(tw, random_kpoly_nonzero(tw, rng, 2),
                                 random_skew(tw, rng, 4),
                                 random_skew(tw, rng, 3),
                                 rng.range(0, long(tw.r()) - 1));
  });
  run_suite(rep, "cocycle", 10 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    KRat c(random_kpoly_nonzero(tw, rng, 2));
    return checks::cocycle(tw, c, rng.range(-3, 3), rng.range(-3, 3));
  });
  run_suite(rep, "derivations", 10 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    return checks::derivation_laws(tw, random_kpoly(tw, rng, 2),
                                   random_skew(tw, rng, 4),
                                   random_skew(tw, rng, 3));
  });
  run_suite(rep, "canonical_derivation", 8 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    if (!checks::canonical_p_power(tw, random_skew_laurent(tw, rng, -2, 5)))
      return false;
    std::uint64_t m = std::uint64_t(rng.range(0, long(tw.p())));
    std::uint64_t k = std::uint64_t(rng.range(0, long(tw.p())));
    return checks::divided_power_composition(tw, m, k, rng.range(-6, 6));
  });
  run_suite(rep, "characteristic_guard", 1, [&](int) {
    try {
      divided_power(SkewPoly::x(&t4), 1);
      return false;
    } catch (const error& e) {
      return e.code() == errc::characteristic_divides_r;
    }
  });
  run_suite(rep, "hensel", 8 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    return checks::hensel_root(tw, random_point(tw, rng),
                               std::uint32_t(rng.range(1, 6)));
  });
  run_suite(rep, "taylor", 6 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    std::uint32_t z = random_point(tw, rng);
    SkewFraction f = random_split_fraction(tw, rng, 2, 2, 4);
    SkewFraction g = random_split_fraction(tw, rng, 2, 2, 4);
    if (!checks::taylor_multiplicative(tw, f, g, z, 4)) return false;
    if (!checks::taylor_sends_y(tw, z, 4)) return false;
    if (!checks::taylor_roundtrip(tw, random_skew(tw, rng, 5), z,
                                  std::uint32_t(rng.range(1, 5))))
      return false;
    if (!checks::ord_subadditive(tw, f, g, z, 4)) return false;
    return checks::canonical_x_normalization(tw, z, 5);
  });
  run_suite(rep, "choice_invariance", 8 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    return checks::choice_invariance(
        tw, random_split_fraction(tw, rng, 3, 3, 4), random_point(tw, rng),
        4);
  });
  run_suite(rep, "bridge", 8 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    for (;;) {
      SkewFraction f = random_split_fraction(tw, rng, 3, 3, 4);
      Point pt;
      long which = rng.range(0, 2);
      if (which == 0)
        pt = Point::origin();
      else if (which == 1)
        pt = Point::infinity();
      else
        pt = Point::finite(random_point(tw, rng));
      std::uint32_t j = std::uint32_t(rng.range(0, long(tw.r()) - 1));
      if (!checks::bridge_applicable(f, pt, j)) continue;
      return checks::bridge(tw, f, pt, j);
    }
  });
  run_suite(rep, "residue_theorem_j0", 8 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    return checks::residue_theorem(
        tw, random_split_fraction(tw, rng, 3, 3, 4), 0);
  });
  run_suite(rep, "residue_theorem_all_j", 8 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    SkewFraction f = random_simple_pole_fraction(tw, rng, 4);
    for (std::uint32_t j = 0; j < tw.r(); ++j)
      if (!checks::residue_theorem(tw, f, j)) return false;
    return true;
  });
  run_suite(rep, "zeta_root", 6 * n, [&](int t) {
    (void)t;
    const FieldTower& tw = t25;  // p = 5, r = 2 config
    SkewFraction f = random_split_fraction(tw, rng, 2, 2, 4);
    std::uint32_t zeta = random_point(tw, rng);
    std::uint32_t j = std::uint32_t(rng.range(0, long(tw.r()) - 1));
    return checks::zeta_identity(tw, f, j, zeta);
  });
  run_suite(rep, "change_of_variables", 6 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    std::uint32_t z = random_point(tw, rng);
    // central multiplier regular at z
    FpRat c(tw.fp_ptr());
    for (;;) {
      FpPoly cp(tw.fp_ptr(),
                {std::uint32_t(rng.range(0, long(tw.p()) - 1)),
                 std::uint32_t(rng.range(0, long(tw.p()) - 1))});
      if (cp.is_zero()) continue;
      c = FpRat(cp);
      if (is_gamma_regular(c, z, tw)) break;
    }
    if (t % 2 == 0) {
      SkewFraction f = random_split_fraction(tw, rng, 2, 2, 4);
      return checks::chvar(tw, c, z, f, Method::canonical);
    }
    // simple-pole regime: force a simple pole at gamma* z
    std::uint32_t gz = gamma_star(c, z, tw);
    for (;;) {
      FpPoly lin(tw.fp_ptr(), {tw.fp().neg(gz), 1});
      SkewFraction f(random_skew(tw, rng, 3), lin);
      auto ord = order_at(f, gz);
      if (ord && *ord == -1)
        return checks::chvar(tw, c, z, f, Method::hensel);
    }
  });
  run_suite(rep, "fraction_axioms", 6 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    return checks::fraction_axioms(tw,
                                   random_split_fraction(tw, rng, 2, 2, 4),
                                   random_split_fraction(tw, rng, 2, 2, 4),
                                   random_split_fraction(tw, rng, 2, 2, 4));
  });
  run_suite(rep, "parser_roundtrip", 20 * n, [&](int t) {
    const FieldTower& tw = *towers[t % 2];
    return checks::parser_roundtrip(
        tw, random_split_fraction(tw, rng, 2, 2, 5));
  });
  return rep;
}

}  // namespace skewres
