#include "doctest.h"
#include "test_util.hpp"

#include "skewres/json_io.hpp"

using namespace skewres;
using skewres::test::gf25;
using skewres::test::gf343;
using skewres::test::gf4;
using skewres::test::kel;

namespace {

// Independent Frobenius oracle: a^(q^i) by plain exponentiation.
KElement frob_oracle(const KElement& a, long i) {
  const FieldTower& tw = a.tower();
  long k = ((i % long(tw.r())) + long(tw.r())) % long(tw.r());
  KElement acc = a;
  for (long t = 0; t < k; ++t) acc = acc.pow(tw.q());
  return acc;
}

KElement trace_oracle(const KElement& a) {
  KElement acc = a.tower().zero();
  for (std::uint32_t i = 0; i < a.tower().r(); ++i)
    acc = acc + frob_oracle(a, i);
  return acc;
}

KElement norm_oracle(const KElement& a) {
  KElement acc = a.tower().one();
  for (std::uint32_t i = 0; i < a.tower().r(); ++i)
    acc = acc * frob_oracle(a, i);
  return acc;
}

}  // namespace

TEST_CASE("frobenius powers on GF(25)") {
  const FieldTower& tw = gf25();
  KElement g = tw.gen();
  CHECK(g.frobenius(1) == kel(tw, {0, 4}));  // g^5 = 4g
  CHECK(g.frobenius(0) == g);
  CHECK(g.frobenius(2) == g);
  CHECK(g.frobenius(-1) == g.frobenius(1));  // order 2

  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    KElement a = random_k(tw, rng);
    long i = rng.range(-5, 5);
    CHECK(a.frobenius(i) == frob_oracle(a, i));
  }
}

TEST_CASE("frobenius is a field automorphism of order exactly r") {
  for (const FieldTower* twp : {&gf25(), &gf343(), &gf4()}) {
    const FieldTower& tw = *twp;
    KElement g = tw.gen();
    for (std::uint32_t i = 1; i < tw.r(); ++i) CHECK(g.frobenius(i) != g);
    CHECK(g.frobenius(long(tw.r())) == g);
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
      KElement a = random_k(tw, rng), b = random_k(tw, rng);
      CHECK((a * b).frobenius(1) == a.frobenius(1) * b.frobenius(1));
      CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
    }
  }
}

TEST_CASE("trace and norm of GF(25)") {
  const FieldTower& tw = gf25();
  KElement g = tw.gen();
  CHECK(g.trace() == tw.zero());
  CHECK(g.norm() == tw.from_base(3));
  CHECK(tw.one().trace() == tw.from_base(2));  // r mod p
  CHECK(tw.one().norm() == tw.one());
  CHECK(tw.zero().trace() == tw.zero());
  CHECK(tw.zero().norm() == tw.zero());
}

TEST_CASE("trace and norm land in F and are additive/multiplicative") {
  for (const FieldTower* twp : {&gf25(), &gf343()}) {
    const FieldTower& tw = *twp;
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
      KElement a = random_k(tw, rng), b = random_k(tw, rng);
      CHECK(a.trace() == trace_oracle(a));
      CHECK(a.norm() == norm_oracle(a));
      CHECK(a.trace().in_base());
      CHECK(a.norm().in_base());
      CHECK(a.trace().frobenius(1) == a.trace());
      CHECK((a * b).norm() == a.norm() * b.norm());
      CHECK((a + b).trace() == a.trace() + b.trace());
    }
  }
}

TEST_CASE("trace-one element is deterministic") {
  CHECK(gf25().trace_one_element() == gf25().from_base(3));
  CHECK(gf4().trace_one_element() == gf4().gen());
  FieldTower line(FieldConfig{5, 1, 1, {3, 1}});
  CHECK(line.trace_one_element() == line.one());
  for (const FieldTower* twp : {&gf25(), &gf343(), &gf4()})
    CHECK(twp->trace_one_element().trace() == twp->one());
}

TEST_CASE("binomial fraction coefficients") {
  const PrimeField& f5 = gf25().fp();
  SUBCASE("j = r is exact") {
    auto c = binomial_fraction_coeffs(2, 2, 5, f5);
    CHECK(c == std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0});
  }
  SUBCASE("j = 0 is one") {
    auto c = binomial_fraction_coeffs(0, 2, 4, f5);
    CHECK(c == std::vector<std::uint32_t>{1, 0, 0, 0, 0});
  }
  SUBCASE("half series over GF(5)") {
    auto c = binomial_fraction_coeffs(1, 2, 6, f5);
    CHECK(c[1] == 3);  // 1/2 in GF(5)
    // squaring the truncated series gives 1 + u
    FpPoly s(&f5, std::vector<std::uint32_t>(c));
    FpPoly sq = (s * s).truncated(7);
    CHECK(sq == FpPoly(&f5, {1, 1}));
  }
  SUBCASE("r-th power reproduces (1+u)^j at both desk primes") {
    const PrimeField& f7 = gf343().fp();
    for (long j : {1L, 2L, 4L, 5L}) {
      auto c = binomial_fraction_coeffs(j, 3, 9, f7);
      FpPoly s(&f7, std::vector<std::uint32_t>(c));
      FpPoly cube = ((s * s) * s).truncated(10);
      FpPoly want = FpPoly(&f7, {1, 1}).pow(std::uint64_t(j)).truncated(10);
      CHECK(cube == want);
    }
  }
  SUBCASE("recurrence agrees where n+1 is invertible") {
    auto c = binomial_fraction_coeffs(1, 2, 3, f5);
    std::uint32_t cur = 1;
    std::uint32_t half = f5.inv(2);  // j/r
    for (std::size_t n = 0; n + 1 <= 3; ++n) {
      cur = f5.mul(cur, f5.mul(f5.sub(half, f5.from_int(long(n))),
                               f5.inv(f5.from_int(long(n) + 1))));
      CHECK(c[n + 1] == cur);
    }
  }
  SUBCASE("p dividing r is refused") {
    CHECK_THROWS_AS(binomial_fraction_coeffs(1, 2, 3, gf4().fp()), error);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(FieldTower(FieldConfig{4, 1, 2, {1, 1, 1}}), error);
  CHECK_THROWS_AS(FieldTower(FieldConfig{5, 1, 2, {1, 0, 1}}), error);  // g^2+1 splits mod 5
  CHECK_THROWS_AS(FieldTower(FieldConfig{5, 1, 2, {3, 1}}), error);  // degree != r
  CHECK_THROWS_AS(FieldTower(FieldConfig{5, 2, 2, {3, 0, 1}}), error);  // s != 1
  FieldConfig cfg = parse_field_config(R"({"p":5,"s":1,"r":2,"modulus":[3,0,1]})");
  CHECK(cfg.p == 5);
  CHECK(cfg.r == 2);
  CHECK(cfg.modulus == std::vector<std::uint32_t>{3, 0, 1});
  FieldTower tw(cfg);
  CHECK(tw.cardinality() == 25);
}

TEST_CASE("element enumeration is little-endian in the coordinates") {
  const FieldTower& tw = gf25();
  CHECK(tw.element(0) == tw.zero());
  CHECK(tw.element(1) == tw.one());
  CHECK(tw.element(5) == tw.gen());
  CHECK(tw.element(7) == kel(tw, {2, 1}));
}
