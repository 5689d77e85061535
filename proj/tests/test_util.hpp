#ifndef SKEWRES_TESTS_TEST_UTIL_HPP
#define SKEWRES_TESTS_TEST_UTIL_HPP

#include "skewres/random_gen.hpp"
#include "skewres/selftest.hpp"

namespace skewres::test {

inline const FieldTower& gf25() {
  static FieldTower tw(desk_config_gf25());
  return tw;
}

inline const FieldTower& gf343() {
  static FieldTower tw(desk_config_gf343());
  return tw;
}

inline const FieldTower& gf4() {
  static FieldTower tw(desk_config_gf4());
  return tw;
}

// Shorthand for an element of GF(p^r) from little-endian coordinates.
inline KElement kel(const FieldTower& tw, std::vector<std::uint32_t> c) {
  return tw.from_coords(std::move(c));
}

}  // namespace skewres::test

#endif
