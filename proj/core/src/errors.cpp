#include "skewres/errors.hpp"

namespace skewres {

const char* errc_name(errc code) {
  switch (code) {
    case errc::config_error: return "ConfigError";
    case errc::not_in_field: return "NotInField";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::both_zero: return "BothZero";
    case errc::zero_input: return "ZeroInput";
    case errc::zero_inverse: return "ZeroInverse";
    case errc::zero_to_negative_power: return "ZeroToNegativePower";
    case errc::zero_c: return "ZeroC";
    case errc::characteristic_divides_r: return "CharacteristicDividesR";
    case errc::zero_point: return "ZeroPoint";
    case errc::mixed_moduli: return "MixedModuli";
    case errc::insufficient_precision: return "InsufficientPrecision";
    case errc::unsplit_denominator: return "UnsplitDenominator";
    case errc::simple_pole_required: return "SimplePoleRequired";
    case errc::not_regular: return "NotRegular";
    case errc::zero_to_precision: return "ZeroToPrecision";
    case errc::syntax_error: return "SyntaxError";
    case errc::non_central_denominator: return "NonCentralDenominator";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace skewres
