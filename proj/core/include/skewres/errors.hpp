#ifndef SKEWRES_ERRORS_HPP
#define SKEWRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewres {

enum class errc {
  config_error,
  not_in_field,
  division_by_zero,
  both_zero,
  zero_input,
  zero_inverse,
  zero_to_negative_power,
  zero_c,
  characteristic_divides_r,
  zero_point,
  mixed_moduli,
  insufficient_precision,
  unsplit_denominator,
  simple_pole_required,
  not_regular,
  zero_to_precision,
  syntax_error,
  non_central_denominator,
  unknown_symbol,
  internal,
};

const char* errc_name(errc code);

// All library failures are reported through this exception.  `code()` is
// stable and machine-mappable (the CLI turns it into an exit status),
// `what()` carries a human-readable detail string.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw error(code, detail);
}

}  // namespace skewres

#endif
