#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aatkit {

// Stable numeric values: these are also the C API error codes.
enum class ErrorCode : int {
  ok = 0,
  invalid_input = 1,
  parse_error = 2,
  curve_equation_violated = 3,
  unsupported_ode = 4,
  order_exceeded = 5,
  variable_mismatch = 6,
  budget_exceeded = 7,
  order_too_low = 8,
  arity_mismatch = 9,
  denominator_not_unit = 10,
  singular_alpha = 11,
  missing_approximation = 12,
  evaluation_divergence = 13,
  degenerate_fiber = 14,
  ambiguous_sample = 15,
  outside_cell = 16,
  not_found = 17,
  io_error = 18,
  internal = 99,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace aatkit
