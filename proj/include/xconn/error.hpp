#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xconn {

enum class ErrorCode {
  division_by_zero,
  modulus_mismatch,
  shape_error,
  not_invertible,
  too_large,
  not_included,
  not_a_direct_sum,
  not_singular,
  not_a_cone,
  not_principal,
  not_idempotent,
  not_in_sandwich,
  not_closed,
  not_induced,
  parse_error,
  invalid_argument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xconn
