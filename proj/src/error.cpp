#include "xconn/error.hpp"

namespace xconn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::modulus_mismatch: return "ModulusMismatch";
    case ErrorCode::shape_error: return "ShapeError";
    case ErrorCode::not_invertible: return "NotInvertible";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::not_included: return "NotIncluded";
    case ErrorCode::not_a_direct_sum: return "NotADirectSum";
    case ErrorCode::not_singular: return "NotSingular";
    case ErrorCode::not_a_cone: return "NotACone";
    case ErrorCode::not_principal: return "NotPrincipal";
    case ErrorCode::not_idempotent: return "NotIdempotent";
    case ErrorCode::not_in_sandwich: return "NotInSandwich";
    case ErrorCode::not_closed: return "NotClosed";
    case ErrorCode::not_induced: return "NotInduced";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace xconn
