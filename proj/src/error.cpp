#include "aatkit/error.hpp"

namespace aatkit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ok: return "Ok";
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::curve_equation_violated: return "CurveEquationViolated";
    case ErrorCode::unsupported_ode: return "UnsupportedOde";
    case ErrorCode::order_exceeded: return "OrderExceeded";
    case ErrorCode::variable_mismatch: return "VariableMismatch";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::order_too_low: return "OrderTooLow";
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::denominator_not_unit: return "DenominatorNotUnit";
    case ErrorCode::singular_alpha: return "SingularAlpha";
    case ErrorCode::missing_approximation: return "MissingApproximation";
    case ErrorCode::evaluation_divergence: return "EvaluationDivergence";
    case ErrorCode::degenerate_fiber: return "DegenerateFiber";
    case ErrorCode::ambiguous_sample: return "AmbiguousSample";
    case ErrorCode::outside_cell: return "OutsideCell";
    case ErrorCode::not_found: return "NotFound";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace aatkit
