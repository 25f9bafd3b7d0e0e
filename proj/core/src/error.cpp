#include "troploc/error.hpp"

namespace troploc {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::parse_error: return "parse_error";
    case Errc::invalid_input: return "invalid_input";
    case Errc::rank_mismatch: return "rank_mismatch";
    case Errc::rank_limit: return "rank_limit";
    case Errc::zero_vector: return "zero_vector";
    case Errc::zero_series: return "zero_series";
    case Errc::boundary_weight: return "boundary_weight";
    case Errc::not_interior: return "not_interior";
    case Errc::not_strictly_convex: return "not_strictly_convex";
    case Errc::not_full_dimensional: return "not_full_dimensional";
    case Errc::outside_support: return "outside_support";
    case Errc::cone_mismatch: return "cone_mismatch";
    case Errc::not_a_node: return "not_a_node";
    case Errc::invalid_diagram: return "invalid_diagram";
    case Errc::no_representation: return "no_representation";
    case Errc::degenerate_coefficients: return "degenerate_coefficients";
    case Errc::not_compact_edge: return "not_compact_edge";
    case Errc::undetermined_weight: return "undetermined_weight";
    case Errc::exact_root_failure: return "exact_root_failure";
    case Errc::depth_exceeded: return "depth_exceeded";
    case Errc::check_failed: return "check_failed";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

ErrorCategory category(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::invalid_input:
      return ErrorCategory::input;
    case Errc::internal:
      return ErrorCategory::internal;
    default:
      return ErrorCategory::precondition;
  }
}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace troploc
