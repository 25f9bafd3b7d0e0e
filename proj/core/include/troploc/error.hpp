#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace troploc {

/// Machine-readable error codes. The CLI maps them onto exit statuses.
enum class Errc {
  // input problems
  parse_error,
  invalid_input,
  // precondition / semantic problems
  rank_mismatch,
  rank_limit,
  zero_vector,
  zero_series,
  boundary_weight,
  not_interior,
  not_strictly_convex,
  not_full_dimensional,
  outside_support,
  cone_mismatch,
  not_a_node,
  invalid_diagram,
  no_representation,
  degenerate_coefficients,
  not_compact_edge,
  undetermined_weight,
  exact_root_failure,
  depth_exceeded,
  check_failed,  // a diagnostic ran and reported a failure
  // broken internal invariants
  internal,
};

std::string_view to_string(Errc code);

enum class ErrorCategory { input, precondition, internal };

ErrorCategory category(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

inline void require(bool condition, Errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace troploc
