#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace troploc::cli {

/// Exit statuses.
enum Status : int { kOk = 0, kInputError = 1, kPreconditionError = 2, kInternalError = 3 };

struct JobSpec {
  /// One of commands(); splice actions are "splice validate" etc.
  std::string command;
  std::vector<std::string> inputs;
  /// File for a single input, directory for several. Empty: stdout.
  std::string output;
  std::optional<std::string> weight;  // initial-form -w
  std::optional<std::size_t> dim;     // check-structure --dim
  long depth = 10;
  long box = 12;
  std::string mode = "exact";
  double tol = 1e-10;
  std::uint64_t seed = 0x5eed;
  std::string coeffs_path;  // splice system / crosscheck
  std::size_t jobs = 1;
  bool verify = false;  // brute-force box check for divisor / ideal-upper
};

const std::vector<std::string>& commands();

/// Validates the options, then runs the job on every input. Results go to
/// the output path or `out`; errors are one JSON object per line on `err`.
/// Returns the largest status over all inputs.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Result of one input, for callers that want the text instead of files.
struct Artifact {
  int status = kOk;
  std::string body;   // JSON or SVG; may be set even when status != kOk
  std::string error;  // JSON error object, empty on success
};

Artifact run_one(const JobSpec& job, const std::string& input);

/// Box from TROPLOC_BOX when set and valid, otherwise `fallback`.
long box_from_env(long fallback);

}  // namespace troploc::cli
