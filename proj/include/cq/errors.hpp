#pragma once
#include <stdexcept>
#include <string>

namespace cq {

// Failure categories. Each enumerator's value doubles as the process exit
// code, so scripted callers can branch on the cause of a nonzero exit.
enum class Errc {
  parse_error = 2,
  validation_error = 3,
  discriminant_negative = 10,
  degenerate_roots = 11,
  a_out_of_range = 12,
  not_normalized = 13,
  bad_resolution = 20,
  unsupported_dimension = 21,
  boundary_violation = 22,
  snapshot_format = 23,
  family_dimension_mismatch = 30,
  not_found = 31,
  stagnation = 32,
  linear_solve_failure = 33,
  divergence = 34,
  blowup_detected = 40,
  io_error = 50,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

private:
  Errc code_;
};

}  // namespace cq
