#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Every failure the library reports, as a stable machine-readable code.
enum class errc {
  diagonal_not_two,
  positive_off_diagonal,
  asymmetric_zero,
  not_finite_type,
  unknown_label,
  cap_exceeded,
  not_minimal_representative,
  not_a_root,
  not_in_interval,
  generator_in_parabolic,
  not_a_descent,
  parabolic_too_large,
  limit_exceeded,
  atlas_mismatch,
  parse_error,
  invalid_datum,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace schubert
