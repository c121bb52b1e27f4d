#include "schubert/error.hpp"

namespace schubert {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::diagonal_not_two: return "DiagonalNotTwo";
    case errc::positive_off_diagonal: return "PositiveOffDiagonal";
    case errc::asymmetric_zero: return "AsymmetricZero";
    case errc::not_finite_type: return "NotFiniteType";
    case errc::unknown_label: return "UnknownLabel";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_minimal_representative: return "NotMinimalRepresentative";
    case errc::not_a_root: return "NotARoot";
    case errc::not_in_interval: return "NotInInterval";
    case errc::generator_in_parabolic: return "GeneratorInParabolic";
    case errc::not_a_descent: return "NotADescent";
    case errc::parabolic_too_large: return "ParabolicTooLarge";
    case errc::limit_exceeded: return "LimitExceeded";
    case errc::atlas_mismatch: return "AtlasMismatch";
    case errc::parse_error: return "ParseError";
    case errc::invalid_datum: return "InvalidDatum";
  }
  return "Error";
}

}  // namespace schubert
