#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace lipfree {

// Failure codes for operations that reject their input or detect an internal
// inconsistency. Index payloads identify the first witnessing point, pair or
// triple where that makes sense.
enum class Errc {
  asymmetric,
  nonzero_diagonal,
  zero_off_diagonal,
  triangle_violation,
  base_point_missing,
  single_point,
  base_not_zero,
  constant_too_small,
  support_out_of_range,
  duality_gap_exceeded,
  range_collision,
  rank_overflow,
  unknown_suite,
  parse_error,
  bad_input,
  solver_failure,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::asymmetric: return "Asymmetric";
    case Errc::nonzero_diagonal: return "NonzeroDiagonal";
    case Errc::zero_off_diagonal: return "ZeroOffDiagonal";
    case Errc::triangle_violation: return "TriangleViolation";
    case Errc::base_point_missing: return "BasePointMissing";
    case Errc::single_point: return "SinglePoint";
    case Errc::base_not_zero: return "BaseNotZero";
    case Errc::constant_too_small: return "ConstantTooSmall";
    case Errc::support_out_of_range: return "SupportOutOfRange";
    case Errc::duality_gap_exceeded: return "DualityGapExceeded";
    case Errc::range_collision: return "RangeCollision";
    case Errc::rank_overflow: return "RankOverflow";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::parse_error: return "ParseError";
    case Errc::bad_input: return "BadInput";
    case Errc::solver_failure: return "SolverFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, long long i = -1, long long j = -1,
        long long k = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        idx_{i, j, k} {}

  Errc code() const noexcept { return code_; }
  long long i() const noexcept { return idx_[0]; }
  long long j() const noexcept { return idx_[1]; }
  long long k() const noexcept { return idx_[2]; }

 private:
  Errc code_;
  std::array<long long, 3> idx_;
};

}  // namespace lipfree
