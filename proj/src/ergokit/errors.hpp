#pragma once

#include <stdexcept>
#include <string>

namespace ergokit {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  domain,
  non_hermitian,
  out_of_family,
  singular_reference,
  unphysical_covariance,
  truncation_too_small,
  no_bracket,
  numeric,
  bad_config,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& w)
      : Error(ErrorCode::dimension_mismatch, w) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::domain, w) {}
};

struct NonHermitianInput : Error {
  explicit NonHermitianInput(const std::string& w)
      : Error(ErrorCode::non_hermitian, w) {}
};

struct OutOfFamilyRange : Error {
  explicit OutOfFamilyRange(const std::string& w)
      : Error(ErrorCode::out_of_family, w) {}
};

struct SingularReference : Error {
  explicit SingularReference(const std::string& w)
      : Error(ErrorCode::singular_reference, w) {}
};

struct UnphysicalCovariance : Error {
  explicit UnphysicalCovariance(const std::string& w)
      : Error(ErrorCode::unphysical_covariance, w) {}
};

struct TruncationTooSmall : Error {
  TruncationTooSmall(const std::string& w, double measured_deficit)
      : Error(ErrorCode::truncation_too_small, w), deficit(measured_deficit) {}
  double deficit;
};

struct NoBracket : Error {
  explicit NoBracket(const std::string& w) : Error(ErrorCode::no_bracket, w) {}
};

struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ErrorCode::numeric, w) {}
};

struct BadConfig : Error {
  explicit BadConfig(const std::string& w) : Error(ErrorCode::bad_config, w) {}
};

}  // namespace ergokit
