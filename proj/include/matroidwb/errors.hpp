#pragma once

#include <stdexcept>
#include <string>

namespace matroidwb {

enum class ErrorCode {
  kInvalidArgument,
  kEmptyBases,
  kMixedCardinality,
  kExchangeViolation,
  kBasepointIsSeparator,
  kNotCircuitHyperplane,
  kPathViolation,
  kFDisjointFromAllBases,
  kDependentGeneratorSet,
  kUnknownName,
  kDegreeOverflow,
  kNotAProbabilityPolynomial,
  kLoopPresent,
  kNotBipartite,
  kParseError,
};

const char* error_code_name(ErrorCode code);

class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matroidwb
