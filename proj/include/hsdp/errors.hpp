// errors.hpp — Exception types shared across the library.

#pragma once

#include <stdexcept>

namespace hsdp {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An input violates a structural or numerical requirement.
struct ValidationError : Error {
    using Error::Error;
};

// A file or JSON document could not be decoded.
struct ParseError : Error {
    using Error::Error;
};

struct NotHermitian : ValidationError { using ValidationError::ValidationError; };
struct NotPSD : ValidationError { using ValidationError::ValidationError; };
struct BadTrace : ValidationError { using ValidationError::ValidationError; };
struct NotDistribution : ValidationError { using ValidationError::ValidationError; };
struct BadParameter : ValidationError { using ValidationError::ValidationError; };
struct BadRange : ValidationError { using ValidationError::ValidationError; };
struct DimensionMismatch : ValidationError { using ValidationError::ValidationError; };
struct TooFewInputs : ValidationError { using ValidationError::ValidationError; };
struct ZeroLambdaMin : ValidationError { using ValidationError::ValidationError; };
struct ContractionNotStrict : ValidationError { using ValidationError::ValidationError; };
struct DegenerateInterval : ValidationError { using ValidationError::ValidationError; };
struct FixedPointNotFullRank : ValidationError { using ValidationError::ValidationError; };

struct NoConvergence : Error { using Error::Error; };
struct KrausExplosion : Error { using Error::Error; };
struct NonUniqueFixedPoint : Error { using Error::Error; };
struct NoFixedPointFound : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };

}  // namespace hsdp
