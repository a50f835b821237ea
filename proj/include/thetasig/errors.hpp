#pragma once

#include <stdexcept>
#include <string>

namespace thetasig {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
    using Error::Error;
};
struct ParameterOutOfRange : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct ZeroRoot : Error {
    using Error::Error;
};
struct DegenerateBasis : Error {
    using Error::Error;
};
struct SingularSystem : Error {
    using Error::Error;
};
struct BadGeneratorIndex : Error {
    using Error::Error;
};
struct OrbitLimitExceeded : Error {
    using Error::Error;
};
struct ConstraintViolation : Error {
    using Error::Error;
};
// Raised when a closed-form table has no entry for the requested cell.
struct NotTabulated : Error {
    using Error::Error;
};
struct InvalidParabolicSubset : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace thetasig
