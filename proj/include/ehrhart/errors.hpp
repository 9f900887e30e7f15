#ifndef EHRHART_ERRORS_HPP
#define EHRHART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ehrhart {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DegeneratePolytope : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct EnumerationCapExceeded : Error {
    using Error::Error;
};

struct NegativeDeltaCoefficient : Error {
    using Error::Error;
};

struct ReciprocityViolation : Error {
    using Error::Error;
};

struct DecompositionInvariantViolation : Error {
    using Error::Error;
};

struct DependentGenerators : Error {
    using Error::Error;
};

struct ShiftUnderflow : Error {
    using Error::Error;
};

struct NoInteriorPoint : Error {
    using Error::Error;
};

struct TataViolation : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct HVectorInvariantViolation : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

} // namespace ehrhart

#endif
