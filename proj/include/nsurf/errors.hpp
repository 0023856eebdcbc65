#pragma once

#include <stdexcept>
#include <string>

namespace nsurf {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
    using Error::Error;
};
struct InconsistentGluing : Error {
    using Error::Error;
};
struct SelfGluedFace : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotABoundaryFace : Error {
    using Error::Error;
};
struct NotAdmissible : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct InvalidTriangulation : Error {
    using Error::Error;
};
struct ParameterOutOfRange : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};

}  // namespace nsurf
