#pragma once

#include <stdexcept>
#include <string>

namespace digicurv {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// grid
struct BorderContact : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };

// boundary
struct EmptyInput : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// separability / mdca
struct NotSeparable : Error { using Error::Error; };
struct DegenerateCurve : Error { using Error::Error; };

// estimator
struct EdgeNotOnArc : Error { using Error::Error; };

// groundtruth
struct NotOnCurve : Error { using Error::Error; };
struct SingularPoint : Error { using Error::Error; };
struct NoBoundaryFound : Error { using Error::Error; };

// harness
struct EmptyProfile : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct NonpositiveError : Error { using Error::Error; };

}  // namespace digicurv
