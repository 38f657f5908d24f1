#pragma once

#include <stdexcept>
#include <string>

namespace burgess {

// Every failure raised by the library derives from Error so callers (and the
// CLI) can separate domain failures from programming errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonInvertible : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct TwistModulusMismatch : Error { using Error::Error; };
struct DenominatorZeroEverywhere : Error { using Error::Error; };
struct ParameterDegeneracy : Error { using Error::Error; };
struct ThresholdUnreachable : Error { using Error::Error; };
struct TauOverflow : Error { using Error::Error; };
struct TableTooSmall : Error { using Error::Error; };
struct QuadratureNonConvergence : Error { using Error::Error; };
struct StationaryPointOutsideSupport : Error { using Error::Error; };
struct PoleAtOne : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

}  // namespace burgess
