#pragma once

#include <stdexcept>
#include <string>

namespace framefit {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct KMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a certified accuracy cannot be reached within the scan
// or check horizon (tail-mass bound too weak, or k-family unbounded).
struct HorizonExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSummable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotMajorized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPositiveDefinite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAdmissibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationInadmissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SufficiencyFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownExample : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace framefit
