#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace leonard {

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroScale : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ThetaStarMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RatioNotConstant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotStandardOrdering : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DuplicateEigenvalue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EigenvalueNotInField : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TypeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DualMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotDualQKrawtchouk : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotKrawtchouk : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoQInField : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InconsistentArray : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Carries the list of violated inequalities, one human-readable entry each.
struct PrimaryDataInvalid : std::invalid_argument {
    explicit PrimaryDataInvalid(std::vector<std::string> violations);
    std::vector<std::string> violations;
};

} // namespace leonard
