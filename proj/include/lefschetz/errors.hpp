#pragma once
#include <stdexcept>
#include <string>

namespace lefschetz {

// Shape mismatch: non-square determinant input, out-of-range minor order, ...
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input violates a documented precondition (parameter order, rank range, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Group action or symmetry class incompatible with the given ring/box.
struct ConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Problem size exceeds a hard implementation cap (permanent width, enumeration cells).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An algorithm-internal contract failed; carries a diagnostic.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lefschetz
