#pragma once

#include <stdexcept>

namespace vss {

/// Runtime data/solver failure: non-finite fields, overflow, non-convergence.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad run configuration: unknown keys, missing presets, invalid parameters.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or truncated artifact files.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace vss
