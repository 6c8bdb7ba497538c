#pragma once

#include <stdexcept>
#include <string>

namespace dcb {

// Error taxonomy used across the library. The CLI maps these to exit codes
// (config 2, stale artifact 4, everything else 3).
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StaleArtifactError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dcb
