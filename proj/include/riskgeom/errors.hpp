#pragma once

#include <stdexcept>
#include <string>

namespace riskgeom {

// Bad parameters, malformed configs, unusable cones/grids.  CLI maps these
// to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad scenario data (CSV/JSON payloads).  CLI maps these to exit code 3.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace riskgeom
