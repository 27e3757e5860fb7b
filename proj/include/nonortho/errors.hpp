#pragma once

#include <stdexcept>
#include <string>

namespace nonortho {

// Thrown when a desk-scale guard is exceeded (enumeration limits, dense
// baseline sizes). Distinct from std::invalid_argument so callers can map
// guard violations to their own exit code.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nonortho
