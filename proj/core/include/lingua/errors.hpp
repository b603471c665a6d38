#pragma once

#include <stdexcept>
#include <string>

namespace lingua {

/// Input violates an operation's contract (bad flag value, malformed file
/// content, mismatched profiles, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& message)
        : std::runtime_error(message) {}
};

/// File could not be read or written. The message names the path.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message)
        : std::runtime_error(message) {}
};

}  // namespace lingua
