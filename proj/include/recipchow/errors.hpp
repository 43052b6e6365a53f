#pragma once

#include <stdexcept>
#include <string>

namespace recipchow {

// Violated precondition or malformed input. CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A consistency check that is guaranteed by theory failed. CLI maps this to
// exit code 2; seeing one means a bug, not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace recipchow
