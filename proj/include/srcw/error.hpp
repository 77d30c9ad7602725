#ifndef SRCW_ERROR_HPP
#define SRCW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace srcw {

/// Raised when an exhaustive routine would exceed its practical size cap.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal consistency check fails (a bug, never an input error).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace srcw

#endif  // SRCW_ERROR_HPP
