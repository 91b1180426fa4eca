#pragma once

#include <stdexcept>
#include <string>

namespace schurq {

// Raised when a cross-check that must hold by construction fails — a signal
// of a bug upstream, never of bad user input.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schurq
