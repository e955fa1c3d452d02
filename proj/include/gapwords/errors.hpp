#pragma once

#include <stdexcept>
#include <string>

namespace gapwords {

// Malformed rule parameters; rejected at construction.
struct spec_error : std::invalid_argument {
    explicit spec_error(const std::string& m) : std::invalid_argument(m) {}
};

// A declared regularity class is violated, or an operation was applied to a
// word class it does not cover.
struct class_error : std::invalid_argument {
    explicit class_error(const std::string& m) : std::invalid_argument(m) {}
};

// A summarized horizon is too short to certify a count. Raised instead of
// silently undercounting.
struct horizon_error : std::runtime_error {
    explicit horizon_error(const std::string& m) : std::runtime_error(m) {}
};

// A materialization would exceed the configured prefix budget.
struct resource_guard_error : std::runtime_error {
    explicit resource_guard_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace gapwords
