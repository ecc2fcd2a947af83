#pragma once

#include <stdexcept>
#include <string>

namespace orbi {

// Base for everything thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, bad spec, precondition violated by the caller.
struct input_error : error {
    using error::error;
};

// A coefficient-table window too small for the requested computation.
struct window_error : input_error {
    using input_error::input_error;
};

// Operation not defined for the given kind (e.g. subgroup hom spaces over
// presented groups).
struct unsupported_error : input_error {
    using input_error::input_error;
};

// Enumeration exceeded its configured time or size budget.
struct budget_error : error {
    std::string stage;
    explicit budget_error(std::string stage_)
        : error("budget exceeded during " + stage_), stage(std::move(stage_)) {}
};

// A promised internal invariant failed; always a bug, never user error.
struct internal_error : error {
    using error::error;
};

}  // namespace orbi
