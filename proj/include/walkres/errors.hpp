#pragma once

#include <stdexcept>
#include <string>

namespace walkres {

// Base for everything thrown on purpose. The CLI maps each subclass to a
// distinct exit code, so keep the taxonomy flat.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments at the API boundary (negative sizes, unknown family, ...).
struct invalid_input : error {
    explicit invalid_input(const std::string& msg) : error(msg) {}
};

// Malformed edge-list input. Carries a 1-based line number when known.
struct parse_error : error {
    explicit parse_error(const std::string& msg, long line = 0)
        : error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}
    long line_number;
};

// Operation called on a graph that does not satisfy its contract
// (disconnected input, non-regular where regular is required, ...).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// Numeric computation failed its own acceptance check (residual too large,
// eigensolver failure, walk step cap exceeded).
struct numeric_error : error {
    explicit numeric_error(const std::string& msg) : error(msg) {}
};

// Internal cross-check failed; indicates a bug, not bad input.
struct invariant_violation : error {
    explicit invariant_violation(const std::string& msg) : error(msg) {}
};

}  // namespace walkres
