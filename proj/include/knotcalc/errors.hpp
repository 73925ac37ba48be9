#pragma once

#include <stdexcept>
#include <string>

namespace knotcalc {

// Malformed textual input (files, DSL, set expressions). CLI exit code 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input violating a domain precondition. CLI exit code 3.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace knotcalc
