#pragma once

#include <stdexcept>
#include <string>

namespace bullberge {

// Caller passed something malformed (bad vertex id, non-P3 triple, parse error).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A structural precondition failed at runtime: the input graph is not in the
// class a construction requires. Carries a human-readable certificate naming
// the violated claim and the vertices involved.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// A theory-impossible situation: indicates a bug, not a bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bullberge
