#pragma once

#include <stdexcept>
#include <string>

namespace mw {

// Boundary or typing mismatch between composed pieces.
class type_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An argument violates a documented precondition (invalid decomposition,
// missing root bag, shape violation, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A proved width bound did not hold. Always a bug.
class postcondition_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Parse failure in one of the text or JSON formats.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Oracle asked to work on an instance above its configured size bound.
class refusal_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mw
