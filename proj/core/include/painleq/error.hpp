#pragma once

#include <stdexcept>
#include <string>

namespace painleq {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Division by an identically zero quantity. In the classification pipeline
// this is a meaningful verdict (no equivalence transformation exists), not
// a programming error.
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

// A nonzero element of a radical extension that is a zero divisor; we report
// rather than pick a branch.
struct NonInvertible : Error {
    explicit NonInvertible(const std::string& msg = "element is not invertible") : Error(msg) {}
};

struct DegenerateMap : Error {
    explicit DegenerateMap(const std::string& msg = "degenerate point map") : Error(msg) {}
};

struct BranchViolation : Error {
    explicit BranchViolation(const std::string& msg = "branch conditions violated") : Error(msg) {}
};

// A normalization scheme equation could not be solved for its designated
// unknown by the triangular strategy.
struct NonTriangular : Error {
    explicit NonTriangular(const std::string& msg) : Error(msg) {}
};

struct MissingDerivations : Error {
    explicit MissingDerivations(const std::string& msg = "no derivation table loaded for this problem")
        : Error(msg) {}
};

struct UnsupportedConstraintSystem : Error {
    explicit UnsupportedConstraintSystem(const std::string& msg) : Error(msg) {}
};

// Internal invariant failure: a normalized invariant still contains frame
// variables. Indicates scheme misuse, not bad user input.
struct ResidualFrameVariable : Error {
    explicit ResidualFrameVariable(const std::string& msg) : Error(msg) {}
};

}  // namespace painleq
