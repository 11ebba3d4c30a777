#pragma once

#include <stdexcept>
#include <string>

namespace sdirac {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("inverse of zero in Q(i,sqrt2)") {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct UndeclaredParity : std::logic_error {
    explicit UndeclaredParity(const std::string& what) : std::logic_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct UnboundedShift : std::logic_error {
    explicit UnboundedShift(const std::string& what) : std::logic_error(what) {}
};

// Raised when the monogenic projection constant 1/(2k-2+M) does not exist.
struct FischerSingular : std::domain_error {
    explicit FischerSingular(const std::string& what) : std::domain_error(what) {}
};

// Raised when a structural check is requested outside its parameter window.
struct WindowViolation : std::domain_error {
    explicit WindowViolation(const std::string& what) : std::domain_error(what) {}
};

struct RankUnstable : std::runtime_error {
    explicit RankUnstable(const std::string& what) : std::runtime_error(what) {}
};

struct NoCartanConfig : std::domain_error {
    explicit NoCartanConfig(const std::string& what) : std::domain_error(what) {}
};

struct SyntaxError : std::invalid_argument {
    SyntaxError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

}  // namespace sdirac
