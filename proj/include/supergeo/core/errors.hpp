#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supergeo {

// Base class for everything the engine throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two values built over different charts were combined.
class ChartMismatchError : public Error {
public:
    ChartMismatchError() : Error("operands belong to different charts") {}
    explicit ChartMismatchError(const std::string& msg) : Error(msg) {}
};

// An operation needed a homogeneous input and got a mixed-parity one,
// or a parity constraint was violated.
class ParityError : public Error {
public:
    explicit ParityError(const std::string& msg) : Error(msg) {}
};

// invert() on a superfunction whose body is the zero fraction.
class NotInvertibleError : public Error {
public:
    explicit NotInvertibleError(const std::string& msg) : Error(msg) {}
};

// Division of even scalars by an exact zero.
class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by an exactly zero scalar") {}
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// Metric whose body matrix is singular (or otherwise fails validation
// where an operation demands a valid metric).
class DegenerateMetricError : public Error {
public:
    explicit DegenerateMetricError(const std::string& msg) : Error(msg) {}
};

// A formula's scalar prefactor has an exactly zero denominator for this
// input (for example the graded dimension makes m - n - 1 vanish).
class UndefinedDenominatorError : public Error {
public:
    explicit UndefinedDenominatorError(const std::string& msg) : Error(msg) {}
};

// Syntax or resolution failure in expression / scenario text.  `offset`
// is a byte offset into the source the parser was handed.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& msg)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Semantic problem in an otherwise well-formed scenario document.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A computation blew past the configured expression-size cap.
class ExpressionTooLargeError : public Error {
public:
    explicit ExpressionTooLargeError(std::size_t terms, std::size_t cap)
        : Error("expression exceeds the size cap: " + std::to_string(terms) +
                " terms > " + std::to_string(cap) +
                " (raise SUPERGEO_MAX_TERMS to override)") {}
};

}  // namespace supergeo
