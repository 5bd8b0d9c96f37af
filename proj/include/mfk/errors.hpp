#ifndef MFK_ERRORS_HPP
#define MFK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfk {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands built over structurally different rings.
class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string& msg) : Error(msg) {}
};

// Matrix or block dimensions do not match.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Text input rejected; carries a 1-based line/column position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

// A stated invariant fails (morphism identities, complex condition, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A matrix-factorization composition identity e0*e1 = W'*I fails.
class CompositionError : public ValidationError {
public:
    explicit CompositionError(const std::string& msg) : ValidationError(msg) {}
};

// Input to totalize is not a complex.
class NotAComplexError : public ValidationError {
public:
    explicit NotAComplexError(const std::string& msg) : ValidationError(msg) {}
};

// A module morphism does not respect presentations.
class IncompatibleMorphismError : public ValidationError {
public:
    explicit IncompatibleMorphismError(const std::string& msg) : ValidationError(msg) {}
};

// A kernel expected to be free could not be certified free.
class FreenessError : public Error {
public:
    explicit FreenessError(const std::string& msg) : Error(msg) {}
};

// A configured resource cap was hit before an answer was found.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

} // namespace mfk

#endif
