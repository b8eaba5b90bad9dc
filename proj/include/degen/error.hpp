#pragma once

#include <stdexcept>
#include <string>

namespace degen {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A denominator vanished at the requested assignment.
class EvaluationPole : public Error {
public:
    explicit EvaluationPole(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NonSquare : public Error {
public:
    explicit NonSquare(const std::string& what) : Error(what) {}
};

/// The basis family's determinant is the zero rational function.
class SingularFamily : public Error {
public:
    explicit SingularFamily(const std::string& what) : Error(what) {}
};

/// Parse error with 1-based line/column location.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int line, int col)
        : Error(what + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
          raw_(what),
          line_(line),
          col_(col) {}
    /// Message without the location suffix.
    const std::string& raw() const { return raw_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string raw_;
    int line_;
    int col_;
};

class IndexOrderError : public Error {
public:
    explicit IndexOrderError(const std::string& what) : Error(what) {}
};

class DuplicateProduct : public Error {
public:
    explicit DuplicateProduct(const std::string& what) : Error(what) {}
};

class TSymbolForbidden : public Error {
public:
    explicit TSymbolForbidden(const std::string& what) : Error(what) {}
};

class UnknownAlgebra : public Error {
public:
    explicit UnknownAlgebra(const std::string& what) : Error(what) {}
};

class MissingBasisRow : public Error {
public:
    explicit MissingBasisRow(const std::string& what) : Error(what) {}
};

}  // namespace degen
