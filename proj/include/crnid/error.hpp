#ifndef CRNID_ERROR_HPP
#define CRNID_ERROR_HPP

#include <stdexcept>
#include <string>

namespace crnid {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands live on different variable catalogs.
struct CatalogMismatchError : Error {
    using Error::Error;
};

// A variable name or index is not part of the catalog in use.
struct UnknownVariableError : Error {
    using Error::Error;
};

// evaluate() was asked for a value the point does not assign.
struct UnassignedVariableError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

// A caller violated an operation precondition (bad index, zero input, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Text input (polynomial syntax, ideal files, CRN files) failed to parse.
// Line/column are 1-based; column 0 means "whole line".
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : Error(format(line_, column_, msg)), line(line_), column(column_) {}

  private:
    static std::string format(int line, int column, const std::string& msg) {
        std::string s = "parse error at line " + std::to_string(line);
        if (column > 0) s += ", column " + std::to_string(column);
        s += ": " + msg;
        return s;
    }
};

// Numeric stationary solve failed (Newton divergence, singular Jacobian,
// negative equilibrium component).
struct SolveError : Error {
    using Error::Error;
};

}  // namespace crnid

#endif
