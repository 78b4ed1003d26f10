#ifndef SFL_ERRORS_HPP
#define SFL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sfl {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different dimensions d.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Coweights of different total weight where equal weight is required.
class WeightMismatch : public Error {
public:
    using Error::Error;
};

// A result violated the pinned normalization (odd or negative v-exponents
// where a polynomial in q was required).
class NormalizationFailure : public Error {
public:
    using Error::Error;
};

// An exact division left a remainder or a triangular solve failed to
// terminate; always an implementation bug, never bad input.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

// A series digit needed by the computation lies beyond the certified
// precision window.
class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

// Inversion or valuation of an exactly-zero series.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

// Unitriangular peeling terminated with a nonzero remainder.
class NotInImage : public Error {
public:
    using Error::Error;
};

// The (norm of the) input element is not regular semisimple.
class NotRegular : public Error {
public:
    using Error::Error;
};

// Lattice counts changed when the enumeration window grew.
class WindowUnstable : public Error {
public:
    using Error::Error;
};

// An input violates the hypotheses of the identity being verified.
class HypothesisViolated : public Error {
public:
    using Error::Error;
};

// Malformed textual input (series literals, coweight strings, instance files).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace sfl

#endif
