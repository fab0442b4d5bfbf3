#ifndef BOOLPROB_ERRORS_HPP
#define BOOLPROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace boolprob {

// Base class for everything thrown by the library. `is_input_error` drives
// the CLI exit-code split: bad input/usage vs. numerical failure.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual bool is_input_error() const { return false; }
};

// Malformed input: schema violations, bad weights, out-of-range parameters.
class InputError : public Error {
public:
    using Error::Error;
    bool is_input_error() const override { return true; }
};

// Mathematically undefined request (e.g. odd negative moment of a law with
// an atom at zero).
class DomainError : public Error {
public:
    using Error::Error;
    bool is_input_error() const override { return true; }
};

// An operation that requires a symmetric law was given a non-symmetric one.
// Callers may symmetrize explicitly; it never happens silently.
class SymmetryError : public Error {
public:
    using Error::Error;
    bool is_input_error() const override { return true; }
};

// Recovering a measure from a rational function failed: complex poles,
// negative residues or a residue sum far from one. Signals an upstream
// transform bug or ill-conditioning.
class NotACauchyTransform : public Error {
public:
    using Error::Error;
};

// Polynomial degree would exceed the supported cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

// A degenerate certification case whose inputs are numerically inconsistent
// (e.g. zero Stein discrepancy with nonzero relative entropy).
class IndeterminateError : public Error {
public:
    using Error::Error;
};

} // namespace boolprob

#endif
