#pragma once

#include <stdexcept>
#include <string>

namespace dgaut {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (graphs, group tables, presentations, polynomials).
struct ParseError : Error {
    using Error::Error;
};

/// Two values over different generator tables were combined.
struct TableMismatchError : Error {
    using Error::Error;
};

/// A homogeneity or degree contract was violated.
struct DegreeError : Error {
    using Error::Error;
};

/// A configured cap (vertex count, basis size, group order) was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

/// A structural invariant of an input value does not hold.
struct ValidationError : Error {
    using Error::Error;
};

/// A file could not be opened or written.
struct IOError : Error {
    using Error::Error;
};

/// A presentation does not have the vertex-encoding shape an operation needs.
struct StructureError : Error {
    using Error::Error;
};

/// A generator map failed its commutation check against the differential.
struct LiftError : Error {
    std::string generator;
    std::string residual;

    LiftError(std::string gen, std::string res)
        : Error("commutation with d fails on generator " + gen + ": residual " + res),
          generator(std::move(gen)),
          residual(std::move(res)) {}
};

}  // namespace dgaut
