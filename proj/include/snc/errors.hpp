#pragma once

#include <stdexcept>
#include <string>

namespace snc {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoopArc : Error {
    using Error::Error;
};
struct DigonPair : Error {
    using Error::Error;
};
struct VertexOutOfRange : Error {
    using Error::Error;
};
struct ArcNotPresent : Error {
    using Error::Error;
};
struct NonPositiveMultiplicity : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotSquare : Error {
    using Error::Error;
};
struct SizeCapExceeded : Error {
    using Error::Error;
};
struct InvalidProbability : Error {
    using Error::Error;
};
struct EmptyDigraph : Error {
    using Error::Error;
};
struct NotACounterexample : Error {
    using Error::Error;
};
struct InvalidDeletionWitness : Error {
    using Error::Error;
};
struct SignPreconditionViolated : Error {
    using Error::Error;
};

/// Text-format parse failure; positions are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg), line(line_), column(column_) {}
};

}  // namespace snc
