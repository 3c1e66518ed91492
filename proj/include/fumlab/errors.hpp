#pragma once

#include <stdexcept>
#include <string>

namespace fumlab {

/// Base class for all recoverable fumlab errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- graph construction and parsing ----

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct SelfLoop : Error {
    using Error::Error;
};

struct DuplicateNeighbor : Error {
    using Error::Error;
};

struct AsymmetricAdjacency : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& what, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

// ---- generators ----

struct EdgeNotFound : Error {
    using Error::Error;
};

struct FaceNotFound : Error {
    using Error::Error;
};

struct AnchorNotOnFace : Error {
    using Error::Error;
};

struct AnchorNotOnOuterCycle : Error {
    using Error::Error;
};

// ---- coloring and search ----

struct PaletteMismatch : Error {
    using Error::Error;
};

struct TooLargeForEnumeration : Error {
    using Error::Error;
};

/// A node or time budget ran out before the search finished. This is an
/// abnormal exit, never a statement about colorability.
struct ResourceLimitExceeded : Error {
    using Error::Error;
};

// ---- SAT model handling ----

struct ModelParseError : Error {
    using Error::Error;
};

struct IncompleteModel : Error {
    using Error::Error;
};

struct NotAModel : Error {
    using Error::Error;
};

struct AmbiguousVertexColor : Error {
    using Error::Error;
};

}  // namespace fumlab
