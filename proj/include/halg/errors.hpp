#pragma once

#include <stdexcept>
#include <string>

namespace halg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoSolution : Error {
    NoSolution() : Error("target is not in the image") {}
};

struct IdempotentNotIdempotent : Error {
    IdempotentNotIdempotent() : Error("presentation matrix is not idempotent") {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct DegreeCapExceeded : Error {
    using Error::Error;
};

struct ActionSideMismatch : Error {
    using Error::Error;
};

struct NotInvertible : Error {
    NotInvertible(const std::string& what, std::size_t defect) : Error(what), rank_defect(defect) {}
    std::size_t rank_defect;
};

struct AntipodeNotInvertible : Error {
    AntipodeNotInvertible() : Error("antipode is not invertible") {}
};

struct NotIso : Error {
    using Error::Error;
};

struct NotCocommutative : Error {
    using Error::Error;
};

struct MissingTranslationData : Error {
    using Error::Error;
};

struct SideMismatch : Error {
    using Error::Error;
};

struct HypothesisFailed : Error {
    HypothesisFailed(const std::string& which_, const std::string& witness)
        : Error("hypothesis (" + which_ + ") failed: " + witness), which(which_) {}
    std::string which;
};

struct UnknownInstance : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_, std::size_t col_)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " + msg), line(line_), column(col_) {}
    std::size_t line, column;
};

}  // namespace halg
