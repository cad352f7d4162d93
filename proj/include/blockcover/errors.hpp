#ifndef BLOCKCOVER_ERRORS_HPP
#define BLOCKCOVER_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blockcover {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An input edge had equal endpoints.
struct SelfLoopError : Error {
    explicit SelfLoopError(const std::string &what) : Error(what) {}
};

struct UnknownVoterError : Error {
    explicit UnknownVoterError(const std::string &what) : Error(what) {}
};

// A profile violates the bounds of the requested validation mode. The
// message names the violated bound.
struct ProfileInvalidError : Error {
    explicit ProfileInvalidError(const std::string &what) : Error(what) {}
};

struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(std::size_t line_, std::size_t column_, const std::string &msg)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

struct DuplicateLabelError : ParseError {
    DuplicateLabelError(std::size_t line_, std::size_t column_, const std::string &msg)
        : ParseError(line_, column_, msg) {}
};

// An oracle was asked to process a graph above its vertex bound.
struct TooLargeError : Error {
    explicit TooLargeError(const std::string &what) : Error(what) {}
};

struct ParamInvalidError : Error {
    explicit ParamInvalidError(const std::string &what) : Error(what) {}
};

// Dictators were requested for a profile whose coverage check failed.
struct ConditionViolatedError : Error {
    explicit ConditionViolatedError(const std::string &what) : Error(what) {}
};

}  // namespace blockcover

#endif
