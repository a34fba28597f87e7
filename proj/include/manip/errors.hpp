#pragma once

#include <stdexcept>
#include <string>

namespace manip {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A plan move that is not legal for the coalition (wrong direction,
// unknown pair, duplicate pair, or no-op).
struct IllegalMove : Error { using Error::Error; };

// An outcome pair that is not a member of the scoring model.
struct InvalidOutcome : Error { using Error::Error; };

// Scoring model rejected by the fixed-sum form check.
struct ModelNotSupported : Error { using Error::Error; };

struct MalformedTree : Error { using Error::Error; };
struct MalformedField : Error { using Error::Error; };
struct MalformedBracket : Error { using Error::Error; };
struct MalformedNetwork : Error { using Error::Error; };

// A flow network construction would need a negative capacity.
struct InvalidCapacity : Error { using Error::Error; };

// Coalition exceeds the configured search bound.
struct CoalitionTooLarge : Error { using Error::Error; };

// A throw was requested for a game whose fair winner is not in the coalition.
struct IllegalThrow : Error { using Error::Error; };

// Exhaustive enumeration refused: instance exceeds the configured cap.
struct TooLarge : Error { using Error::Error; };

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& message)
        : Error("line " + std::to_string(line_) + ":" + std::to_string(column_) +
                ": " + message),
          line(line_),
          column(column_) {}
};

struct ValidationError : Error {
    int line;
    explicit ValidationError(const std::string& message, int line_ = 0)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + message
                          : message),
          line(line_) {}
};

}  // namespace manip
