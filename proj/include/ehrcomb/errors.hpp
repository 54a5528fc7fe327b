#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ehrcomb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error { using Error::Error; };
struct DuplicateNode : Error { using Error::Error; };
struct NegativeDegree : Error { using Error::Error; };
struct NegativeIndex : Error { using Error::Error; };
struct IndexTooSmall : Error { using Error::Error; };
struct EmptyWord : Error { using Error::Error; };
struct IncompatibleUniformity : Error { using Error::Error; };
struct NotUniform : Error { using Error::Error; };
struct CyclicRelation : Error { using Error::Error; };
struct InvalidLabeling : Error { using Error::Error; };
struct NonIntegral : Error { using Error::Error; };
struct ZeroDimension : Error { using Error::Error; };
struct BadHZero : Error { using Error::Error; };
struct SizeExceeded : Error { using Error::Error; };

// Parse failure in the poset spec DSL or in rational/poset input; carries the
// byte offset the parser stopped at.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

} // namespace ehrcomb
