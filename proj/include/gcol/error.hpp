#pragma once

#include <stdexcept>
#include <string>

namespace gcol {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph / partition / list input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's domain (vertex out of range, bad parameter).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Instance exceeds the configured exhaustive-search bound.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// A precondition the caller asked us to enforce does not hold.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// A constructive step produced output that contradicts a proven statement
/// (e.g. a decomposition failing one of its guaranteed properties). The
/// message carries a state dump sufficient to reproduce the instance.
class FalsificationError : public Error {
public:
    using Error::Error;
};

}  // namespace gcol
