#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (band edge, E = 0, bad grid, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure did not reach its accuracy target.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Requested problem size exceeds the configured dimension cap.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Effective coupling vanishes; no localized state exists.
class DelocalizedError : public Error {
public:
    using Error::Error;
};

/// Bound-state condition has no positive root on the requested branch.
class NoBoundStateError : public Error {
public:
    using Error::Error;
};

/// High-frequency precondition of the effective model is violated.
class RegimeError : public Error {
public:
    using Error::Error;
};

} // namespace zeno
