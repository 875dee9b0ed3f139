#pragma once

#include <stdexcept>
#include <string>

namespace radmax {

// Error taxonomy shared by all modules. Every failure surfaces as a typed
// exception; nothing is reported through sentinel values except the
// legitimate extended-real infinities carried by LogScalar.

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A moment integral does not exist (non-integrable singularity at 0 or an
// unbounded tail).
class DivergentMoment : public Error {
public:
    explicit DivergentMoment(const std::string& what) : Error(what) {}
};

// Adaptive quadrature could not reach the requested tolerance within its
// panel budget.
class QuadratureFailure : public Error {
public:
    explicit QuadratureFailure(const std::string& what) : Error(what) {}
};

// A tabulated function is too coarse to resolve a level set at the
// requested lambda.
class GridTooCoarse : public Error {
public:
    explicit GridTooCoarse(const std::string& what) : Error(what) {}
};

// A supremum search domain cannot be truncated safely (no tail certificate).
class TailNotControlled : public Error {
public:
    explicit TailNotControlled(const std::string& what) : Error(what) {}
};

// Evaluation requested at a discontinuity where the operation requires
// continuity.
class BreakpointAtT : public Error {
public:
    explicit BreakpointAtT(const std::string& what) : Error(what) {}
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

// Malformed experiment configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace radmax
