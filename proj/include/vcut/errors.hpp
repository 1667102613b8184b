#pragma once

#include <stdexcept>
#include <string>

namespace vcut {

/// Malformed graph input: self-loops, parallel edges, bad ids, disconnected input.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The two terminal sets touch, so no vertex set can separate them.
class NoVertexCut : public std::domain_error {
public:
    NoVertexCut() : std::domain_error("no vertex cut exists") {}
};

/// Flow between the terminal sets differs from the expected connectivity.
class NotMinimumConfiguration : public std::domain_error {
public:
    NotMinimumConfiguration() : std::domain_error("not a minimum-kappa configuration") {}
};

/// Pair classification requested with n <= 2 * kappa.
class UnclassifiedRegime : public std::domain_error {
public:
    UnclassifiedRegime() : std::domain_error("unclassified regime: n <= 2*kappa") {}
};

/// A serialized index that fails version or structural validation.
class CorruptIndex : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration would exceed the configured size gate.
class OracleLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace vcut
