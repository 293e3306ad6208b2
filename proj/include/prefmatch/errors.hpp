#pragma once

#include <stdexcept>
#include <string>

namespace prefmatch {

/// Malformed or empty edge-list input.
class IngestionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (bad parameter, node already active, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A matching or driver set failed validation against its graph.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A statistic is undefined for the given input (e.g. f_hi-lo of an edgeless graph).
class StatisticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace prefmatch
