// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ivrep {

enum class ErrorKind {
    DuplicateElement,
    UnknownElement,
    CycleDetected,
    NotTransitive,
    NegativeCyclePresent,
    NotIntervalOrder,
    WeightOutOfRange,
    MissingElement,
    NoBadPattern,
    UnclassifiableCycle,
    TooManyVariables,
    SizeLimit,
    ParseError,
    ValidationError,
};

/// Input and precondition failures carry a machine-checkable kind so callers
/// can branch without string matching. Internal invariant violations are
/// reported as std::logic_error instead; those always indicate a bug.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ivrep
