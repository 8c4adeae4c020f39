// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace volform {

/// Malformed or inconsistent caller input (bad file, wrong dimensions,
/// violated preconditions). CLI maps this to exit code 2.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Input is well-formed but outside the operation's mathematical domain
/// (e.g. Cholesky of a non positive definite matrix). CLI exit code 3.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check inside the verification machinery failed; results cannot
/// be trusted. Never raised by well-formed use of the formula layer.
class InternalError : public std::runtime_error {
  public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace volform
