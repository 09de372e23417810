// Copyright 2026 The banzhaf-switch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file errors.hpp
/// Exception hierarchy shared by the library and the command-line tool.
/// Each class maps onto one process exit code of the CLI.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace banzhaf {

/// Base class of every error raised by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation
/// (variable index out of range, mismatched universes, k > n, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// A precondition on the *state* of a value was violated,
/// e.g. asking for the disjoint weight of an uncertified form.
class contract_error : public error {
 public:
  using error::error;
};

/// A configurable enumeration or evaluation cap was exceeded.
class resource_error : public error {
 public:
  using error::error;
};

/// The requested computation method does not apply to the system's shape.
class unsupported_method_error : public error {
 public:
  using error::error;
};

/// Malformed system document.
class parse_error : public error {
 public:
  using error::error;
};

/// Well-formed document describing an invalid system.
/// The message starts with the offending field path.
class validation_error : public error {
 public:
  validation_error(std::string path, const std::string& what)
      : error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Two computation routes disagreed.
class cross_check_error : public error {
 public:
  using error::error;
};

}  // namespace banzhaf
