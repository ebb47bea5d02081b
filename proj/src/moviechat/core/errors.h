// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOVIECHAT_CORE_ERRORS_H_
#define MOVIECHAT_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace moviechat {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a type or range contract (bad slot, operator kind, size).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

// Operation is not allowed in the current state (e.g. turn on closed session).
class ConflictError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Broken data files: missing template, malformed pattern registry, etc.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace moviechat

#endif  // MOVIECHAT_CORE_ERRORS_H_
