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

#ifndef LPM_ERROR_HPP
#define LPM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace lpm {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A path word contains a symbol outside {N, E}.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The two paths do not form a valid bounding pair (length mismatch,
/// different endpoints, or the lower path is not south of the upper one).
class InvalidPairError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The query has no defined answer on this input (e.g. chromatic number
/// of a matroid with loops).
class UndefinedError : public Error {
 public:
  using Error::Error;
};

/// A synthesized representation failed verification repeatedly.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// A search that must succeed by theory came up empty. Carries a JSON
/// artifact describing the instance so the failure can be reproduced.
class FalsificationError : public Error {
 public:
  FalsificationError(const std::string& what, std::string artifact)
      : Error(what), artifact_(std::move(artifact)) {}

  const std::string& artifact() const { return artifact_; }

 private:
  std::string artifact_;
};

}  // namespace lpm

#endif  // LPM_ERROR_HPP
