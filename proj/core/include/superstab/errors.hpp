/*
 *   Copyright 2026 The superstab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace superstab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands from different semigroup families, or exponent vectors of
/// different arity.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A value left the representable range (orbit too deep, integer overflow).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A tabulated function was evaluated outside its table.
class CoverageError : public Error {
 public:
  CoverageError(const std::string& what, std::string element_key)
      : Error(what), element_key_(std::move(element_key)) {}

  const std::string& element_key() const noexcept { return element_key_; }

 private:
  std::string element_key_;
};

/// An element was used as a contraction anchor although |g(a)| <= 1.
class AnchorError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. The message names the offending field path.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An error raised inside a pipeline stage, relabelled with that stage.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace superstab
