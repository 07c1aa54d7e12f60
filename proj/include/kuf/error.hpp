// Copyright 2026 The kuniform Authors
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

#ifndef KUF_ERROR_HPP_
#define KUF_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kuf {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A generator matrix whose rank is below its row count.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Two objects over different finite fields were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed its configured cap.
/// Raised instead of approximating.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A value violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace kuf

#endif  // KUF_ERROR_HPP_
