// Copyright 2026 The ltq-edhc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ltq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A binary label string has the wrong length or a character other than 0/1.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A dimension is outside the range an operation supports, or two labels
/// of different dimension were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Two paths handed to concatenation share a node.
class OverlapError : public Error {
 public:
  using Error::Error;
};

/// The last node of one path is not adjacent to the first node of the next.
class JunctionError : public Error {
 public:
  using Error::Error;
};

/// A request that would run an unbounded search.
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// An input that was required to be verified is not.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A cycles document could not be parsed or violates its schema.
class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace ltq
