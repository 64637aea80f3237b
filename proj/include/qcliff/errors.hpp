// Copyright 2026 The qcliff Authors
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

namespace qcliff {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Invalid dimension, modulus or embedding parameters. */
class DomainError : public Error {
 public:
  using Error::Error;
};

/** Operands disagree on qudit count or dimension. */
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/** Matrix has the wrong shape (odd side, non-square, wrong size). */
class MalformedMatrix : public Error {
 public:
  using Error::Error;
};

/** A precondition on an argument value was violated. */
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/** Qudit index out of range, or control equal to target. */
class IndexError : public Error {
 public:
  using Error::Error;
};

/** Operation is undefined for the identity word or a zero vector. */
class DegenerateWord : public Error {
 public:
  using Error::Error;
};

/** Dense oracle or exhaustive search would exceed the configured size cap. */
class ScaleLimit : public Error {
 public:
  using Error::Error;
};

/** Malformed text input. */
class ParseError : public Error {
 public:
  using Error::Error;
};

/** An internal postcondition failed; indicates a bug or a false claim. */
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace qcliff
