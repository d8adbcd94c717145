// Copyright 2026 The maiou Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAIOU_ERRORS_HPP_
#define MAIOU_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace maiou {

// Base class for all library-level failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A dataset annotation violates the expected format (bad polygon, RLE sum
// mismatch, ...).
class InvalidAnnotationError : public Error {
 public:
  using Error::Error;
};

// A file could not be read or parsed.
class InputError : public Error {
 public:
  using Error::Error;
};

// The input uses a format this library deliberately does not support.
class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

// The caller asked for something inconsistent (bad flag value, mismatched
// argument sizes). CLI maps this to a usage exit code.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace maiou

#endif  // MAIOU_ERRORS_HPP_
