// Copyright 2026 The arpq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace arpq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad instance file, bad arguments).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// No route can reach the end node within the deadline.
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

/// A dense simulation or exhaustive search would exceed the configured width.
class WidthCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace arpq
