// Copyright 2026 The esdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace esd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter violates a documented constraint.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Matrix operands have unsupported or mismatched dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed: non-convergence, loss of positivity,
/// or an output that no longer validates.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace esd
