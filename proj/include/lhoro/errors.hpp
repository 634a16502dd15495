/*
   Copyright 2026 The lhoro Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace lhoro {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or type invariant was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The inputs are valid but too close to a degenerate configuration
/// (trace near 2, overflowing traces) for the result to mean anything.
class NumericalDegeneracy : public Error {
 public:
  using Error::Error;
};

/// A distance or function evaluation produced an infinite or undefined value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (edge lists, JSON documents, config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lhoro
