// Copyright 2026 the momcert authors
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

namespace momcert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponent outside the truncated basis (degree too high or wrong arity).
class ExponentOutOfRange : public Error {
 public:
  using Error::Error;
};

// Operation requested beyond the truncation degree of a moment vector.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class NonPositiveWeight : public Error {
 public:
  using Error::Error;
};

class InvalidDegree : public Error {
 public:
  using Error::Error;
};

// Total mass y_0 must be positive for the certificate search.
class ZeroMassViolation : public Error {
 public:
  using Error::Error;
};

class NonFinite : public Error {
 public:
  using Error::Error;
};

// Equality rows of an SDP are mutually inconsistent.
class IllPosed : public Error {
 public:
  using Error::Error;
};

class NotPSD : public Error {
 public:
  using Error::Error;
};

// The SDP iteration did not converge to the requested residuals.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace momcert
