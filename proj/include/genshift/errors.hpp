// Copyright 2026 The genshift Authors
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

namespace genshift {

// Base of every exception the core library throws. The C API maps each
// subclass onto a stable status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An index, vector or map does not belong to the expected index set.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid arguments when building an IndexSet or IndexMap.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// A symbolic rule contradicts its own declared facts on a checked window.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// The requested operation does not apply to this map (precondition failure).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace genshift
