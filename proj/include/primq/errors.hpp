// Copyright 2026 The primq Authors
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

namespace primq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range caller input (bad hex, degree 0, L < 2, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but exceeds the desk-scale limits.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// Elements from two different fields were combined.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Mathematically undefined request, e.g. the order of zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A required precomputation (typically the factorization of q^n-1) is missing.
class DependencyError : public Error {
 public:
  using Error::Error;
};

/// A circuit contains gates without a classical basis-state action.
class NotClassicalError : public Error {
 public:
  using Error::Error;
};

/// A basis map sent two supported basis states to the same image.
class NonInjectiveError : public Error {
 public:
  using Error::Error;
};

/// A state does not satisfy the precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Randomized search ran out of its candidate budget.
class SearchFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace primq
