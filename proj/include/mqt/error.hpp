// Copyright 2026 The mqt developers
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

#ifndef MQT_ERROR_HPP
#define MQT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mqt {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic or containers mixing elements of different prime fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// Violated precondition: bad degree, dimension mismatch, zero state,
/// division by zero, singular evolution operator, and the like.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (copy count, coset enumeration bound) was hit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A list of vectors required to be linearly independent was not.
/// Carries the dependency: coefficients, not all zero, combining the
/// offending vectors to zero.
class DependentSetError : public Error {
 public:
  DependentSetError(const std::string& what, std::vector<std::uint32_t> witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::uint32_t> witness_;
};

}  // namespace mqt

#endif
