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

#include "mqt/field.hpp"

#include <string>

namespace mqt {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t limit) : p_(p) {
  if (p > limit)
    throw DomainError("modulus " + std::to_string(p) + " exceeds limit " +
                      std::to_string(limit));
  if (!is_prime(p))
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

Fp Fp::inverse() const {
  if (v_ == 0) throw DomainError("division by zero in GF(p)");
  // Extended Euclid on (v, p); p prime so gcd is 1.
  std::int64_t r0 = v_, r1 = p_;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return Fp(field(), s0);
}

}  // namespace mqt
