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

#include "mqt/poly.hpp"

#include <cassert>

namespace mqt {

Polynomial::Polynomial(const FieldSpec& field,
                       const std::vector<std::int64_t>& coeffs)
    : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (std::int64_t c : coeffs) coeffs_.push_back(field.reduce(c));
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Fp Polynomial::operator()(const Fp& x) const {
  if (x.field() != field_)
    throw FieldMismatchError("polynomial evaluated at element of another field");
  Fp acc(field_, 0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Fp(field_, *it);
  }
  return acc;
}

std::vector<Fp> quadratic_roots(const Polynomial& q) {
  if (q.degree() != std::optional<std::size_t>{2})
    throw DomainError("quadratic_roots requires a degree-2 polynomial");
  const FieldSpec& f = q.field();
  std::vector<Fp> roots;
  for (std::uint32_t k = 0; k < f.p(); ++k) {
    Fp x(f, k);
    if (q(x).is_zero()) roots.push_back(x);
  }
  return roots;
}

Polynomial find_irreducible_quadratic(const FieldSpec& field) {
  for (std::uint32_t b = 0; b < field.p(); ++b) {
    for (std::uint32_t c = 0; c < field.p(); ++c) {
      Polynomial q(field, {static_cast<std::int64_t>(c),
                           static_cast<std::int64_t>(b), 1});
      if (quadratic_roots(q).empty()) return q;
    }
  }
  // Monic rootless quadratics exist over every finite field: the (p^2-p)/2
  // products of distinct linear factors cannot exhaust all p^2 monic
  // quadratics together with the p squares.
  assert(false && "no irreducible quadratic found over a prime field");
  throw Error("internal error: irreducible quadratic search exhausted");
}

}  // namespace mqt
