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

#ifndef MQT_POLY_HPP
#define MQT_POLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mqt/field.hpp"

namespace mqt {

/// Univariate polynomial over GF(p), coefficients in ascending degree order.
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient list and no degree.
class Polynomial {
 public:
  Polynomial(const FieldSpec& field, const std::vector<std::int64_t>& coeffs);

  static Polynomial zero(const FieldSpec& field) { return Polynomial(field, {}); }

  const FieldSpec& field() const noexcept { return field_; }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of x^i (zero beyond the stored length).
  Fp coeff(std::size_t i) const {
    return Fp(field_, i < coeffs_.size() ? coeffs_[i] : 0);
  }

  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

  bool is_monic() const noexcept {
    return !coeffs_.empty() && coeffs_.back() == 1;
  }

  /// Horner evaluation.
  Fp operator()(const Fp& x) const;

  bool operator==(const Polynomial& o) const noexcept {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Polynomial& o) const noexcept { return !(*this == o); }

 private:
  FieldSpec field_;
  std::vector<std::uint32_t> coeffs_;
};

/// All roots of a degree-2 polynomial, found by evaluating at every field
/// element; returned in increasing residue order. Degree must be exactly 2.
std::vector<Fp> quadratic_roots(const Polynomial& q);

/// The first monic rootless quadratic x^2 + b x + c in lexicographic order
/// on (b, c). Existence is guaranteed over every prime field.
Polynomial find_irreducible_quadratic(const FieldSpec& field);

}  // namespace mqt

#endif
