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

#ifndef MQT_FIELD_HPP
#define MQT_FIELD_HPP

#include <cstdint>

#include "mqt/error.hpp"

namespace mqt {

/// Upper bound on the modulus, so exhaustive per-element loops stay cheap.
inline constexpr std::uint32_t kDefaultFieldLimit = 1u << 15;

/// The prime field GF(p). Primality is verified at construction by trial
/// division; every element operation reduces into [0, p).
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t p, std::uint32_t limit = kDefaultFieldLimit);

  std::uint32_t p() const noexcept { return p_; }

  /// Canonical residue of an arbitrary signed integer.
  std::uint32_t reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  bool operator==(const FieldSpec& other) const noexcept { return p_ == other.p_; }
  bool operator!=(const FieldSpec& other) const noexcept { return p_ != other.p_; }

  /// Wraps an already-valid modulus without re-running the primality check.
  /// Only for internal use by containers that copied a validated field.
  static FieldSpec unchecked(std::uint32_t p) noexcept {
    FieldSpec f;
    f.p_ = p;
    return f;
  }

 private:
  FieldSpec() = default;
  std::uint32_t p_ = 2;
};

/// An element of GF(p): a canonical residue together with its modulus.
/// Arithmetic between elements of different fields throws FieldMismatchError.
class Fp {
 public:
  Fp(const FieldSpec& field, std::int64_t value)
      : v_(field.reduce(value)), p_(field.p()) {}

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }
  FieldSpec field() const noexcept { return FieldSpec::unchecked(p_); }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp operator+(const Fp& o) const {
    check_same(o);
    std::uint32_t s = v_ + o.v_;
    return make(s >= p_ ? s - p_ : s, p_);
  }
  Fp operator-(const Fp& o) const {
    check_same(o);
    return make(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
  }
  Fp operator*(const Fp& o) const {
    check_same(o);
    return make(static_cast<std::uint32_t>(
                    (static_cast<std::uint64_t>(v_) * o.v_) % p_),
                p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp operator-() const { return make(v_ == 0 ? 0 : p_ - v_, p_); }

  /// Multiplicative inverse by extended Euclid. Zero input throws DomainError.
  Fp inverse() const;

  bool operator==(const Fp& o) const {
    check_same(o);
    return v_ == o.v_;
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

 private:
  static Fp make(std::uint32_t v, std::uint32_t p) noexcept {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  void check_same(const Fp& o) const {
    if (p_ != o.p_)
      throw FieldMismatchError("field elements have different moduli");
  }
  Fp() = default;
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

/// Multiplicative inverse of x in its field; x must be nonzero.
inline Fp field_inverse(const Fp& x) { return x.inverse(); }

}  // namespace mqt

#endif
