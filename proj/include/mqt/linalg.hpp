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

#ifndef MQT_LINALG_HPP
#define MQT_LINALG_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "mqt/field.hpp"

namespace mqt {

/// Dense vector over GF(p). Dimension is at least 1; entries are canonical
/// residues of a single field.
class Vec {
 public:
  Vec(const FieldSpec& field, const std::vector<std::int64_t>& entries);
  Vec(const FieldSpec& field, std::initializer_list<std::int64_t> entries)
      : Vec(field, std::vector<std::int64_t>(entries)) {}

  static Vec zero(const FieldSpec& field, std::size_t dim);
  /// Standard basis vector e_i.
  static Vec unit(const FieldSpec& field, std::size_t dim, std::size_t i);

  std::size_t dim() const noexcept { return e_.size(); }
  const FieldSpec& field() const noexcept { return field_; }
  Fp at(std::size_t i) const { return Fp(field_, e_.at(i)); }
  void set(std::size_t i, const Fp& v);
  bool is_zero() const noexcept;
  const std::vector<std::uint32_t>& raw() const noexcept { return e_; }

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator*(const Fp& s) const;

  bool operator==(const Vec& o) const noexcept {
    return field_ == o.field_ && e_ == o.e_;
  }
  bool operator!=(const Vec& o) const noexcept { return !(*this == o); }

  /// True when the vectors are nonzero scalar multiples of each other.
  bool parallel_to(const Vec& o) const;

 private:
  friend class Mat;
  Vec(const FieldSpec& field, std::vector<std::uint32_t> raw)
      : field_(field), e_(std::move(raw)) {}
  FieldSpec field_;
  std::vector<std::uint32_t> e_;
};

/// Dense row-major matrix over GF(p). Zero rows are allowed (empty spans);
/// columns are at least 1.
class Mat {
 public:
  Mat(const FieldSpec& field, std::size_t rows, std::size_t cols);
  Mat(const FieldSpec& field, std::size_t rows, std::size_t cols,
      const std::vector<std::int64_t>& entries);

  static Mat identity(const FieldSpec& field, std::size_t n);
  static Mat from_rows(const FieldSpec& field, std::span<const Vec> rows,
                       std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  Fp at(std::size_t r, std::size_t c) const {
    return Fp(field_, e_.at(r * cols_ + c));
  }
  void set(std::size_t r, std::size_t c, const Fp& v);
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator*(const Fp& s) const;

  bool is_zero() const noexcept;

  bool operator==(const Mat& o) const noexcept {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           e_ == o.e_;
  }
  bool operator!=(const Mat& o) const noexcept { return !(*this == o); }

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> e_;
};

struct RrefResult {
  Mat rref;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form and rank.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Determinant of a square matrix, by elimination.
Fp det(const Mat& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// A subspace of GF(p)^n in canonical form: the basis matrix is in RREF with
/// nonzero rows and strictly increasing pivot columns, so two subspaces are
/// equal exactly when their basis matrices are identical.
class Subspace {
 public:
  /// Span of the rows of a generator matrix.
  static Subspace span_of(const Mat& generators);
  static Subspace zero(const FieldSpec& field, std::size_t ambient);
  static Subspace full(const FieldSpec& field, std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat& basis() const noexcept { return basis_; }
  const FieldSpec& field() const noexcept { return basis_.field(); }

  /// Residual of v after eliminating the basis pivots. Zero iff v is a
  /// member; otherwise a canonical representative of v modulo the subspace.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }

  bool operator==(const Subspace& o) const noexcept {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const noexcept { return !(*this == o); }

 private:
  Subspace(std::size_t ambient, Mat basis)
      : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_;
  Mat basis_;  // RREF, no zero rows
};

/// Null space {x : m x = 0} as a canonical subspace of GF(p)^cols.
Subspace kernel(const Mat& m);

/// Full solution set of m x = y: a particular solution plus the kernel, or
/// an infeasibility certificate (the augmented-RREF row [0 ... 0 | c], c != 0).
struct AffineSolutionSet {
  bool feasible;
  std::optional<Vec> particular;  // free variables set to zero
  Subspace kernel;
  std::optional<Vec> certificate;  // present iff infeasible
};

AffineSolutionSet solve(const Mat& m, const Vec& y);

/// Invertible matrix T with T * inputs[i] = outputs[i] for all i. Both lists
/// must be linearly independent (else DependentSetError with the dependency);
/// the remaining directions are pinned deterministically by extending each
/// list with the lexicographically first standard basis vectors outside its
/// span, pairing them in order.
Mat invertible_completion(std::span<const Vec> inputs,
                          std::span<const Vec> outputs);

/// Kronecker products; composite index of (i, j) is i * dim(b) + j.
Vec kron(const Vec& a, const Vec& b);
Mat kron(const Mat& a, const Mat& b);

/// n-fold tensor power of a vector (n >= 1).
Vec tensor_power(const Vec& v, std::size_t n);

}  // namespace mqt

#endif
