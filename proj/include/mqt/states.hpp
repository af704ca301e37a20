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

#ifndef MQT_STATES_HPP
#define MQT_STATES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mqt/linalg.hpp"

namespace mqt {

/// A modal system: GF(p)^d with d >= 2. Pure states are nonzero vectors up
/// to nonzero scalar; there are (p^d - 1) / (p - 1) distinct rays.
class StateSpace {
 public:
  StateSpace(const FieldSpec& field, std::size_t dim);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t ray_count() const noexcept;

  bool operator==(const StateSpace& o) const noexcept {
    return field_ == o.field_ && dim_ == o.dim_;
  }
  bool operator!=(const StateSpace& o) const noexcept { return !(*this == o); }

 private:
  FieldSpec field_;
  std::size_t dim_;
};

/// A pure state: a nonzero vector, compared as a ray. The canonical
/// representative scales the first nonzero entry to 1.
class ModalState {
 public:
  ModalState(const StateSpace& space, const Vec& v);

  const StateSpace& space() const noexcept { return space_; }
  const Vec& vector() const noexcept { return v_; }
  Vec canonical_ray() const;

  bool same_ray(const ModalState& o) const;

 private:
  StateSpace space_;
  Vec v_;
};

/// An ordered measurement basis: d independent vectors, stored as the
/// columns of an invertible matrix.
class Basis {
 public:
  explicit Basis(const Mat& columns);
  static Basis standard(const StateSpace& space);

  const Mat& matrix() const noexcept { return cols_; }
  std::size_t size() const noexcept { return cols_.cols(); }
  /// Coordinate vector of v in this basis.
  Vec coordinates(const Vec& v) const;

 private:
  Basis(Mat cols, Mat inv) : cols_(std::move(cols)), inv_(std::move(inv)) {}
  Mat cols_;
  Mat inv_;
};

/// Outcomes that can occur when measuring the state in the basis: exactly
/// the indices with nonzero coordinate. Sorted ascending, never empty.
std::vector<std::size_t> possible_outcomes(const ModalState& state,
                                           const Basis& basis);

/// Outcomes possible for a mixed state (a nonzero subspace): indices whose
/// coordinate is nonzero for at least one vector in the subspace.
std::vector<std::size_t> possible_outcomes(const Subspace& mixed,
                                           const Basis& basis);

/// Apply an invertible evolution to a state. Singular maps are rejected.
ModalState evolve(const ModalState& state, const Mat& transform);

/// A joint state of two systems; index (i, j) lives at i * dim_b + j.
class BipartiteState {
 public:
  BipartiteState(const StateSpace& a, const StateSpace& b, const Vec& joint);
  static BipartiteState product(const ModalState& a, const ModalState& b);

  const StateSpace& space_a() const noexcept { return a_; }
  const StateSpace& space_b() const noexcept { return b_; }
  const Vec& vector() const noexcept { return joint_; }

  /// Coefficients as a dim_a x dim_b matrix.
  Mat coefficient_matrix() const;

  /// Conditional state of B given each outcome of measuring A in the given
  /// basis; nullopt marks outcomes that cannot occur.
  std::vector<std::optional<ModalState>> conditional_states(
      const Basis& basis_a) const;

  /// Mixed state of one side: the span of its conditional states. Does not
  /// depend on the measurement basis used on the other side.
  Subspace reduced_a() const;
  Subspace reduced_b() const;

  /// True when the state is not a product of two pure states.
  bool is_entangled() const;

 private:
  StateSpace a_, b_;
  Vec joint_;
};

/// The two-system controlled shift on a pair of d = 2 systems:
/// |a, b> -> |a, a + b>. A permutation over every prime field.
Mat modal_cnot(const FieldSpec& field);

/// All rays of the space, as canonical representatives in lexicographic
/// order of their entry vectors.
std::vector<ModalState> all_rays(const StateSpace& space);

}  // namespace mqt

#endif
