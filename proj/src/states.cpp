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

#include "mqt/states.hpp"

#include <string>

#include "mqt/error.hpp"

namespace mqt {

StateSpace::StateSpace(const FieldSpec& field, std::size_t dim)
    : field_(field), dim_(dim) {
  if (dim < 2) {
    throw DomainError("a modal system needs dimension at least 2");
  }
}

std::uint64_t StateSpace::ray_count() const noexcept {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    total *= field_.p();
  }
  return (total - 1) / (field_.p() - 1);
}

ModalState::ModalState(const StateSpace& space, const Vec& v)
    : space_(space), v_(v) {
  if (v.field() != space.field()) {
    throw FieldMismatchError("state vector field does not match the system");
  }
  if (v.dim() != space.dim()) {
    throw DomainError("state vector dimension does not match the system");
  }
  if (v.is_zero()) {
    throw DomainError("the zero vector is not a state");
  }
}

Vec ModalState::canonical_ray() const {
  std::size_t k = 0;
  while (v_.at(k).is_zero()) {
    ++k;
  }
  return v_ * v_.at(k).inverse();
}

bool ModalState::same_ray(const ModalState& o) const {
  return space_ == o.space_ && v_.parallel_to(o.v_);
}

Basis::Basis(const Mat& columns) : cols_(columns), inv_(columns) {
  if (columns.rows() != columns.cols()) {
    throw DomainError("a basis matrix must be square");
  }
  std::optional<Mat> inv = inverse(columns);
  if (!inv) {
    throw DomainError("basis vectors are linearly dependent");
  }
  inv_ = std::move(*inv);
}

Basis Basis::standard(const StateSpace& space) {
  Mat id = Mat::identity(space.field(), space.dim());
  return Basis(id, id);
}

Vec Basis::coordinates(const Vec& v) const { return inv_ * v; }

std::vector<std::size_t> possible_outcomes(const ModalState& state,
                                           const Basis& basis) {
  if (basis.size() != state.space().dim()) {
    throw DomainError("basis size does not match the system");
  }
  Vec coords = basis.coordinates(state.vector());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coords.dim(); ++i) {
    if (!coords.at(i).is_zero()) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> possible_outcomes(const Subspace& mixed,
                                           const Basis& basis) {
  if (basis.size() != mixed.ambient_dim()) {
    throw DomainError("basis size does not match the system");
  }
  if (mixed.dim() == 0) {
    throw DomainError("the zero subspace is not a mixed state");
  }
  std::vector<std::size_t> out;
  std::vector<Vec> coord_rows;
  coord_rows.reserve(mixed.dim());
  for (std::size_t i = 0; i < mixed.dim(); ++i) {
    coord_rows.push_back(basis.coordinates(mixed.basis().row(i)));
  }
  for (std::size_t k = 0; k < mixed.ambient_dim(); ++k) {
    for (const Vec& row : coord_rows) {
      if (!row.at(k).is_zero()) {
        out.push_back(k);
        break;
      }
    }
  }
  return out;
}

ModalState evolve(const ModalState& state, const Mat& transform) {
  if (transform.rows() != transform.cols() ||
      transform.cols() != state.space().dim()) {
    throw DomainError("evolution matrix shape does not match the system");
  }
  if (det(transform).is_zero()) {
    throw DomainError("evolution must be invertible");
  }
  return ModalState(state.space(), transform * state.vector());
}

BipartiteState::BipartiteState(const StateSpace& a, const StateSpace& b,
                               const Vec& joint)
    : a_(a), b_(b), joint_(joint) {
  if (a.field() != b.field() || joint.field() != a.field()) {
    throw FieldMismatchError("bipartite factors must share a field");
  }
  if (joint.dim() != a.dim() * b.dim()) {
    throw DomainError("joint dimension must be the product of the factors");
  }
  if (joint.is_zero()) {
    throw DomainError("the zero vector is not a state");
  }
}

BipartiteState BipartiteState::product(const ModalState& a,
                                       const ModalState& b) {
  return BipartiteState(a.space(), b.space(), kron(a.vector(), b.vector()));
}

Mat BipartiteState::coefficient_matrix() const {
  Mat w(a_.field(), a_.dim(), b_.dim());
  for (std::size_t i = 0; i < a_.dim(); ++i) {
    for (std::size_t j = 0; j < b_.dim(); ++j) {
      w.set(i, j, joint_.at(i * b_.dim() + j));
    }
  }
  return w;
}

std::vector<std::optional<ModalState>> BipartiteState::conditional_states(
    const Basis& basis_a) const {
  if (basis_a.size() != a_.dim()) {
    throw DomainError("basis size does not match side A");
  }
  // Rewriting the A tensor factor in the measurement basis turns the
  // coefficient matrix W into B^-1 W; row k is the unnormalized conditional
  // state of B for outcome k.
  Mat w = coefficient_matrix();
  Mat c = w;
  for (std::size_t j = 0; j < b_.dim(); ++j) {
    Vec col = basis_a.coordinates(w.col(j));
    for (std::size_t i = 0; i < a_.dim(); ++i) {
      c.set(i, j, col.at(i));
    }
  }
  std::vector<std::optional<ModalState>> out(a_.dim());
  for (std::size_t k = 0; k < a_.dim(); ++k) {
    Vec row = c.row(k);
    if (!row.is_zero()) {
      out[k].emplace(b_, row);
    }
  }
  return out;
}

Subspace BipartiteState::reduced_a() const {
  return Subspace::span_of(coefficient_matrix().transpose());
}

Subspace BipartiteState::reduced_b() const {
  return Subspace::span_of(coefficient_matrix());
}

bool BipartiteState::is_entangled() const {
  return rank(coefficient_matrix()) > 1;
}

Mat modal_cnot(const FieldSpec& field) {
  Mat m(field, 4, 4);
  const Fp one(field, 1);
  // |a, b> -> |a, a + b> with d = 2: over GF(2) the permutation
  // 00->00, 01->01, 10->11, 11->10; the matrix is the same permutation over
  // any field.
  m.set(0, 0, one);
  m.set(1, 1, one);
  m.set(3, 2, one);
  m.set(2, 3, one);
  return m;
}

std::vector<ModalState> all_rays(const StateSpace& space) {
  const std::size_t d = space.dim();
  const std::uint32_t p = space.field().p();
  std::vector<ModalState> rays;
  rays.reserve(space.ray_count());
  std::vector<std::int64_t> digits(d, 0);
  // Count through all p^d vectors in lexicographic order (entry 0 most
  // significant) and keep canonical representatives.
  while (true) {
    std::size_t first_nonzero = d;
    for (std::size_t i = 0; i < d; ++i) {
      if (digits[i] != 0) {
        first_nonzero = i;
        break;
      }
    }
    if (first_nonzero < d && digits[first_nonzero] == 1) {
      rays.emplace_back(space, Vec(space.field(), digits));
    }
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++digits[k] < static_cast<std::int64_t>(p)) {
        break;
      }
      digits[k] = 0;
      if (k == 0) {
        return rays;
      }
    }
  }
}

}  // namespace mqt
