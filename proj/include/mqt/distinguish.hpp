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

#ifndef MQT_DISTINGUISH_HPP
#define MQT_DISTINGUISH_HPP

#include <optional>
#include <vector>

#include "mqt/states.hpp"

namespace mqt {

/// Joint dimensions above this are refused when taking tensor powers.
inline constexpr std::uint64_t kMaxJointDim = 1u << 20;

/// A finite set of pairwise non-parallel states of one system.
class StateSet {
 public:
  StateSet(const StateSpace& space, std::vector<ModalState> states);

  const StateSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return states_.size(); }
  const ModalState& at(std::size_t i) const { return states_.at(i); }
  const std::vector<ModalState>& states() const noexcept { return states_; }

  /// Matrix whose rows are the state vectors.
  Mat stacked() const;
  /// Dimension of the span of the set.
  std::size_t span_dim() const;

 private:
  StateSpace space_;
  std::vector<ModalState> states_;
};

/// Coefficients c (not all zero) with sum_i c_i v_i = 0, when the set is
/// linearly dependent; nullopt when independent. Deterministic: the first
/// canonical kernel basis vector of the column-stacked matrix.
std::optional<Vec> dependency(const StateSet& s);

/// A set is distinguishable by a single measurement exactly when its
/// vectors are linearly independent.
bool is_distinguishable(const StateSet& s);

/// A measurement that identifies each member with certainty: the basis
/// starts with the set members themselves (completed deterministically), so
/// measuring member i can only produce outcome i.
struct Discriminator {
  Basis basis;
  /// outcome_to_state[i] = i for i < set size; larger outcomes are
  /// impossible for every member.
  std::vector<std::size_t> outcome_to_state;
};

Discriminator build_discriminator(const StateSet& s);

/// The set { v^(x)n }. Pairwise non-parallelism is preserved.
StateSet n_copy_set(const StateSet& s, std::size_t n);

/// Checks the two-copy rule for a set of k+1 states spanning exactly k
/// dimensions: their two-copy versions must be linearly independent.
bool lemma_two_copy(const StateSet& s);

enum class CopyStrategy {
  kIncrement,  // test n = 1, 2, 3, ... directly
  kDouble,     // double n until independent, then bisect down
};

struct CopyAnalysis {
  /// Smallest n with the n-copy set independent.
  std::size_t min_copies;
  /// independent_at[n - 1] for n = 1..min_copies; monotone by construction.
  std::vector<bool> independent_at;
  /// Dependency coefficients for each n < min_copies (nullopt at n = M).
  std::vector<std::optional<Vec>> witness_at;
};

CopyAnalysis min_copies(const StateSet& s,
                        CopyStrategy strategy = CopyStrategy::kIncrement,
                        std::size_t cap = 64);

}  // namespace mqt

#endif
