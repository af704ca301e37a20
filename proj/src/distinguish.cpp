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

#include "mqt/distinguish.hpp"

#include <algorithm>
#include <string>

#include "mqt/error.hpp"

namespace mqt {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > kMaxJointDim / base) {
      throw ResourceLimitError("joint dimension exceeds " +
                               std::to_string(kMaxJointDim));
    }
    out *= base;
  }
  if (out > kMaxJointDim) {
    throw ResourceLimitError("joint dimension exceeds " +
                             std::to_string(kMaxJointDim));
  }
  return out;
}

bool independent_at(const StateSet& s, std::size_t n) {
  return n_copy_set(s, n).span_dim() == s.size();
}

}  // namespace

StateSet::StateSet(const StateSpace& space, std::vector<ModalState> states)
    : space_(space), states_(std::move(states)) {
  if (states_.empty()) {
    throw DomainError("a state set must be nonempty");
  }
  for (const ModalState& s : states_) {
    if (s.space() != space_) {
      throw DomainError("all set members must live in the same system");
    }
  }
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (std::size_t j = i + 1; j < states_.size(); ++j) {
      if (states_[i].same_ray(states_[j])) {
        throw DomainError("set members " + std::to_string(i) + " and " +
                          std::to_string(j) +
                          " are the same ray; parallel states are never "
                          "distinguishable");
      }
    }
  }
}

Mat StateSet::stacked() const {
  std::vector<Vec> rows;
  rows.reserve(states_.size());
  for (const ModalState& s : states_) {
    rows.push_back(s.vector());
  }
  return Mat::from_rows(space_.field(), rows, space_.dim());
}

std::size_t StateSet::span_dim() const { return rank(stacked()); }

std::optional<Vec> dependency(const StateSet& s) {
  Subspace k = kernel(s.stacked().transpose());
  if (k.dim() == 0) {
    return std::nullopt;
  }
  return k.basis().row(0);
}

bool is_distinguishable(const StateSet& s) {
  return !dependency(s).has_value();
}

Discriminator build_discriminator(const StateSet& s) {
  std::optional<Vec> dep = dependency(s);
  if (dep) {
    throw DependentSetError(
        "set is linearly dependent and cannot be distinguished; "
        "dependency coefficients attached",
        dep->raw());
  }
  const FieldSpec& f = s.space().field();
  const std::size_t d = s.space().dim();
  // Extend the members by the first standard basis vectors outside their
  // span; the members themselves become the leading basis vectors.
  std::vector<Vec> cols;
  cols.reserve(d);
  for (const ModalState& m : s.states()) {
    cols.push_back(m.vector());
  }
  Subspace span = Subspace::span_of(Mat::from_rows(f, cols, d));
  for (std::size_t i = 0; i < d && cols.size() < d; ++i) {
    Vec e = Vec::unit(f, d, i);
    if (!span.contains(e)) {
      cols.push_back(e);
      span = Subspace::span_of(Mat::from_rows(f, cols, d));
    }
  }
  Basis basis(Mat::from_rows(f, cols, d).transpose());
  std::vector<std::size_t> outcome_map(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    outcome_map[i] = i;
  }
  return Discriminator{std::move(basis), std::move(outcome_map)};
}

StateSet n_copy_set(const StateSet& s, std::size_t n) {
  if (n == 0) {
    throw DomainError("copy count must be at least 1");
  }
  if (n == 1) {
    return s;
  }
  std::uint64_t joint = checked_power(s.space().dim(), n);
  StateSpace big(s.space().field(), static_cast<std::size_t>(joint));
  std::vector<ModalState> out;
  out.reserve(s.size());
  for (const ModalState& m : s.states()) {
    out.emplace_back(big, tensor_power(m.vector(), n));
  }
  return StateSet(big, std::move(out));
}

bool lemma_two_copy(const StateSet& s) {
  std::size_t d = s.span_dim();
  if (s.size() != d + 1) {
    throw DomainError("two-copy rule needs exactly span + 1 states; got " +
                      std::to_string(s.size()) + " states spanning " +
                      std::to_string(d) + " dimensions");
  }
  return is_distinguishable(n_copy_set(s, 2));
}

CopyAnalysis min_copies(const StateSet& s, CopyStrategy strategy,
                        std::size_t cap) {
  if (cap < 1) {
    throw DomainError("copy cap must be at least 1");
  }
  std::size_t m = 0;
  if (strategy == CopyStrategy::kIncrement) {
    for (std::size_t n = 1; n <= cap; ++n) {
      if (independent_at(s, n)) {
        m = n;
        break;
      }
    }
    if (m == 0) {
      throw ResourceLimitError("no independence up to the cap of " +
                               std::to_string(cap) + " copies");
    }
  } else {
    // Double until independent, then bisect: monotonicity makes the
    // predicate threshold-shaped.
    std::size_t hi = 1;
    while (!independent_at(s, hi)) {
      if (hi >= cap) {
        throw ResourceLimitError("no independence up to the cap of " +
                                 std::to_string(cap) + " copies");
      }
      hi = std::min(hi * 2, cap);
    }
    std::size_t lo = hi / 2 + 1;  // hi / 2 was dependent (or hi == 1)
    if (hi == 1) {
      lo = 1;
    }
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (independent_at(s, mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    m = hi;
  }

  CopyAnalysis out;
  out.min_copies = m;
  out.independent_at.resize(m);
  out.witness_at.resize(m);
  for (std::size_t n = 1; n < m; ++n) {
    out.independent_at[n - 1] = false;
    out.witness_at[n - 1] = dependency(n_copy_set(s, n));
  }
  out.independent_at[m - 1] = true;
  out.witness_at[m - 1] = std::nullopt;
  return out;
}

}  // namespace mqt
