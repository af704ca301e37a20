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

#ifndef MQT_CLONE_DELETE_HPP
#define MQT_CLONE_DELETE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mqt/distinguish.hpp"

namespace mqt {

/// A copying task: send psi^(x)N (x) blank to psi^(x)(N+1) for every member.
struct CloneTask {
  CloneTask(StateSet s, std::size_t n);
  CloneTask(StateSet s, std::size_t n, ModalState b);

  StateSet set;
  std::size_t copies_in;
  ModalState blank;
};

/// Invertible T with T(psi^(x)N (x) blank) = psi^(x)(N+1) exactly, for every
/// member. Requires the N-copy set to be independent (the (N+1)-copy set
/// then is too); throws DependentSetError carrying the dependency
/// coefficients otherwise.
Mat build_cloner(const CloneTask& task);

/// The inverse map: sends psi^(x)(N+1) to psi^(x)N (x) blank.
Mat build_deleter(const CloneTask& task);

/// One constraint on an unknown linear map T.
struct MapConstraint {
  enum class Target {
    kExact,     // T input = target exactly
    kRay,       // T input = mu * target for some nonzero scalar mu
    kSubspace,  // T input lies in the target subspace
  };

  static MapConstraint exact(Vec input, Vec target);
  static MapConstraint ray(Vec input, Vec target);
  static MapConstraint into(Vec input, Subspace target);

  Target kind;
  Vec input;
  std::optional<Vec> target_vec;
  std::optional<Subspace> target_subspace;

 private:
  MapConstraint(Target k, Vec in, std::optional<Vec> tv,
                std::optional<Subspace> ts);
};

/// Decide whether any linear map satisfies all constraints. Ray constraints
/// introduce one scalar unknown each; a solution only counts when every ray
/// scalar is nonzero.
struct LinearFeasibilityProblem {
  LinearFeasibilityProblem(const FieldSpec& field, std::size_t out_dim,
                           std::size_t in_dim,
                           std::vector<MapConstraint> constraints);

  FieldSpec field;
  std::size_t out_dim;
  std::size_t in_dim;
  std::vector<MapConstraint> constraints;
  /// Largest projected solution coset enumerated when screening ray
  /// scalars; beyond it an exact counting rule applies when the field is
  /// larger than the number of ray constraints.
  std::uint64_t coset_bound = 1u << 20;
};

struct FeasibilityResult {
  enum class Verdict {
    kFeasible,        // a map with all ray scalars nonzero exists
    kInfeasible,      // the linear system itself has no solution
    kOnlyDegenerate,  // solutions exist but all have a zero ray scalar
  };

  Verdict verdict;
  std::optional<Mat> map;                   // present iff feasible
  std::vector<std::uint32_t> ray_scalars;   // chosen scalars, iff feasible
  std::optional<Vec> certificate;           // present iff infeasible
};

FeasibilityResult exists_linear_map(const LinearFeasibilityProblem& problem);

/// Ray-target cloning at n copies as a feasibility problem:
/// T(psi^(x)n (x) blank) ~ psi^(x)(n+1).
LinearFeasibilityProblem clone_feasibility_problem(const StateSet& set,
                                                   std::size_t n,
                                                   const ModalState& blank);

/// Ray-target deleting from m copies to m - 1 without ancilla:
/// T(psi^(x)m) ~ psi^(x)(m-1) (x) blank; at m = 1 the target is blank
/// itself.
LinearFeasibilityProblem delete_feasibility_problem(const StateSet& set,
                                                    std::size_t m,
                                                    const ModalState& blank);

/// A superposition the cloner fails on: both sides of the broken equation.
struct CloneBreakdown {
  Vec superposition;   // sigma, a combination of set members
  Vec machine_output;  // T(sigma^(x)n (x) blank)
  Vec ideal_output;    // sigma^(x)(n+1)
};

/// First superposition (lexicographic coefficient order) of set members
/// that the given cloner fails to clone; nullopt when every combination in
/// the span is cloned.
std::optional<CloneBreakdown> no_clone_witness(const Mat& cloner,
                                               const StateSet& set,
                                               std::size_t n,
                                               const ModalState& blank);

/// Deleter with a machine: T(psi (x) psi (x) A0) = psi (x) blank (x) A_i
/// for each member of an independent set, with distinct ancilla basis
/// vectors A_i. Built by invertible completion.
Mat build_ancilla_deleter(const StateSet& independent, const ModalState& blank,
                          std::size_t ancilla_dim);

/// What the machine does to one input state.
struct MachineWitness {
  Vec input;            // sigma
  Vec machine_output;   // T(sigma (x) sigma (x) A0)
  Vec leakage;          // component outside sigma (x) blank (x) ancilla
  bool is_required_form;  // leakage is zero
};

/// Evaluate a deleter built by build_ancilla_deleter on one state.
MachineWitness machine_response(const Mat& deleter, const ModalState& sigma,
                                const ModalState& blank,
                                std::size_t ancilla_dim);

/// Build the deleter for the set's first maximal independent subset and
/// return its response to the first dependent combination of members (the
/// leaked information refutes ancilla-assisted deleting).
MachineWitness no_delete_machine_witness(const StateSet& set,
                                         const ModalState& blank,
                                         std::size_t ancilla_dim);

/// Deleting with a classical record: measure the m-copy state with a
/// discriminator, keep m - 1 copies plus the outcome index; the index
/// reconstructs the exact canonical ray.
struct RecordedDeletion {
  std::size_t identifier;       // discriminator outcome
  std::optional<Vec> remaining; // psi^(x)(m-1); nullopt when m == 1
  Vec reconstructed;            // canonical ray recovered from the record
};

std::vector<RecordedDeletion> delete_with_record(const StateSet& set,
                                                 std::size_t m);

}  // namespace mqt

#endif
