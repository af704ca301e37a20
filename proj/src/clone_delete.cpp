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

#include "mqt/clone_delete.hpp"

#include <cassert>
#include <string>
#include <utility>

#include "mqt/error.hpp"

namespace mqt {

namespace {

ModalState default_blank(const StateSpace& space) {
  return ModalState(space, Vec::unit(space.field(), space.dim(), 0));
}

std::uint64_t checked_joint_dim(std::size_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    out *= base;
    if (out > kMaxJointDim) {
      throw ResourceLimitError("joint dimension exceeds " +
                               std::to_string(kMaxJointDim));
    }
  }
  return out;
}

/// The matrix R with R v = s.reduce(v).
Mat reduction_matrix(const Subspace& s) {
  const FieldSpec& f = s.field();
  const std::size_t n = s.ambient_dim();
  Mat r(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = s.reduce(Vec::unit(f, n, j));
    for (std::size_t i = 0; i < n; ++i) {
      r.set(i, j, col.at(i));
    }
  }
  return r;
}

/// An affine subset of scalar space: { base + z^T rows : z }.
struct AffinePatch {
  Vec base;
  Mat rows;  // may have zero rows

  std::size_t width() const { return base.dim(); }

  bool coordinate_forced_zero(std::size_t s) const {
    if (!base.at(s).is_zero()) {
      return false;
    }
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      if (!rows.at(i, s).is_zero()) {
        return false;
      }
    }
    return true;
  }

  /// Restrict to { points with coordinate s equal to a }; empty result is
  /// reported via nullopt.
  std::optional<AffinePatch> pin(std::size_t s, const Fp& a) const {
    const FieldSpec& f = base.field();
    // Solve sum_i z_i rows[i][s] = a - base[s].
    Mat eq(f, 1, std::max<std::size_t>(rows.rows(), 1));
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      eq.set(0, i, rows.at(i, s));
    }
    Vec rhs(f, {static_cast<std::int64_t>((a - base.at(s)).value())});
    AffineSolutionSet sol = solve(eq, rhs);
    if (!sol.feasible) {
      return std::nullopt;
    }
    Vec new_base = base;
    if (rows.rows() > 0) {
      for (std::size_t c = 0; c < width(); ++c) {
        Fp acc = base.at(c);
        for (std::size_t i = 0; i < rows.rows(); ++i) {
          acc = acc + sol.particular->at(i) * rows.at(i, c);
        }
        new_base.set(c, acc);
      }
    }
    // New direction rows: kernel combinations of the old rows.
    const Subspace& k = sol.kernel;
    std::size_t kd = rows.rows() > 0 ? k.dim() : 0;
    Mat new_rows(base.field(), kd, width());
    for (std::size_t i = 0; i < kd; ++i) {
      for (std::size_t c = 0; c < width(); ++c) {
        Fp acc(f, 0);
        for (std::size_t j = 0; j < rows.rows(); ++j) {
          acc = acc + k.basis().at(i, j) * rows.at(j, c);
        }
        new_rows.set(i, c, acc);
      }
    }
    return AffinePatch{std::move(new_base), std::move(new_rows)};
  }
};

/// All-nonzero point of the patch by exhaustive enumeration of the
/// parameter cube, lexicographic in z. Requires p^rank within budget.
std::optional<Vec> enumerate_nonzero_point(const AffinePatch& patch,
                                           const FieldSpec& f) {
  const std::size_t r = patch.rows.rows();
  const std::size_t w = patch.width();
  std::vector<std::uint32_t> z(r, 0);
  while (true) {
    Vec point = patch.base;
    for (std::size_t i = 0; i < r; ++i) {
      if (z[i] != 0) {
        point = point + patch.rows.row(i) * Fp(f, z[i]);
      }
    }
    bool all_nonzero = true;
    for (std::size_t s = 0; s < w; ++s) {
      if (point.at(s).is_zero()) {
        all_nonzero = false;
        break;
      }
    }
    if (all_nonzero) {
      return point;
    }
    std::size_t k = r;
    while (k > 0) {
      --k;
      if (++z[k] < f.p()) {
        break;
      }
      z[k] = 0;
      if (k == 0) {
        return std::nullopt;
      }
    }
    if (r == 0) {
      return std::nullopt;
    }
  }
}

/// All-nonzero point when the field is larger than the coordinate count:
/// pin coordinates one by one, avoiding values that would force a later
/// coordinate to zero. Each later coordinate forbids at most one value, so
/// p > width guarantees progress.
Vec greedy_nonzero_point(AffinePatch patch, const FieldSpec& f) {
  const std::size_t w = patch.width();
  for (std::size_t s = 0; s < w; ++s) {
    bool pinned = false;
    for (std::uint32_t a = 1; a < f.p() && !pinned; ++a) {
      std::optional<AffinePatch> next = patch.pin(s, Fp(f, a));
      if (!next) {
        continue;
      }
      bool ok = true;
      for (std::size_t t = s + 1; t < w; ++t) {
        if (next->coordinate_forced_zero(t)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        patch = std::move(*next);
        pinned = true;
      }
    }
    assert(pinned && "counting rule violated");
    if (!pinned) {
      throw Error("scalar screening failed to make progress");
    }
  }
  return patch.base;
}

}  // namespace

CloneTask::CloneTask(StateSet s, std::size_t n)
    : set(std::move(s)), copies_in(n), blank(default_blank(set.space())) {
  if (copies_in < 1) {
    throw DomainError("a cloner needs at least one input copy");
  }
}

CloneTask::CloneTask(StateSet s, std::size_t n, ModalState b)
    : set(std::move(s)), copies_in(n), blank(std::move(b)) {
  if (copies_in < 1) {
    throw DomainError("a cloner needs at least one input copy");
  }
  if (blank.space() != set.space()) {
    throw DomainError("blank state must live in the set's system");
  }
}

Mat build_cloner(const CloneTask& task) {
  std::optional<Vec> dep = dependency(n_copy_set(task.set, task.copies_in));
  if (dep) {
    throw DependentSetError(
        "the " + std::to_string(task.copies_in) +
            "-copy states are linearly dependent, so no invertible cloner "
            "exists; dependency coefficients attached",
        dep->raw());
  }
  checked_joint_dim(task.set.space().dim(), task.copies_in + 1);
  std::vector<Vec> inputs, outputs;
  inputs.reserve(task.set.size());
  outputs.reserve(task.set.size());
  for (const ModalState& m : task.set.states()) {
    inputs.push_back(
        kron(tensor_power(m.vector(), task.copies_in), task.blank.vector()));
    outputs.push_back(tensor_power(m.vector(), task.copies_in + 1));
  }
  return invertible_completion(inputs, outputs);
}

Mat build_deleter(const CloneTask& task) {
  std::optional<Mat> inv = inverse(build_cloner(task));
  assert(inv.has_value());
  return *inv;
}

MapConstraint::MapConstraint(Target k, Vec in, std::optional<Vec> tv,
                             std::optional<Subspace> ts)
    : kind(k), input(std::move(in)), target_vec(std::move(tv)),
      target_subspace(std::move(ts)) {}

MapConstraint MapConstraint::exact(Vec input, Vec target) {
  return MapConstraint(Target::kExact, std::move(input), std::move(target),
                       std::nullopt);
}

MapConstraint MapConstraint::ray(Vec input, Vec target) {
  if (target.is_zero()) {
    throw DomainError("a ray target must be nonzero");
  }
  return MapConstraint(Target::kRay, std::move(input), std::move(target),
                       std::nullopt);
}

MapConstraint MapConstraint::into(Vec input, Subspace target) {
  return MapConstraint(Target::kSubspace, std::move(input), std::nullopt,
                       std::move(target));
}

LinearFeasibilityProblem::LinearFeasibilityProblem(
    const FieldSpec& field_, std::size_t out_dim_, std::size_t in_dim_,
    std::vector<MapConstraint> constraints_)
    : field(field_), out_dim(out_dim_), in_dim(in_dim_),
      constraints(std::move(constraints_)) {
  if (out_dim < 1 || in_dim < 1) {
    throw DomainError("map dimensions must be at least 1");
  }
  if (constraints.empty()) {
    throw DomainError("a feasibility problem needs at least one constraint");
  }
  for (const MapConstraint& c : constraints) {
    if (c.input.field() != field) {
      throw FieldMismatchError("constraint field does not match the problem");
    }
    if (c.input.dim() != in_dim) {
      throw DomainError("constraint input dimension mismatch");
    }
    switch (c.kind) {
      case MapConstraint::Target::kExact:
      case MapConstraint::Target::kRay:
        if (c.target_vec->dim() != out_dim) {
          throw DomainError("constraint target dimension mismatch");
        }
        break;
      case MapConstraint::Target::kSubspace:
        if (c.target_subspace->ambient_dim() != out_dim) {
          throw DomainError("constraint subspace dimension mismatch");
        }
        break;
    }
  }
}

FeasibilityResult exists_linear_map(const LinearFeasibilityProblem& problem) {
  const FieldSpec& f = problem.field;
  const std::size_t in = problem.in_dim, out = problem.out_dim;
  std::vector<std::size_t> ray_index;  // constraint index -> scalar slot
  std::size_t n_ray = 0;
  for (const MapConstraint& c : problem.constraints) {
    ray_index.push_back(c.kind == MapConstraint::Target::kRay ? n_ray++ : 0);
  }
  const std::size_t unknowns = out * in + n_ray;
  const std::size_t n_rows = problem.constraints.size() * out;

  Mat a(f, n_rows, unknowns);
  Vec b = Vec::zero(f, n_rows);
  std::size_t row = 0;
  for (std::size_t ci = 0; ci < problem.constraints.size(); ++ci) {
    const MapConstraint& c = problem.constraints[ci];
    switch (c.kind) {
      case MapConstraint::Target::kExact:
        for (std::size_t q = 0; q < out; ++q) {
          for (std::size_t x = 0; x < in; ++x) {
            a.set(row, q * in + x, c.input.at(x));
          }
          b.set(row, c.target_vec->at(q));
          ++row;
        }
        break;
      case MapConstraint::Target::kRay:
        for (std::size_t q = 0; q < out; ++q) {
          for (std::size_t x = 0; x < in; ++x) {
            a.set(row, q * in + x, c.input.at(x));
          }
          a.set(row, out * in + ray_index[ci], -c.target_vec->at(q));
          ++row;
        }
        break;
      case MapConstraint::Target::kSubspace: {
        Mat r = reduction_matrix(*c.target_subspace);
        for (std::size_t q = 0; q < out; ++q) {
          for (std::size_t w = 0; w < out; ++w) {
            if (r.at(q, w).is_zero()) {
              continue;
            }
            for (std::size_t x = 0; x < in; ++x) {
              a.set(row, w * in + x, r.at(q, w) * c.input.at(x));
            }
          }
          ++row;
        }
        break;
      }
    }
  }

  AffineSolutionSet sol = solve(a, b);
  if (!sol.feasible) {
    return FeasibilityResult{FeasibilityResult::Verdict::kInfeasible,
                             std::nullopt, {}, sol.certificate};
  }

  auto extract_map = [&](const Vec& full) {
    Mat t(f, out, in);
    for (std::size_t q = 0; q < out; ++q) {
      for (std::size_t x = 0; x < in; ++x) {
        t.set(q, x, full.at(q * in + x));
      }
    }
    return t;
  };

  if (n_ray == 0) {
    return FeasibilityResult{FeasibilityResult::Verdict::kFeasible,
                             extract_map(*sol.particular), {}, std::nullopt};
  }

  // Project the solution set onto the scalar coordinates.
  Vec mu_base = Vec::zero(f, n_ray);
  for (std::size_t s = 0; s < n_ray; ++s) {
    mu_base.set(s, sol.particular->at(out * in + s));
  }
  const std::size_t kdim = sol.kernel.dim();
  Mat raw_rows(f, kdim, n_ray);
  for (std::size_t i = 0; i < kdim; ++i) {
    for (std::size_t s = 0; s < n_ray; ++s) {
      raw_rows.set(i, s, sol.kernel.basis().at(i, out * in + s));
    }
  }
  // Canonical row basis of the projection keeps the enumeration cube tight.
  RrefResult reduced = rref(raw_rows);
  Mat dirs(f, reduced.rank, n_ray);
  for (std::size_t i = 0; i < reduced.rank; ++i) {
    for (std::size_t s = 0; s < n_ray; ++s) {
      dirs.set(i, s, reduced.rref.at(i, s));
    }
  }
  AffinePatch patch{mu_base, dirs};

  std::uint64_t cube = 1;
  bool within_budget = true;
  for (std::size_t i = 0; i < reduced.rank; ++i) {
    cube *= f.p();
    if (cube > problem.coset_bound) {
      within_budget = false;
      break;
    }
  }

  std::optional<Vec> mu_point;
  if (within_budget) {
    mu_point = enumerate_nonzero_point(patch, f);
    if (!mu_point) {
      return FeasibilityResult{FeasibilityResult::Verdict::kOnlyDegenerate,
                               std::nullopt, {}, std::nullopt};
    }
  } else {
    for (std::size_t s = 0; s < n_ray; ++s) {
      if (patch.coordinate_forced_zero(s)) {
        return FeasibilityResult{FeasibilityResult::Verdict::kOnlyDegenerate,
                                 std::nullopt, {}, std::nullopt};
      }
    }
    if (f.p() <= n_ray) {
      throw ResourceLimitError(
          "scalar screening cube exceeds the coset bound and the counting "
          "rule needs p > " +
          std::to_string(n_ray) + "; raise coset_bound");
    }
    mu_point = greedy_nonzero_point(patch, f);
  }

  // Re-solve with the scalars pinned to recover a full witness map.
  Mat a2(f, n_rows + n_ray, unknowns);
  Vec b2 = Vec::zero(f, n_rows + n_ray);
  for (std::size_t r2 = 0; r2 < n_rows; ++r2) {
    for (std::size_t c2 = 0; c2 < unknowns; ++c2) {
      a2.set(r2, c2, a.at(r2, c2));
    }
    b2.set(r2, b.at(r2));
  }
  for (std::size_t s = 0; s < n_ray; ++s) {
    a2.set(n_rows + s, out * in + s, Fp(f, 1));
    b2.set(n_rows + s, mu_point->at(s));
  }
  AffineSolutionSet pinned = solve(a2, b2);
  assert(pinned.feasible);
  if (!pinned.feasible) {
    throw Error("pinned scalar system unexpectedly infeasible");
  }
  std::vector<std::uint32_t> scalars(n_ray);
  for (std::size_t s = 0; s < n_ray; ++s) {
    scalars[s] = mu_point->at(s).value();
  }
  return FeasibilityResult{FeasibilityResult::Verdict::kFeasible,
                           extract_map(*pinned.particular),
                           std::move(scalars), std::nullopt};
}

LinearFeasibilityProblem clone_feasibility_problem(const StateSet& set,
                                                   std::size_t n,
                                                   const ModalState& blank) {
  if (n < 1) {
    throw DomainError("cloning needs at least one input copy");
  }
  if (blank.space() != set.space()) {
    throw DomainError("blank state must live in the set's system");
  }
  const std::size_t d = set.space().dim();
  std::uint64_t joint = checked_joint_dim(d, n + 1);
  std::vector<MapConstraint> cs;
  cs.reserve(set.size());
  for (const ModalState& m : set.states()) {
    cs.push_back(MapConstraint::ray(
        kron(tensor_power(m.vector(), n), blank.vector()),
        tensor_power(m.vector(), n + 1)));
  }
  return LinearFeasibilityProblem(set.space().field(),
                                  static_cast<std::size_t>(joint),
                                  static_cast<std::size_t>(joint),
                                  std::move(cs));
}

LinearFeasibilityProblem delete_feasibility_problem(const StateSet& set,
                                                    std::size_t m,
                                                    const ModalState& blank) {
  if (m < 1) {
    throw DomainError("deleting needs at least one input copy");
  }
  if (blank.space() != set.space()) {
    throw DomainError("blank state must live in the set's system");
  }
  const std::size_t d = set.space().dim();
  std::uint64_t joint = checked_joint_dim(d, m);
  std::vector<MapConstraint> cs;
  cs.reserve(set.size());
  for (const ModalState& s : set.states()) {
    Vec input = tensor_power(s.vector(), m);
    Vec target = m == 1 ? blank.vector()
                        : kron(tensor_power(s.vector(), m - 1),
                               blank.vector());
    cs.push_back(MapConstraint::ray(std::move(input), std::move(target)));
  }
  return LinearFeasibilityProblem(set.space().field(),
                                  static_cast<std::size_t>(joint),
                                  static_cast<std::size_t>(joint),
                                  std::move(cs));
}

std::optional<CloneBreakdown> no_clone_witness(const Mat& cloner,
                                               const StateSet& set,
                                               std::size_t n,
                                               const ModalState& blank) {
  const FieldSpec& f = set.space().field();
  // The cloner must actually clone the members at n copies (as rays).
  for (const ModalState& m : set.states()) {
    Vec in = kron(tensor_power(m.vector(), n), blank.vector());
    Vec expect = tensor_power(m.vector(), n + 1);
    if (!(cloner * in).parallel_to(expect)) {
      throw DomainError("the given map does not clone every set member");
    }
  }
  // Sweep superposition coefficients lexicographically.
  const std::size_t k = set.size();
  std::vector<std::uint32_t> coeff(k, 0);
  while (true) {
    std::size_t idx = k;
    while (idx > 0) {
      --idx;
      if (++coeff[idx] < f.p()) {
        break;
      }
      coeff[idx] = 0;
      if (idx == 0) {
        return std::nullopt;
      }
    }
    Vec sigma = Vec::zero(f, set.space().dim());
    for (std::size_t i = 0; i < k; ++i) {
      if (coeff[i] != 0) {
        sigma = sigma + set.at(i).vector() * Fp(f, coeff[i]);
      }
    }
    if (sigma.is_zero()) {
      continue;
    }
    Vec machine = cloner * kron(tensor_power(sigma, n), blank.vector());
    Vec ideal = tensor_power(sigma, n + 1);
    if (!machine.parallel_to(ideal)) {
      return CloneBreakdown{std::move(sigma), std::move(machine),
                            std::move(ideal)};
    }
  }
}

Mat build_ancilla_deleter(const StateSet& independent,
                          const ModalState& blank, std::size_t ancilla_dim) {
  if (ancilla_dim < 2) {
    throw DomainError("ancilla dimension must be at least 2");
  }
  if (independent.size() > ancilla_dim) {
    throw DomainError("ancilla must have one basis vector per set member");
  }
  std::optional<Vec> dep = dependency(independent);
  if (dep) {
    throw DependentSetError(
        "machine deleter construction needs an independent set", dep->raw());
  }
  if (blank.space() != independent.space()) {
    throw DomainError("blank state must live in the set's system");
  }
  const FieldSpec& f = independent.space().field();
  const std::size_t d = independent.space().dim();
  checked_joint_dim(d, 2);
  if (d * d * ancilla_dim > kMaxJointDim) {
    throw ResourceLimitError("machine dimension exceeds the limit");
  }
  Vec a0 = Vec::unit(f, ancilla_dim, 0);
  std::vector<Vec> inputs, outputs;
  for (std::size_t i = 0; i < independent.size(); ++i) {
    const Vec& v = independent.at(i).vector();
    inputs.push_back(kron(kron(v, v), a0));
    outputs.push_back(
        kron(kron(v, blank.vector()), Vec::unit(f, ancilla_dim, i)));
  }
  return invertible_completion(inputs, outputs);
}

MachineWitness machine_response(const Mat& deleter, const ModalState& sigma,
                                const ModalState& blank,
                                std::size_t ancilla_dim) {
  const FieldSpec& f = sigma.space().field();
  const std::size_t d = sigma.space().dim();
  if (deleter.rows() != d * d * ancilla_dim) {
    throw DomainError("deleter shape does not match system and ancilla");
  }
  Vec a0 = Vec::unit(f, ancilla_dim, 0);
  Vec out = deleter * kron(kron(sigma.vector(), sigma.vector()), a0);
  // Span of sigma (x) blank (x) ancilla basis vectors.
  std::vector<Vec> gens;
  gens.reserve(ancilla_dim);
  Vec head = kron(sigma.vector(), blank.vector());
  for (std::size_t j = 0; j < ancilla_dim; ++j) {
    gens.push_back(kron(head, Vec::unit(f, ancilla_dim, j)));
  }
  Subspace allowed =
      Subspace::span_of(Mat::from_rows(f, gens, d * d * ancilla_dim));
  Vec leak = allowed.reduce(out);
  bool ok = leak.is_zero();
  return MachineWitness{sigma.vector(), std::move(out), std::move(leak), ok};
}

MachineWitness no_delete_machine_witness(const StateSet& set,
                                         const ModalState& blank,
                                         std::size_t ancilla_dim) {
  const FieldSpec& f = set.space().field();
  // Greedy maximal independent subset, in member order.
  std::vector<ModalState> basis_members;
  for (const ModalState& m : set.states()) {
    std::vector<Vec> rows;
    for (const ModalState& b : basis_members) {
      rows.push_back(b.vector());
    }
    rows.push_back(m.vector());
    if (rank(Mat::from_rows(f, rows, set.space().dim())) == rows.size()) {
      basis_members.push_back(m);
    }
  }
  if (basis_members.size() < 2) {
    throw DomainError("the set must span at least 2 dimensions");
  }
  StateSet independent(set.space(), basis_members);
  Mat deleter = build_ancilla_deleter(independent, blank, ancilla_dim);

  // First dependent combination: at least two nonzero coefficients over the
  // independent members, lexicographic order.
  const std::size_t k = independent.size();
  std::vector<std::uint32_t> coeff(k, 0);
  while (true) {
    std::size_t idx = k;
    bool done = true;
    while (idx > 0) {
      --idx;
      if (++coeff[idx] < f.p()) {
        done = false;
        break;
      }
      coeff[idx] = 0;
    }
    if (done) {
      throw DomainError("no dependent combination exists over this field");
    }
    std::size_t nonzero = 0;
    for (std::uint32_t c : coeff) {
      if (c != 0) {
        ++nonzero;
      }
    }
    if (nonzero < 2) {
      continue;
    }
    Vec sigma = Vec::zero(f, set.space().dim());
    for (std::size_t i = 0; i < k; ++i) {
      if (coeff[i] != 0) {
        sigma = sigma + independent.at(i).vector() * Fp(f, coeff[i]);
      }
    }
    return machine_response(deleter, ModalState(set.space(), sigma), blank,
                            ancilla_dim);
  }
}

std::vector<RecordedDeletion> delete_with_record(const StateSet& set,
                                                 std::size_t m) {
  if (m < 1) {
    throw DomainError("deleting needs at least one input copy");
  }
  StateSet m_copies = n_copy_set(set, m);
  std::optional<Vec> dep = dependency(m_copies);
  if (dep) {
    throw DependentSetError(
        "the " + std::to_string(m) +
            "-copy states are dependent; no record-keeping measurement can "
            "identify the input",
        dep->raw());
  }
  Discriminator disc = build_discriminator(m_copies);
  std::vector<RecordedDeletion> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::vector<std::size_t> outcomes =
        possible_outcomes(m_copies.at(i), disc.basis);
    assert(outcomes.size() == 1 && outcomes[0] == i);
    if (outcomes.size() != 1) {
      throw Error("discriminator produced an ambiguous outcome");
    }
    RecordedDeletion rec{
        outcomes[0],
        m >= 2 ? std::optional<Vec>(tensor_power(set.at(i).vector(), m - 1))
               : std::nullopt,
        set.at(disc.outcome_to_state[outcomes[0]]).canonical_ray()};
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace mqt
