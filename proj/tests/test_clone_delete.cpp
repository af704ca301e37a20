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

#include <vector>

#include "doctest.h"
#include "exhaustive_gf2.hpp"
#include "mqt/clone_delete.hpp"
#include "mqt/error.hpp"

using namespace mqt;

namespace {

StateSet make_set(const StateSpace& space,
                  const std::vector<std::vector<std::int64_t>>& vecs) {
  std::vector<ModalState> states;
  states.reserve(vecs.size());
  for (const auto& v : vecs) {
    states.emplace_back(space, Vec(space.field(), v));
  }
  return StateSet(space, std::move(states));
}

ModalState blank_of(const StateSpace& space) {
  return ModalState(space, Vec::unit(space.field(), space.dim(), 0));
}

bool clones_all(const Mat& t, const StateSet& set, std::size_t n,
                const ModalState& blank) {
  for (const ModalState& m : set.states()) {
    Vec in = kron(tensor_power(m.vector(), n), blank.vector());
    if (!(t * in).parallel_to(tensor_power(m.vector(), n + 1))) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("basis-state cloner at one copy is the controlled shift") {
  FieldSpec f(2);
  StateSpace qubit(f, 2);
  StateSet basis = make_set(qubit, {{1, 0}, {0, 1}});
  CloneTask task(basis, 1);
  Mat t = build_cloner(task);
  CHECK(t == modal_cnot(f));
  CHECK(clones_all(t, basis, 1, task.blank));
  CHECK(build_deleter(task) == t);  // the shift is an involution over GF(2)
  CHECK((build_deleter(task) * t) == Mat::identity(f, 4));
}

TEST_CASE("all-ray cloners exist exactly at the minimum copy count") {
  struct Case {
    std::uint32_t p;
    std::size_t m;
  };
  for (Case c : {Case{2, 2}, Case{3, 3}}) {
    FieldSpec f(c.p);
    StateSpace qubit(f, 2);
    StateSet rays(qubit, all_rays(qubit));

    CloneTask task(rays, c.m);
    Mat t = build_cloner(task);
    CHECK(!det(t).is_zero());
    CHECK(clones_all(t, rays, c.m, task.blank));

    Mat del = build_deleter(task);
    CHECK((del * t) == Mat::identity(f, t.rows()));
    for (const ModalState& m : rays.states()) {
      Vec full = tensor_power(m.vector(), c.m + 1);
      Vec reduced =
          kron(tensor_power(m.vector(), c.m), task.blank.vector());
      CHECK((del * full) == reduced);
    }

    // One copy below the minimum the construction must refuse.
    try {
      build_cloner(CloneTask(rays, c.m - 1));
      FAIL("expected DependentSetError");
    } catch (const DependentSetError& e) {
      CHECK(!e.witness().empty());
    }
  }
}

TEST_CASE("cloner construction works for every ray subset at its minimum") {
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    StateSpace qubit(f, 2);
    std::vector<ModalState> rays = all_rays(qubit);
    // All nonempty subsets by bitmask.
    for (std::uint32_t mask = 1; mask < (1u << rays.size()); ++mask) {
      std::vector<ModalState> members;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (mask & (1u << i)) {
          members.push_back(rays[i]);
        }
      }
      StateSet sub(qubit, members);
      std::size_t m = min_copies(sub).min_copies;
      CloneTask task(sub, m);
      Mat t = build_cloner(task);
      CHECK(!det(t).is_zero());
      CHECK(clones_all(t, sub, m, task.blank));
    }
  }
}

TEST_CASE("exact-target feasibility returns a satisfying map") {
  FieldSpec f(2);
  // T |00> = |00>, T |10> = |11>: the basis cloning constraints.
  std::vector<MapConstraint> cs;
  cs.push_back(MapConstraint::exact(Vec(f, {1, 0, 0, 0}),
                                    Vec(f, {1, 0, 0, 0})));
  cs.push_back(MapConstraint::exact(Vec(f, {0, 0, 1, 0}),
                                    Vec(f, {0, 0, 0, 1})));
  LinearFeasibilityProblem problem(f, 4, 4, std::move(cs));
  FeasibilityResult r = exists_linear_map(problem);
  REQUIRE(r.verdict == FeasibilityResult::Verdict::kFeasible);
  REQUIRE(r.map.has_value());
  CHECK((*r.map * Vec(f, {1, 0, 0, 0})) == Vec(f, {1, 0, 0, 0}));
  CHECK((*r.map * Vec(f, {0, 0, 1, 0})) == Vec(f, {0, 0, 0, 1}));
}

TEST_CASE("infeasible exact systems produce a certificate") {
  FieldSpec f(3);
  // T e0 = e0 and T (2 e0) = e1 cannot both hold.
  std::vector<MapConstraint> cs;
  cs.push_back(MapConstraint::exact(Vec(f, {1, 0}), Vec(f, {1, 0})));
  cs.push_back(MapConstraint::exact(Vec(f, {2, 0}), Vec(f, {0, 1})));
  FeasibilityResult r =
      exists_linear_map(LinearFeasibilityProblem(f, 2, 2, std::move(cs)));
  CHECK(r.verdict == FeasibilityResult::Verdict::kInfeasible);
  CHECK(r.certificate.has_value());
  CHECK(!r.map.has_value());
}

TEST_CASE("subspace targets constrain the image") {
  FieldSpec f(3);
  Subspace line = Subspace::span_of(Mat(f, 1, 2, {1, 1}));
  std::vector<MapConstraint> cs;
  cs.push_back(MapConstraint::into(Vec(f, {1, 0}), line));
  cs.push_back(MapConstraint::exact(Vec(f, {0, 1}), Vec(f, {1, 2})));
  FeasibilityResult r =
      exists_linear_map(LinearFeasibilityProblem(f, 2, 2, std::move(cs)));
  REQUIRE(r.verdict == FeasibilityResult::Verdict::kFeasible);
  CHECK(line.contains(*r.map * Vec(f, {1, 0})));
  CHECK((*r.map * Vec(f, {0, 1})) == Vec(f, {1, 2}));
}

TEST_CASE("ray-target verdicts match the exhaustive GF(2) oracle") {
  FieldSpec f(2);
  StateSpace qubit(f, 2);
  StateSet rays(qubit, all_rays(qubit));
  StateSet basis = make_set(qubit, {{1, 0}, {0, 1}});
  ModalState blank = blank_of(qubit);

  // Oracle masks: |0> = 1, |1> = 2, |0>+|1> = 3; blank = |0>.
  const std::uint32_t b0 = 1, b1 = 2, bs = 3;

  SUBCASE("cloning all three rays at one copy is impossible") {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cons;
    for (std::uint32_t v : {b0, b1, bs}) {
      cons.emplace_back(gf2oracle::kron2(v, b0), gf2oracle::kron2(v, v));
    }
    CHECK(gf2oracle::count_solutions(cons) == 0);
    FeasibilityResult r =
        exists_linear_map(clone_feasibility_problem(rays, 1, blank));
    CHECK(r.verdict == FeasibilityResult::Verdict::kOnlyDegenerate);
  }

  SUBCASE("cloning the two basis states at one copy is possible") {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cons;
    for (std::uint32_t v : {b0, b1}) {
      cons.emplace_back(gf2oracle::kron2(v, b0), gf2oracle::kron2(v, v));
    }
    CHECK(gf2oracle::count_solutions(cons) == 256);
    FeasibilityResult r =
        exists_linear_map(clone_feasibility_problem(basis, 1, blank));
    REQUIRE(r.verdict == FeasibilityResult::Verdict::kFeasible);
    CHECK(clones_all(*r.map, basis, 1, blank));
  }

  SUBCASE("deleting two copies to one is possible for all rays") {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cons;
    for (std::uint32_t v : {b0, b1, bs}) {
      cons.emplace_back(gf2oracle::kron2(v, v), gf2oracle::kron2(v, b0));
    }
    CHECK(gf2oracle::count_solutions(cons) == 16);
    FeasibilityResult r =
        exists_linear_map(delete_feasibility_problem(rays, 2, blank));
    REQUIRE(r.verdict == FeasibilityResult::Verdict::kFeasible);
    for (const ModalState& m : rays.states()) {
      Vec got = *r.map * tensor_power(m.vector(), 2);
      CHECK(got.parallel_to(kron(m.vector(), blank.vector())));
    }
  }

  SUBCASE("deleting one copy to the blank alone is impossible") {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cons;
    for (std::uint32_t v : {b0, b1, bs}) {
      cons.emplace_back(v, b0);
    }
    CHECK(gf2oracle::count_solutions_2(cons) == 0);
    FeasibilityResult r =
        exists_linear_map(delete_feasibility_problem(rays, 1, blank));
    CHECK(r.verdict == FeasibilityResult::Verdict::kOnlyDegenerate);
  }
}

TEST_CASE("ray-target verdicts over the GF(3) qubit") {
  FieldSpec f(3);
  StateSpace qubit(f, 2);
  StateSet rays(qubit, all_rays(qubit));
  ModalState blank = blank_of(qubit);

  // Below the minimum copy count, cloning admits only degenerate solutions.
  for (std::size_t n : {1u, 2u}) {
    FeasibilityResult r =
        exists_linear_map(clone_feasibility_problem(rays, n, blank));
    CHECK(r.verdict == FeasibilityResult::Verdict::kOnlyDegenerate);
  }
  // At the minimum it becomes feasible, with every scalar nonzero.
  FeasibilityResult ok =
      exists_linear_map(clone_feasibility_problem(rays, 3, blank));
  REQUIRE(ok.verdict == FeasibilityResult::Verdict::kFeasible);
  REQUIRE(ok.ray_scalars.size() == 4);
  for (std::uint32_t mu : ok.ray_scalars) {
    CHECK(mu != 0);
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    Vec in = kron(tensor_power(rays.at(i).vector(), 3), blank.vector());
    Vec want = tensor_power(rays.at(i).vector(), 4) *
               Fp(f, ok.ray_scalars[i]);
    CHECK((*ok.map * in) == want);
  }

  // Deleting below the minimum (2 -> 1 and 1 -> 0) has no nondegenerate
  // solution; from the minimum (3 -> 2) it does.
  CHECK(exists_linear_map(delete_feasibility_problem(rays, 2, blank))
            .verdict == FeasibilityResult::Verdict::kOnlyDegenerate);
  CHECK(exists_linear_map(delete_feasibility_problem(rays, 1, blank))
            .verdict == FeasibilityResult::Verdict::kOnlyDegenerate);
  CHECK(exists_linear_map(delete_feasibility_problem(rays, 3, blank))
            .verdict == FeasibilityResult::Verdict::kFeasible);
}

TEST_CASE("superposition witness against a working basis cloner") {
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    StateSpace qubit(f, 2);
    StateSet basis = make_set(qubit, {{1, 0}, {0, 1}});
    CloneTask task(basis, 1);
    Mat t = build_cloner(task);
    auto w = no_clone_witness(t, basis, 1, task.blank);
    REQUIRE(w.has_value());
    CHECK(w->superposition == Vec(f, {1, 1}));
    CHECK(w->machine_output == Vec(f, {1, 0, 0, 1}));
    CHECK(w->ideal_output == Vec(f, {1, 1, 1, 1}));
    CHECK(!w->machine_output.parallel_to(w->ideal_output));
  }

  // A global cloner of all rays at its minimum has nothing left to miss.
  FieldSpec f2(2);
  StateSpace qubit(f2, 2);
  StateSet rays(qubit, all_rays(qubit));
  CloneTask task(rays, 2);
  CHECK(!no_clone_witness(build_cloner(task), rays, 2, task.blank)
             .has_value());

  // A map that fails to clone some member is rejected up front.
  CHECK_THROWS_AS(
      no_clone_witness(Mat::identity(f2, 4), rays, 1, blank_of(qubit)),
      DomainError);
}

TEST_CASE("machine deleter leaks dependent states into the ancilla") {
  FieldSpec f(2);
  StateSpace qubit(f, 2);
  StateSet basis = make_set(qubit, {{1, 0}, {0, 1}});
  ModalState blank = blank_of(qubit);

  Mat t = build_ancilla_deleter(basis, blank, 2);
  CHECK(!det(t).is_zero());

  // Members are deleted in the required form.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    MachineWitness w = machine_response(t, basis.at(i), blank, 2);
    CHECK(w.is_required_form);
    CHECK(w.leakage.is_zero());
  }

  // The dependent superposition is not.
  MachineWitness w = no_delete_machine_witness(
      StateSet(qubit, all_rays(qubit)), blank, 2);
  CHECK(w.input == Vec(f, {1, 1}));
  CHECK(!w.is_required_form);
  CHECK(w.leakage ==
        Vec(f, {0, 0, 1, 0, 1, 0, 0, 0}));  // e2 + e4 retained
  // The rest of the output is the legal part: sigma x blank x e1.
  CHECK((w.machine_output - w.leakage) ==
        Vec(f, {0, 1, 0, 0, 0, 1, 0, 0}));

  // Every dependent ray leaks, over both small fields.
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec fp(p);
    StateSpace qb(fp, 2);
    StateSet b2 = make_set(qb, {{1, 0}, {0, 1}});
    ModalState bl = blank_of(qb);
    Mat del = build_ancilla_deleter(b2, bl, 2);
    for (const ModalState& ray : all_rays(qb)) {
      bool member = ray.same_ray(b2.at(0)) || ray.same_ray(b2.at(1));
      MachineWitness mw = machine_response(del, ray, bl, 2);
      CHECK(mw.is_required_form == member);
    }
  }
}

TEST_CASE("record-keeping deletion reconstructs every member") {
  FieldSpec f2(2);
  StateSpace qubit2(f2, 2);
  StateSet rays2(qubit2, all_rays(qubit2));
  std::vector<RecordedDeletion> recs = delete_with_record(rays2, 2);
  REQUIRE(recs.size() == 3);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].identifier == i);
    REQUIRE(recs[i].remaining.has_value());
    CHECK(*recs[i].remaining == rays2.at(i).vector());
    CHECK(recs[i].reconstructed == rays2.at(i).canonical_ray());
  }

  // Single-copy deletion of a distinguishable pair keeps no quantum output.
  StateSet basis = make_set(qubit2, {{1, 0}, {0, 1}});
  std::vector<RecordedDeletion> one = delete_with_record(basis, 1);
  CHECK(!one[0].remaining.has_value());
  CHECK(one[0].identifier == 0);
  CHECK(one[1].identifier == 1);

  // GF(3): all four rays at their minimum of three copies.
  FieldSpec f3(3);
  StateSpace qubit3(f3, 2);
  StateSet rays3(qubit3, all_rays(qubit3));
  std::vector<RecordedDeletion> recs3 = delete_with_record(rays3, 3);
  for (std::size_t i = 0; i < recs3.size(); ++i) {
    CHECK(recs3[i].reconstructed == rays3.at(i).canonical_ray());
  }

  // Below the minimum the record cannot identify the state.
  CHECK_THROWS_AS(delete_with_record(rays2, 1), DependentSetError);
  CHECK_THROWS_AS(delete_with_record(rays3, 2), DependentSetError);
}
