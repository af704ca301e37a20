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

#include "mqt/json_io.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "mqt/error.hpp"

namespace mqt {

namespace {

Json cx_json(const std::complex<double>& z) {
  return Json::array({z.real(), z.imag()});
}

std::string verdict_name(FeasibilityResult::Verdict v) {
  switch (v) {
    case FeasibilityResult::Verdict::kFeasible:
      return "feasible";
    case FeasibilityResult::Verdict::kInfeasible:
      return "infeasible";
    case FeasibilityResult::Verdict::kOnlyDegenerate:
      return "only-degenerate";
  }
  return "unknown";
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing JSON key \"") + key + "\"");
  }
  return j.at(key);
}

std::int64_t int_at(const Json& j) {
  if (!j.is_number_integer()) {
    throw DomainError("expected an integer in JSON input");
  }
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_row(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw DomainError("expected a nonempty JSON array of integers");
  }
  std::vector<std::int64_t> row;
  row.reserve(j.size());
  for (const Json& e : j) row.push_back(int_at(e));
  return row;
}

std::complex<double> cx_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw DomainError("complex numbers are encoded as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json to_json(const FieldSpec& f) { return Json{{"p", f.p()}}; }

Json to_json(const Vec& v) { return Json(v.raw()); }

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

Json to_json(const Subspace& s) {
  return Json{{"ambient", s.ambient_dim()}, {"basis", to_json(s.basis())}};
}

Json to_json(const Polynomial& q) { return Json(q.coeffs()); }

Json to_json(const ModalState& s) {
  return Json{{"p", s.space().field().p()},
              {"dim", s.space().dim()},
              {"coeffs", to_json(s.vector())}};
}

Json to_json(const BipartiteState& s) {
  return Json{{"left_dim", s.space_a().dim()},
              {"right_dim", s.space_b().dim()},
              {"matrix", to_json(s.coefficient_matrix())}};
}

Json to_json(const StateSet& s) {
  Json states = Json::array();
  for (const ModalState& m : s.states()) states.push_back(to_json(m.vector()));
  return Json{{"p", s.space().field().p()},
              {"dim", s.space().dim()},
              {"states", std::move(states)}};
}

Json to_json(const Discriminator& d) {
  return Json{{"basis", to_json(d.basis.matrix())},
              {"outcome_to_state", d.outcome_to_state}};
}

Json to_json(const CopyAnalysis& a) {
  Json witness = Json::object();
  for (std::size_t i = 0; i < a.witness_at.size(); ++i) {
    if (a.witness_at[i]) {
      witness[std::to_string(i + 1)] = to_json(*a.witness_at[i]);
    }
  }
  return Json{{"M", a.min_copies},
              {"flags", a.independent_at},
              {"witness_at", std::move(witness)}};
}

Json to_json(const FeasibilityResult& r) {
  Json j{{"verdict", verdict_name(r.verdict)}};
  j["map"] = r.map ? to_json(*r.map) : Json();
  j["ray_scalars"] = r.ray_scalars;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json();
  return j;
}

Json to_json(const CloneBreakdown& b) {
  return Json{{"superposition", to_json(b.superposition)},
              {"machine_output", to_json(b.machine_output)},
              {"ideal_output", to_json(b.ideal_output)}};
}

Json to_json(const MachineWitness& w) {
  return Json{{"input", to_json(w.input)},
              {"machine_output", to_json(w.machine_output)},
              {"leakage", to_json(w.leakage)},
              {"is_required_form", w.is_required_form}};
}

Json to_json(const RecordedDeletion& r) {
  Json j{{"identifier", r.identifier}};
  j["remaining"] = r.remaining ? to_json(*r.remaining) : Json();
  j["reconstructed"] = to_json(r.reconstructed);
  return j;
}

Json to_json(const HidingMapSpec& spec) {
  return Json{{"p", spec.field().p()},
              {"M0", to_json(spec.m0())},
              {"M1", to_json(spec.m1())}};
}

Json to_json(const ProductWitness& w) {
  Json j{{"a", w.a.value()}, {"b", w.b.value()}};
  j["product_state"] = to_json(w.product_state);
  j["factor_first"] = to_json(w.factor_first);
  j["factor_second"] = to_json(w.factor_second);
  j["ratio"] = w.ratio ? Json(w.ratio->value()) : Json();
  return j;
}

Json to_json(const HidingReport& r) {
  Json j{{"hides", r.hides},
         {"inputs_checked", r.inputs_checked},
         {"entangled_count", r.entangled_count},
         {"reduced_full_both_sides", r.reduced_full_both_sides},
         {"reduced_identical", r.reduced_identical}};
  j["failure"] = r.failure ? to_json(*r.failure) : Json();
  return j;
}

Json to_json(const AqtHidingInstance& inst) {
  Json rows = Json::array();
  for (const auto& row : inst.c) {
    rows.push_back(Json::array({cx_json(row[0]), cx_json(row[1])}));
  }
  return Json{{"lambda", inst.lambda},
              {"C", std::move(rows)},
              {"tolerance", inst.tolerance}};
}

Json to_json(const AqtProductWitness& w) {
  Json j{{"alpha", cx_json(w.alpha)}, {"beta", cx_json(w.beta)}};
  j["ratio"] = w.ratio ? cx_json(*w.ratio) : Json();
  Json state = Json::array();
  for (const auto& e : w.product_state) state.push_back(cx_json(e));
  j["product_state"] = std::move(state);
  j["factor_first"] =
      Json::array({cx_json(w.factor_first[0]), cx_json(w.factor_first[1])});
  j["factor_second"] =
      Json::array({cx_json(w.factor_second[0]), cx_json(w.factor_second[1])});
  j["residual_ratio"] = w.residual_ratio;
  j["determinant_residual"] = w.determinant_residual;
  return j;
}

FieldSpec field_from_json(const Json& j) {
  std::int64_t p = int_at(require(j, "p"));
  if (p < 2 || p > (1 << 20)) {
    throw DomainError("field order out of range");
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

Vec vec_from_json(const FieldSpec& f, const Json& j) {
  return Vec(f, int_row(j));
}

Mat mat_from_json(const FieldSpec& f, const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw DomainError("expected a nonempty JSON array of matrix rows");
  }
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(j.size());
  for (const Json& r : j) {
    rows.push_back(int_row(r));
    if (rows.back().size() != rows.front().size()) {
      throw DomainError("matrix rows must have equal length");
    }
  }
  Mat m(f, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      m.set(i, k, Fp(f, rows[i][k]));
    }
  }
  return m;
}

Polynomial poly_from_json(const FieldSpec& f, const Json& j) {
  if (!j.is_array()) {
    throw DomainError("polynomials are encoded as coefficient arrays");
  }
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(j.size());
  for (const Json& e : j) coeffs.push_back(int_at(e));
  return Polynomial(f, coeffs);
}

StateSet state_set_from_json(const Json& j) {
  FieldSpec f = field_from_json(j);
  std::int64_t dim = int_at(require(j, "dim"));
  if (dim < 2 || dim > 64) {
    throw DomainError("state dimension out of range");
  }
  StateSpace space(f, static_cast<std::size_t>(dim));
  const Json& arr = require(j, "states");
  if (!arr.is_array() || arr.empty()) {
    throw DomainError("\"states\" must be a nonempty array of vectors");
  }
  std::vector<ModalState> states;
  states.reserve(arr.size());
  for (const Json& v : arr) {
    states.emplace_back(space, vec_from_json(f, v));
  }
  return StateSet(space, std::move(states));
}

HidingMapSpec hiding_spec_from_json(const Json& j) {
  FieldSpec f = field_from_json(j);
  return HidingMapSpec(f, mat_from_json(f, require(j, "M0")),
                       mat_from_json(f, require(j, "M1")));
}

AqtHidingInstance aqt_instance_from_json(const Json& j) {
  const Json& lam = require(j, "lambda");
  if (!lam.is_number()) throw DomainError("\"lambda\" must be a number");
  const Json& c = require(j, "C");
  if (!c.is_array() || c.size() != 2 || !c[0].is_array() ||
      c[0].size() != 2 || !c[1].is_array() || c[1].size() != 2) {
    throw DomainError("\"C\" must be a 2x2 array of [re, im] pairs");
  }
  std::array<std::array<std::complex<double>, 2>, 2> m;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      m[i][k] = cx_from_json(c[i][k]);
    }
  }
  double tol = 1e-9;
  if (j.contains("tolerance")) {
    if (!j.at("tolerance").is_number()) {
      throw DomainError("\"tolerance\" must be a number");
    }
    tol = j.at("tolerance").get<double>();
  }
  return AqtHidingInstance(lam.get<double>(), m, tol);
}

}  // namespace mqt
