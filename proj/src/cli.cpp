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

#include "mqt/cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mqt/error.hpp"
#include "mqt/fixtures.hpp"
#include "mqt/parallel.hpp"

namespace mqt {

namespace {

// ---------------------------------------------------------------------------
// Input resolution

Json parse_json_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw DomainError("malformed JSON in " + what);
  }
  return j;
}

/// Inline JSON when the argument starts with '{' or '[', else a file path.
Json parse_json_arg(const std::string& arg, const std::string& what) {
  std::size_t pos = arg.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && (arg[pos] == '{' || arg[pos] == '[')) {
    return parse_json_text(arg, what);
  }
  std::ifstream file(arg);
  if (!file) {
    throw DomainError("cannot open JSON file \"" + arg + "\"");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_json_text(buf.str(), what + " file \"" + arg + "\"");
}

ModalState qubit_blank(const StateSpace& space) {
  return ModalState(space, Vec::unit(space.field(), space.dim(), 0));
}

StateSet resolve_states(const RunConfig& cfg) {
  if (!cfg.fixture.empty()) {
    Json j = load_fixture(cfg.fixture);
    if (!j.contains("states")) {
      throw DomainError("fixture \"" + cfg.fixture + "\" is not a state set");
    }
    return state_set_from_json(j);
  }
  if (cfg.states == "all-rays") {
    if (cfg.p == 0) {
      throw DomainError("--states all-rays requires --p");
    }
    StateSpace qubit(FieldSpec(cfg.p), 2);
    return StateSet(qubit, all_rays(qubit));
  }
  if (!cfg.states.empty()) {
    Json j = parse_json_arg(cfg.states, "--states");
    if (j.is_array()) {
      if (cfg.p == 0) {
        throw DomainError("inline state arrays require --p");
      }
      if (j.empty() || !j[0].is_array()) {
        throw DomainError("--states must be an array of vectors");
      }
      Json wrapped{{"p", cfg.p}, {"dim", j[0].size()}, {"states", j}};
      return state_set_from_json(wrapped);
    }
    return state_set_from_json(j);
  }
  throw DomainError("no states given; use --states or --fixture");
}

HidingMapSpec resolve_hiding_spec(const RunConfig& cfg) {
  if (!cfg.fixture.empty()) {
    Json j = load_fixture(cfg.fixture);
    if (!j.contains("M0")) {
      throw DomainError("fixture \"" + cfg.fixture + "\" is not a hiding map");
    }
    return hiding_spec_from_json(j);
  }
  if (!cfg.spec.empty()) {
    return hiding_spec_from_json(parse_json_arg(cfg.spec, "--spec"));
  }
  throw DomainError("no map given; use --spec or --fixture");
}

// ---------------------------------------------------------------------------
// Battery items. Each one re-derives a pinned claim from the engines and
// records what it measured; `pass` never comes from the pin alone.

/// 4x4 GF(2) matrix as 16 bits (bit 4r+c = entry r,c) applied to a 4-bit
/// vector. Independent of the exact linear algebra on purpose.
unsigned gf2_apply4(unsigned t, unsigned x) {
  unsigned y = 0;
  for (unsigned r = 0; r < 4; ++r) {
    unsigned row = (t >> (4 * r)) & 0xFu;
    y |= static_cast<unsigned>(__builtin_parity(row & x)) << r;
  }
  return y;
}

/// Kronecker product of two 2-bit vectors; bit 2i+j = a_i b_j.
unsigned gf2_kron22(unsigned a, unsigned b) {
  unsigned out = 0;
  for (unsigned i = 0; i < 2; ++i) {
    for (unsigned j = 0; j < 2; ++j) {
      out |= (((a >> i) & 1u) & ((b >> j) & 1u)) << (2 * i + j);
    }
  }
  return out;
}

std::size_t gf2_count_maps(
    const std::vector<std::pair<unsigned, unsigned>>& pairs) {
  std::size_t count = 0;
  for (unsigned t = 0; t < (1u << 16); ++t) {
    bool ok = true;
    for (const auto& [in, out] : pairs) {
      if (gf2_apply4(t, in) != out) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

template <typename Fn>
void for_each_combination(std::size_t total, std::size_t m, Fn visit) {
  if (m == 0 || m > total) return;
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    visit(idx);
    std::size_t j = m;
    while (j > 0 && idx[j - 1] == total - m + (j - 1)) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t k = j; k < m; ++k) idx[k] = idx[k - 1] + 1;
  }
}

BatteryItem item_lemma_sweep(std::size_t workers) {
  const std::map<std::uint32_t, std::size_t> expected{
      {2, 43}, {3, 758}, {5, 31640}};
  Json per_field = Json::object();
  bool pass = true;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FieldSpec f(p);
    std::vector<StateSet> subsets;
    for (std::size_t dim : {2u, 3u}) {
      StateSpace space(f, dim);
      std::vector<ModalState> rays = all_rays(space);
      for (std::size_t d : {2u, 3u}) {
        if (d > dim || d + 1 > rays.size()) continue;
        for_each_combination(
            rays.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
              std::vector<ModalState> members;
              members.reserve(idx.size());
              for (std::size_t i : idx) members.push_back(rays[i]);
              StateSet sub(space, std::move(members));
              if (sub.span_dim() == d) subsets.push_back(std::move(sub));
            });
      }
    }
    std::vector<unsigned char> holds(subsets.size(), 0);
    parallel_chunks(subsets.size(), workers,
                    [&](std::size_t begin, std::size_t end) {
                      for (std::size_t i = begin; i < end; ++i) {
                        holds[i] = lemma_two_copy(subsets[i]) ? 1 : 0;
                      }
                    });
    std::size_t violations =
        static_cast<std::size_t>(std::count(holds.begin(), holds.end(), 0));
    per_field[std::to_string(p)] =
        Json{{"checked", subsets.size()}, {"violations", violations}};
    pass = pass && subsets.size() == expected.at(p) && violations == 0;
  }
  return {"lemma-two-copy-sweep", pass, Json{{"per_field", per_field}}};
}

BatteryItem item_min_copies() {
  const std::map<std::uint32_t, std::size_t> expected{{2, 2}, {3, 3}};
  Json detail = Json::object();
  bool pass = true;
  for (std::uint32_t p : {2u, 3u}) {
    StateSpace qubit(FieldSpec(p), 2);
    StateSet rays(qubit, all_rays(qubit));
    CopyAnalysis inc = min_copies(rays, CopyStrategy::kIncrement);
    CopyAnalysis dbl = min_copies(rays, CopyStrategy::kDouble);
    pass = pass && inc.min_copies == expected.at(p) &&
           dbl.min_copies == expected.at(p);
    detail["gf" + std::to_string(p)] =
        Json{{"strategies_agree", inc.min_copies == dbl.min_copies},
             {"analysis", to_json(inc)}};
  }
  return {"min-copies-all-rays", pass, detail};
}

BatteryItem item_monotonicity() {
  std::mt19937 gen(20260819u);
  const std::array<std::uint32_t, 3> primes{2, 3, 5};
  std::size_t violations = 0;
  for (int made = 0; made < 200; ++made) {
    FieldSpec f(primes[gen() % primes.size()]);
    StateSpace space(f, 2 + gen() % 2);
    std::vector<ModalState> rays = all_rays(space);
    std::size_t want = std::min<std::size_t>(2 + gen() % 4, rays.size());
    std::vector<std::size_t> idx(rays.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), gen);
    idx.resize(want);
    std::sort(idx.begin(), idx.end());
    std::vector<ModalState> members;
    members.reserve(want);
    for (std::size_t i : idx) members.push_back(rays[i]);
    StateSet set(space, std::move(members));

    bool independent_seen = false;
    for (std::size_t n = 1; n <= 6; ++n) {
      bool independent = !dependency(n_copy_set(set, n)).has_value();
      if (independent_seen && !independent) ++violations;
      independent_seen = independent_seen || independent;
    }
  }
  return {"independence-monotonicity", violations == 0,
          Json{{"sets", 200}, {"violations", violations}}};
}

BatteryItem item_cloner_construction() {
  Json detail = Json::object();
  bool pass = true;
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    StateSpace qubit(f, 2);
    std::vector<ModalState> rays = all_rays(qubit);
    ModalState blank = qubit_blank(qubit);
    std::size_t verified = 0;
    for (std::uint32_t mask = 1; mask < (1u << rays.size()); ++mask) {
      std::vector<ModalState> members;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (mask & (1u << i)) members.push_back(rays[i]);
      }
      StateSet sub(qubit, std::move(members));
      std::size_t m = min_copies(sub).min_copies;
      CloneTask task(sub, m);
      Mat cloner = build_cloner(task);
      Mat deleter = build_deleter(task);
      bool ok = !det(cloner).is_zero() &&
                deleter * cloner == Mat::identity(f, cloner.rows());
      for (std::size_t i = 0; ok && i < sub.size(); ++i) {
        Vec in = kron(tensor_power(sub.at(i).vector(), m), blank.vector());
        Vec out = tensor_power(sub.at(i).vector(), m + 1);
        ok = cloner * in == out && deleter * out == in;
      }
      if (ok) ++verified;
      pass = pass && ok;
    }
    detail["gf" + std::to_string(p)] =
        Json{{"subsets", (1u << rays.size()) - 1}, {"verified", verified}};
  }
  return {"cloner-construction", pass, detail};
}

BatteryItem item_no_cloning_below_minimum() {
  bool pass = true;
  Json detail = Json::object();

  FieldSpec f2(2);
  StateSpace qubit2(f2, 2);
  StateSet rays2(qubit2, all_rays(qubit2));
  ModalState blank2 = qubit_blank(qubit2);
  FeasibilityResult all1 =
      exists_linear_map(clone_feasibility_problem(rays2, 1, blank2));
  pass = pass && all1.verdict == FeasibilityResult::Verdict::kOnlyDegenerate;
  detail["gf2_all_rays_n1"] = to_json(all1)["verdict"];

  StateSet basis2(qubit2, {ModalState(qubit2, Vec(f2, {1, 0})),
                           ModalState(qubit2, Vec(f2, {0, 1}))});
  FeasibilityResult basis1 =
      exists_linear_map(clone_feasibility_problem(basis2, 1, blank2));
  pass = pass && basis1.verdict == FeasibilityResult::Verdict::kFeasible;
  detail["gf2_basis_n1"] = to_json(basis1)["verdict"];

  // Raw-bit census over every 4x4 GF(2) matrix, as an independent check.
  std::vector<std::pair<unsigned, unsigned>> all_cons, basis_cons;
  for (unsigned v : {1u, 2u, 3u}) {
    all_cons.emplace_back(gf2_kron22(v, 1u), gf2_kron22(v, v));
  }
  for (unsigned v : {1u, 2u}) {
    basis_cons.emplace_back(gf2_kron22(v, 1u), gf2_kron22(v, v));
  }
  std::size_t oracle_all = gf2_count_maps(all_cons);
  std::size_t oracle_basis = gf2_count_maps(basis_cons);
  pass = pass &&
         (oracle_all > 0) ==
             (all1.verdict == FeasibilityResult::Verdict::kFeasible) &&
         (oracle_basis > 0) ==
             (basis1.verdict == FeasibilityResult::Verdict::kFeasible);
  detail["gf2_oracle_counts"] =
      Json{{"all_rays", oracle_all}, {"basis", oracle_basis}};

  FieldSpec f3(3);
  StateSpace qubit3(f3, 2);
  StateSet rays3(qubit3, all_rays(qubit3));
  ModalState blank3 = qubit_blank(qubit3);
  for (std::size_t n : {1u, 2u}) {
    FeasibilityResult r =
        exists_linear_map(clone_feasibility_problem(rays3, n, blank3));
    pass = pass && r.verdict == FeasibilityResult::Verdict::kOnlyDegenerate;
    detail["gf3_all_rays_n" + std::to_string(n)] = to_json(r)["verdict"];
  }
  return {"no-cloning-below-minimum", pass, detail};
}

BatteryItem item_no_deleting_witness() {
  bool pass = true;
  Json detail = Json::object();
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    StateSpace qubit(f, 2);
    ModalState blank = qubit_blank(qubit);
    StateSet basis(qubit, {ModalState(qubit, Vec(f, {1, 0})),
                           ModalState(qubit, Vec(f, {0, 1}))});
    Mat deleter = build_ancilla_deleter(basis, blank, 2);

    std::size_t dependents = 0;
    for (const ModalState& ray : all_rays(qubit)) {
      bool member = ray.same_ray(basis.at(0)) || ray.same_ray(basis.at(1));
      MachineWitness w = machine_response(deleter, ray, blank, 2);
      if (member) {
        pass = pass && w.is_required_form && w.leakage.is_zero();
      } else {
        pass = pass && !w.is_required_form && !w.leakage.is_zero();
        ++dependents;
      }
    }
    MachineWitness packaged = no_delete_machine_witness(
        StateSet(qubit, all_rays(qubit)), blank, 2);
    pass = pass && !packaged.is_required_form && !packaged.leakage.is_zero();
    detail["gf" + std::to_string(p)] =
        Json{{"dependent_states_leaking", dependents},
             {"witness", to_json(packaged)}};
  }
  return {"no-deleting-machine-witness", pass, detail};
}

BatteryItem item_delete_with_record() {
  const std::array<std::pair<const char*, std::size_t>, 3> cases{
      {{"gf2-all-rays", 2}, {"gf3-all-rays", 3}, {"gf5-all-rays", 5}}};
  bool pass = true;
  Json detail = Json::object();
  for (const auto& [name, expected_m] : cases) {
    StateSet set = state_set_from_json(load_fixture(name));
    std::size_t m = min_copies(set).min_copies;
    bool ok = m == expected_m;
    std::vector<RecordedDeletion> records = delete_with_record(set, m);
    ok = ok && records.size() == set.size();
    for (std::size_t i = 0; ok && i < records.size(); ++i) {
      ok = records[i].identifier == i &&
           records[i].reconstructed == set.at(i).canonical_ray() &&
           records[i].remaining.has_value() &&
           *records[i].remaining == tensor_power(set.at(i).vector(), m - 1);
    }
    pass = pass && ok;
    detail[name] = Json{{"copies", m}, {"round_trips", ok}};
  }
  return {"delete-with-record", pass, detail};
}

BatteryItem item_ratio_quadratic() {
  FieldSpec f(3);
  HidingMapSpec spec = hiding_spec_from_json(load_fixture("z3-reducible"));
  Polynomial q = conditional_ratio_quadratic(spec);
  bool pass = q == Polynomial(f, {1, 1, 1});
  return {"hiding-ratio-quadratic", pass,
          Json{{"coefficients", to_json(q)}}};
}

BatteryItem item_reducible_z3() {
  FieldSpec f(3);
  std::vector<Fp> roots = quadratic_roots(Polynomial(f, {1, 1, 1}));
  bool pass = roots.size() == 1 && roots[0] == Fp(f, 1);

  HidingMapSpec spec = hiding_spec_from_json(load_fixture("z3-reducible"));
  HidingReport report = verify_hiding(spec);
  pass = pass && !report.hides && report.failure.has_value() &&
         report.failure->a == Fp(f, 0) && report.failure->b == Fp(f, 1) &&
         report.failure->factor_first == Vec(f, {1, 1}) &&
         report.failure->factor_second == Vec(f, {1, 2});

  bool rejected = false;
  try {
    build_hiding_map(f, Polynomial(f, {1, 1, 1}));
  } catch (const DomainError& e) {
    rejected = std::string(e.what()).find("root 1") != std::string::npos;
  }
  pass = pass && rejected;

  Json detail{{"quadratic_roots", Json::array()},
              {"constructor_rejects", rejected}};
  for (const Fp& r : roots) detail["quadratic_roots"].push_back(r.value());
  detail["verify_report"] = to_json(report);
  return {"hiding-reducible-z3", pass, detail};
}

BatteryItem item_hiding_constructions() {
  bool pass = true;
  Json detail = Json::object();
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    FieldSpec f(p);
    HidingMapSpec built = build_hiding_map(f, find_irreducible_quadratic(f));
    HidingMapSpec shipped = hiding_spec_from_json(
        load_fixture("gf" + std::to_string(p) + "-companion"));
    bool ok = shipped.m0() == built.m0() && shipped.m1() == built.m1();
    HidingReport report = verify_hiding(built);
    ok = ok && report.hides && report.inputs_checked == p * p - 1 &&
         report.entangled_count == p * p - 1 &&
         report.reduced_full_both_sides && report.reduced_identical;
    pass = pass && ok;
    detail["gf" + std::to_string(p)] =
        Json{{"hides", report.hides},
             {"inputs_checked", report.inputs_checked},
             {"fixture_matches", shipped.m1() == built.m1()}};
  }
  return {"hiding-constructions", pass, detail};
}

BatteryItem item_subsystem_census() {
  const std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> expected{
      {2, {15, 6}}, {3, {40, 24}}};
  bool pass = true;
  Json detail = Json::object();
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    StateSpace qubit(f, 2);
    StateSpace joint(f, 4);
    Subspace full = Subspace::full(f, 2);
    std::size_t total = 0, entangled = 0, mismatches = 0;
    for (const ModalState& s : all_rays(joint)) {
      BipartiteState bp(qubit, qubit, s.vector());
      bool ent = bp.is_entangled();
      bool reduced_full = bp.reduced_a() == full && bp.reduced_b() == full;
      if (ent != reduced_full) ++mismatches;
      if (ent) ++entangled;
      ++total;
    }
    pass = pass && total == expected.at(p).first &&
           entangled == expected.at(p).second && mismatches == 0;
    detail["gf" + std::to_string(p)] = Json{{"states", total},
                                            {"entangled", entangled},
                                            {"mismatches", mismatches}};
  }
  return {"subsystem-state-census", pass, detail};
}

BatteryItem item_aqt_demo(std::size_t workers) {
  constexpr std::size_t kInstances = 1000;
  std::vector<double> residuals(kInstances, 0.0);
  parallel_chunks(kInstances, workers,
                  [&](std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      AqtHidingInstance inst = random_aqt_instance(i + 1);
                      residuals[i] = aqt_unhide_demo(inst).residual_ratio;
                    }
                  });
  double max_residual =
      *std::max_element(residuals.begin(), residuals.end());
  bool pass = max_residual < 1e-8;

  AqtProductWitness w =
      aqt_unhide_demo(aqt_instance_from_json(load_fixture("aqt-swap")));
  auto parallel_to_ones = [](const std::array<std::complex<double>, 2>& v) {
    double scale = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    return std::abs(v[0] - v[1]) <= 1e-9 * scale;
  };
  bool fixed_ok = parallel_to_ones(w.factor_first) &&
                  parallel_to_ones(w.factor_second) &&
                  std::abs(w.alpha - w.beta) < 1e-9 &&
                  w.residual_ratio < 1e-9;
  pass = pass && fixed_ok;
  return {"aqt-unhide-demo", pass,
          Json{{"instances", kInstances},
               {"max_residual", max_residual},
               {"fixed_example_ok", fixed_ok}}};
}

// ---------------------------------------------------------------------------
// Report plumbing

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ' ';
    out += args[i];
  }
  return out;
}

struct Outcome {
  std::string verdict;
  Json data;
  int exit_code = 0;
};

Json make_report(const std::vector<std::string>& args,
                 const std::string& verdict, Json data,
                 std::int64_t timing_ms) {
  Json report;
  report["command"] = join_args(args);
  report["verdict"] = verdict;
  report["data"] = std::move(data);
  report["timing_ms"] = timing_ms;
  report["version"] = kVersion;
  return report;
}

std::string render(const Json& report, const std::string& format) {
  if (format == "text") {
    std::string out;
    out += "command: " + report.at("command").get<std::string>() + "\n";
    out += "verdict: " + report.at("verdict").get<std::string>() + "\n";
    for (const auto& [key, value] : report.at("data").items()) {
      out += key + ": " + value.dump() + "\n";
    }
    out += "version: " + report.at("version").get<std::string>() + "\n";
    return out;
  }
  return report.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Subcommand handlers

Outcome handle_distinguish_check(const RunConfig& cfg) {
  StateSet set = resolve_states(cfg);
  std::optional<Vec> dep = dependency(set);
  if (!dep) {
    return {"verified",
            Json{{"distinguishable", true},
                 {"count", set.size()},
                 {"span_dim", set.span_dim()}},
            0};
  }
  return {"refuted",
          Json{{"distinguishable", false}, {"dependency", to_json(*dep)}},
          2};
}

Outcome handle_distinguish_discriminator(const RunConfig& cfg) {
  StateSet set = resolve_states(cfg);
  try {
    Discriminator d = build_discriminator(set);
    return {"constructed", to_json(d), 0};
  } catch (const DependentSetError& e) {
    return {"refuted",
            Json{{"message", e.what()}, {"dependency", e.witness()}}, 2};
  }
}

Outcome handle_distinguish_min_copies(const RunConfig& cfg) {
  CopyStrategy strategy;
  if (cfg.strategy == "increment") {
    strategy = CopyStrategy::kIncrement;
  } else if (cfg.strategy == "double") {
    strategy = CopyStrategy::kDouble;
  } else {
    throw DomainError("--strategy must be increment or double");
  }
  StateSet set = resolve_states(cfg);
  return {"verified", to_json(min_copies(set, strategy)), 0};
}

Outcome handle_clone_build(const RunConfig& cfg) {
  StateSet set = resolve_states(cfg);
  std::size_t n = cfg.copies ? cfg.copies : min_copies(set).min_copies;
  CloneTask task(set, n);
  Mat cloner = build_cloner(task);
  Json residuals = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    Vec in = kron(tensor_power(set.at(i).vector(), n), task.blank.vector());
    Vec diff = cloner * in - tensor_power(set.at(i).vector(), n + 1);
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < diff.dim(); ++k) {
      if (!diff.at(k).is_zero()) ++nonzero;
    }
    residuals.push_back(nonzero);
  }
  return {"constructed",
          Json{{"n", n},
               {"blank", to_json(task.blank.vector())},
               {"map", to_json(cloner)},
               {"constraint_residuals", residuals}},
          0};
}

Outcome handle_clone_check(const RunConfig& cfg) {
  if (cfg.copies == 0) {
    throw DomainError("clone check requires --n (input copy count)");
  }
  StateSet set = resolve_states(cfg);
  ModalState blank = qubit_blank(set.space());
  FeasibilityResult r =
      exists_linear_map(clone_feasibility_problem(set, cfg.copies, blank));
  Json data{{"n", cfg.copies}, {"result", to_json(r)}};
  if (r.verdict == FeasibilityResult::Verdict::kFeasible) {
    return {"verified", std::move(data), 0};
  }
  return {"refuted", std::move(data), 2};
}

Outcome handle_clone_witness(const RunConfig& cfg) {
  StateSet set = resolve_states(cfg);
  std::size_t n = cfg.copies ? cfg.copies : 1;
  CloneTask task(set, n);
  Mat cloner = build_cloner(task);
  std::optional<CloneBreakdown> w =
      no_clone_witness(cloner, set, n, task.blank);
  Json data{{"n", n}, {"cloner", to_json(cloner)}};
  if (w) {
    data["witness"] = to_json(*w);
    return {"refuted", std::move(data), 2};
  }
  data["witness"] = Json();
  return {"verified", std::move(data), 0};
}

Outcome handle_delete_build(const RunConfig& cfg) {
  StateSet set = resolve_states(cfg);
  std::size_t n = cfg.copies ? cfg.copies : min_copies(set).min_copies;
  CloneTask task(set, n);
  return {"constructed",
          Json{{"n", n}, {"map", to_json(build_deleter(task))}}, 0};
}

Outcome handle_delete_witness(const RunConfig& cfg) {
  StateSet set = resolve_states(cfg);
  ModalState blank = qubit_blank(set.space());
  MachineWitness w = no_delete_machine_witness(set, blank, cfg.ancilla);
  return {"refuted",
          Json{{"ancilla_dim", cfg.ancilla}, {"witness", to_json(w)}}, 2};
}

Outcome handle_delete_with_record(const RunConfig& cfg) {
  StateSet set = resolve_states(cfg);
  std::size_t m = cfg.copies ? cfg.copies : min_copies(set).min_copies;
  std::vector<RecordedDeletion> records = delete_with_record(set, m);
  Json arr = Json::array();
  bool all_round_trip = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    all_round_trip = all_round_trip &&
                     records[i].reconstructed == set.at(i).canonical_ray();
    arr.push_back(to_json(records[i]));
  }
  return {"verified",
          Json{{"m", m},
               {"all_reconstructed", all_round_trip},
               {"records", std::move(arr)}},
          0};
}

Outcome handle_hide_construct(const RunConfig& cfg) {
  if (cfg.p == 0) {
    throw DomainError("hide construct requires --p");
  }
  FieldSpec f(cfg.p);
  Polynomial q = cfg.poly.empty()
                     ? find_irreducible_quadratic(f)
                     : poly_from_json(f, parse_json_arg(cfg.poly, "--poly"));
  HidingMapSpec spec = build_hiding_map(f, q);
  HidingReport report = verify_hiding(spec);
  return {"constructed",
          Json{{"quadratic", to_json(q)},
               {"spec", to_json(spec)},
               {"report", to_json(report)}},
          0};
}

Outcome handle_hide_verify(const RunConfig& cfg) {
  HidingMapSpec spec = resolve_hiding_spec(cfg);
  HidingReport report = verify_hiding(spec);
  if (report.hides) {
    return {"verified", to_json(report), 0};
  }
  return {"refuted", to_json(report), 2};
}

Outcome handle_hide_locate(const RunConfig& cfg) {
  HidingMapSpec spec = resolve_hiding_spec(cfg);
  std::vector<ProductWitness> found = product_state_locator(spec);
  Json arr = Json::array();
  for (const ProductWitness& w : found) arr.push_back(to_json(w));
  return {"constructed",
          Json{{"count", found.size()}, {"witnesses", std::move(arr)}}, 0};
}

Outcome handle_hide_aqt_demo(const RunConfig& cfg) {
  AqtHidingInstance inst = [&ARGS = cfg]() {
    if (!ARGS.fixture.empty()) {
      return aqt_instance_from_json(load_fixture(ARGS.fixture));
    }
    if (ARGS.lambda >= 0.0 || !ARGS.c_json.empty()) {
      if (ARGS.lambda < 0.0 || ARGS.c_json.empty()) {
        throw DomainError("--lambda and --c must be given together");
      }
      Json j{{"lambda", ARGS.lambda},
             {"C", parse_json_arg(ARGS.c_json, "--c")}};
      return aqt_instance_from_json(j);
    }
    return random_aqt_instance(ARGS.seed);
  }();
  AqtProductWitness w = aqt_unhide_demo(inst);
  return {"constructed",
          Json{{"instance", to_json(inst)}, {"witness", to_json(w)}}, 0};
}

Outcome handle_fixtures_list(const RunConfig&) {
  Json arr = Json::array();
  for (const FixtureInfo& info : fixture_catalog()) {
    arr.push_back(Json{{"name", info.name}, {"kind", info.kind}});
  }
  return {"constructed", Json{{"fixtures", std::move(arr)}}, 0};
}

Outcome handle_fixtures_dump(const RunConfig& cfg) {
  if (cfg.fixture.empty()) {
    throw DomainError("fixtures dump requires --fixture");
  }
  return {"constructed",
          Json{{"name", cfg.fixture}, {"fixture", load_fixture(cfg.fixture)}},
          0};
}

Outcome handle_reproduce(const RunConfig& cfg) {
  std::vector<BatteryItem> items =
      reproduce_battery(cfg.only, resolve_workers(cfg.workers));
  if (items.empty()) {
    throw DomainError("--only \"" + cfg.only + "\" matches no battery item");
  }
  Json arr = Json::array();
  std::size_t failed = 0;
  std::string first_failure;
  for (const BatteryItem& item : items) {
    Json row{{"name", item.name}, {"pass", item.pass}};
    row["detail"] = item.detail;
    arr.push_back(std::move(row));
    if (!item.pass) {
      ++failed;
      if (first_failure.empty()) first_failure = item.name;
    }
  }
  Json data{{"executed", items.size()}, {"failed", failed}};
  data["first_failure"] = failed ? Json(first_failure) : Json();
  data["items"] = std::move(arr);
  if (failed) {
    return {"refuted", std::move(data), 2};
  }
  return {"verified", std::move(data), 0};
}

}  // namespace

std::vector<BatteryItem> reproduce_battery(const std::string& only,
                                           std::size_t workers) {
  using ItemFn = std::function<BatteryItem()>;
  const std::vector<std::pair<std::string, ItemFn>> all{
      {"lemma-two-copy-sweep", [&] { return item_lemma_sweep(workers); }},
      {"min-copies-all-rays", [] { return item_min_copies(); }},
      {"independence-monotonicity", [] { return item_monotonicity(); }},
      {"cloner-construction", [] { return item_cloner_construction(); }},
      {"no-cloning-below-minimum",
       [] { return item_no_cloning_below_minimum(); }},
      {"no-deleting-machine-witness", [] { return item_no_deleting_witness(); }},
      {"delete-with-record", [] { return item_delete_with_record(); }},
      {"hiding-ratio-quadratic", [] { return item_ratio_quadratic(); }},
      {"hiding-reducible-z3", [] { return item_reducible_z3(); }},
      {"hiding-constructions", [] { return item_hiding_constructions(); }},
      {"subsystem-state-census", [] { return item_subsystem_census(); }},
      {"aqt-unhide-demo", [&] { return item_aqt_demo(workers); }},
  };
  std::vector<BatteryItem> out;
  for (const auto& [name, fn] : all) {
    if (!only.empty() && name.find(only) == std::string::npos) continue;
    out.push_back(fn());
  }
  return out;
}

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"exact engines for modal quantum theory over prime fields"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* cmd, bool states) {
    cmd->add_option("--format", cfg.format, "json or text");
    cmd->add_option("--workers", cfg.workers,
                    "worker threads (MQT_WORKERS fallback)");
    if (states) {
      cmd->add_option("--p", cfg.p, "field order");
      cmd->add_option("--states", cfg.states,
                      "all-rays, inline JSON array, or a JSON file");
      cmd->add_option("--fixture", cfg.fixture, "named fixture");
    }
  };

  std::string leaf;
  auto wire = [&leaf](CLI::App* cmd, const char* name) {
    cmd->callback([&leaf, name] { leaf = name; });
  };

  CLI::App* distinguish =
      app.add_subcommand("distinguish", "distinguishability of state sets");
  distinguish->require_subcommand(1);
  CLI::App* d_check = distinguish->add_subcommand(
      "check", "is the set distinguishable by one measurement?");
  add_common(d_check, true);
  wire(d_check, "distinguish.check");
  CLI::App* d_disc = distinguish->add_subcommand(
      "discriminator", "build the discriminating basis");
  add_common(d_disc, true);
  wire(d_disc, "distinguish.discriminator");
  CLI::App* d_min = distinguish->add_subcommand(
      "min-copies", "minimum copies for distinguishability");
  add_common(d_min, true);
  d_min->add_option("--strategy", cfg.strategy, "increment or double");
  wire(d_min, "distinguish.min-copies");

  CLI::App* clone = app.add_subcommand("clone", "cloning maps");
  clone->require_subcommand(1);
  CLI::App* c_build =
      clone->add_subcommand("build", "construct an invertible cloner");
  add_common(c_build, true);
  c_build->add_option("--n", cfg.copies, "input copy count (default: minimum)");
  wire(c_build, "clone.build");
  CLI::App* c_check = clone->add_subcommand(
      "check", "decide nondegenerate cloneability at a copy count");
  add_common(c_check, true);
  c_check->add_option("--n", cfg.copies, "input copy count");
  wire(c_check, "clone.check");
  CLI::App* c_witness = clone->add_subcommand(
      "witness", "superposition a member-wise cloner fails to clone");
  add_common(c_witness, true);
  c_witness->add_option("--n", cfg.copies, "input copy count (default 1)");
  wire(c_witness, "clone.witness");

  CLI::App* del = app.add_subcommand("delete", "deleting maps");
  del->require_subcommand(1);
  CLI::App* x_build =
      del->add_subcommand("build", "construct the inverse of a cloner");
  add_common(x_build, true);
  x_build->add_option("--n", cfg.copies, "output copy count (default: minimum)");
  wire(x_build, "delete.build");
  CLI::App* x_witness = del->add_subcommand(
      "witness", "ancilla leakage for a dependent input");
  add_common(x_witness, true);
  x_witness->add_option("--ancilla", cfg.ancilla, "ancilla dimension");
  wire(x_witness, "delete.witness");
  CLI::App* x_record = del->add_subcommand(
      "with-record", "delete via measurement, keeping an identifier");
  add_common(x_record, true);
  x_record->add_option("--n", cfg.copies, "input copy count (default: minimum)");
  wire(x_record, "delete.with-record");

  CLI::App* hide = app.add_subcommand("hide", "hiding maps");
  hide->require_subcommand(1);
  CLI::App* h_construct = hide->add_subcommand(
      "construct", "hiding map from a rootless quadratic");
  add_common(h_construct, false);
  h_construct->add_option("--p", cfg.p, "field order");
  h_construct->add_option("--poly", cfg.poly,
                          "monic quadratic, ascending coefficients");
  wire(h_construct, "hide.construct");
  CLI::App* h_verify =
      hide->add_subcommand("verify", "exhaustive hiding check");
  add_common(h_verify, false);
  h_verify->add_option("--spec", cfg.spec, "map spec (inline JSON or file)");
  h_verify->add_option("--fixture", cfg.fixture, "named fixture");
  wire(h_verify, "hide.verify");
  CLI::App* h_locate =
      hide->add_subcommand("locate", "product states in the image");
  add_common(h_locate, false);
  h_locate->add_option("--spec", cfg.spec, "map spec (inline JSON or file)");
  h_locate->add_option("--fixture", cfg.fixture, "named fixture");
  wire(h_locate, "hide.locate");
  CLI::App* h_aqt = hide->add_subcommand(
      "aqt-demo", "complex-arithmetic unhiding demonstration");
  add_common(h_aqt, false);
  h_aqt->add_option("--lambda", cfg.lambda, "Schmidt parameter in (0,1)");
  h_aqt->add_option("--c", cfg.c_json, "2x2 complex matrix, [re,im] entries");
  h_aqt->add_option("--seed", cfg.seed, "random instance seed");
  h_aqt->add_option("--fixture", cfg.fixture, "named fixture");
  wire(h_aqt, "hide.aqt-demo");

  CLI::App* fixtures = app.add_subcommand("fixtures", "shipped inputs");
  fixtures->require_subcommand(1);
  CLI::App* f_list = fixtures->add_subcommand("list", "catalog");
  add_common(f_list, false);
  wire(f_list, "fixtures.list");
  CLI::App* f_dump = fixtures->add_subcommand("dump", "print one fixture");
  add_common(f_dump, false);
  f_dump->add_option("--fixture", cfg.fixture, "fixture name");
  wire(f_dump, "fixtures.dump");

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "re-derive every pinned claim from the engines");
  add_common(reproduce, false);
  reproduce->add_option("--only", cfg.only, "run items whose name contains this");
  wire(reproduce, "reproduce");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("mqt");
  for (const std::string& a : args) argv_store.push_back(a);
  std::vector<char*> argv;
  argv.reserve(argv_store.size());
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {0, Json(), app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, Json(), app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    Json report = make_report(args, "error",
                              Json{{"message", e.what()}}, 0);
    return {1, report, render(report, cfg.format)};
  }

  static const std::map<std::string, Outcome (*)(const RunConfig&)> table{
      {"distinguish.check", handle_distinguish_check},
      {"distinguish.discriminator", handle_distinguish_discriminator},
      {"distinguish.min-copies", handle_distinguish_min_copies},
      {"clone.build", handle_clone_build},
      {"clone.check", handle_clone_check},
      {"clone.witness", handle_clone_witness},
      {"delete.build", handle_delete_build},
      {"delete.witness", handle_delete_witness},
      {"delete.with-record", handle_delete_with_record},
      {"hide.construct", handle_hide_construct},
      {"hide.verify", handle_hide_verify},
      {"hide.locate", handle_hide_locate},
      {"hide.aqt-demo", handle_hide_aqt_demo},
      {"fixtures.list", handle_fixtures_list},
      {"fixtures.dump", handle_fixtures_dump},
      {"reproduce", handle_reproduce},
  };

  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = table.at(leaf)(cfg);
  } catch (const DependentSetError& e) {
    outcome = {"error",
               Json{{"message", e.what()}, {"dependency", e.witness()}}, 1};
  } catch (const Error& e) {
    outcome = {"error", Json{{"message", e.what()}}, 1};
  } catch (const Json::exception& e) {
    outcome = {"error", Json{{"message", e.what()}}, 1};
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  Json report = make_report(args, outcome.verdict, std::move(outcome.data),
                            elapsed);
  return {outcome.exit_code, report, render(report, cfg.format)};
}

}  // namespace mqt
