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

#include <cmath>
#include <complex>
#include <string>

#include "doctest.h"
#include "mqt/hiding.hpp"

using namespace mqt;

namespace {

Mat mat2(const FieldSpec& f, std::int64_t a, std::int64_t b, std::int64_t c,
         std::int64_t d) {
  Mat m(f, 2, 2);
  m.set(0, 0, Fp(f, a));
  m.set(0, 1, Fp(f, b));
  m.set(1, 0, Fp(f, c));
  m.set(1, 1, Fp(f, d));
  return m;
}

/// The GF(3) map whose second image has equal conditional rows; its
/// conditional-ratio quadratic is k^2 + k + 1.
HidingMapSpec z3_reducible_spec() {
  FieldSpec f(3);
  return HidingMapSpec::with_identity_first(f, mat2(f, 1, 2, 1, 2));
}

using Cx = std::complex<double>;

bool cx_parallel(const std::array<Cx, 2>& x, const std::array<Cx, 2>& y,
                 double tol) {
  double cross = std::abs(x[0] * y[1] - x[1] * y[0]);
  double nx = std::sqrt(std::norm(x[0]) + std::norm(x[1]));
  double ny = std::sqrt(std::norm(y[0]) + std::norm(y[1]));
  return cross <= tol * nx * ny;
}

}  // namespace

TEST_CASE("spec construction rejects dependent or malformed images") {
  FieldSpec f(3);
  Mat id = Mat::identity(f, 2);

  try {
    HidingMapSpec(f, id, id);
    FAIL("expected DependentSetError");
  } catch (const DependentSetError& e) {
    CHECK(e.witness() == std::vector<std::uint32_t>{1, 2});  // M0 - M1 = 0
  }
  try {
    HidingMapSpec(f, id, mat2(f, 0, 0, 0, 0));
    FAIL("expected DependentSetError");
  } catch (const DependentSetError& e) {
    CHECK(e.witness() == std::vector<std::uint32_t>{0, 1});
  }
  CHECK_THROWS_AS(HidingMapSpec(f, id, Mat::identity(f, 3)), DomainError);
  CHECK_THROWS_AS(HidingMapSpec(f, id, Mat::identity(FieldSpec(5), 2)),
                  FieldMismatchError);

  HidingMapSpec ok = z3_reducible_spec();
  CHECK(ok.m0_is_identity());
  CHECK_THROWS_AS(ok.image(Vec(f, {0, 0})), DomainError);
  CHECK_THROWS_AS(ok.image(Vec(f, {1, 0, 0})), DomainError);
}

TEST_CASE("locator finds the product state of the reducible GF(3) map") {
  HidingMapSpec spec = z3_reducible_spec();
  FieldSpec f = spec.field();

  std::vector<ProductWitness> found = product_state_locator(spec);
  REQUIRE(found.size() == 1);
  const ProductWitness& w = found[0];
  CHECK(w.a == Fp(f, 0));
  CHECK(w.b == Fp(f, 1));
  CHECK(w.product_state.vector() == Vec(f, {1, 2, 1, 2}));
  CHECK(w.factor_first == Vec(f, {1, 1}));
  CHECK(w.factor_second == Vec(f, {1, 2}));
  REQUIRE(w.ratio.has_value());
  CHECK(*w.ratio == Fp(f, 1));
  CHECK(kron(w.factor_first, w.factor_second)
            .parallel_to(w.product_state.vector()));

  // The pencil determinant is a^2, so only multiples of (0, 1) degenerate.
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(det(spec.pencil(Fp(f, a), Fp(f, b))).is_zero() == (a == 0));
    }
  }
}

TEST_CASE("conditional-ratio quadratic matches the located witnesses") {
  FieldSpec f(3);
  HidingMapSpec spec = z3_reducible_spec();
  Polynomial q = conditional_ratio_quadratic(spec);
  CHECK(q == Polynomial(f, {1, 1, 1}));  // k^2 + k + 1
  std::vector<Fp> roots = quadratic_roots(q);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == Fp(f, 1));

  // Root k = 1 corresponds to input a = C10 k - C00 = 0, b = 1.
  std::vector<ProductWitness> found = product_state_locator(spec);
  REQUIRE(found.size() == 1);
  CHECK(found[0].ratio == roots[0]);

  // Swapped-image spec has no identity first image.
  CHECK_THROWS_AS(
      conditional_ratio_quadratic(HidingMapSpec(f, mat2(f, 1, 2, 1, 2),
                                                Mat::identity(f, 2))),
      DomainError);
}

TEST_CASE("companion construction yields verified hiding maps") {
  SUBCASE("GF(3), x^2 + 1") {
    FieldSpec f(3);
    HidingMapSpec spec = build_hiding_map(f, Polynomial(f, {1, 0, 1}));
    CHECK(spec.m1() == mat2(f, 0, 2, 1, 0));
    CHECK(product_state_locator(spec).empty());
    CHECK(conditional_ratio_quadratic(spec) == Polynomial(f, {1, 0, 1}));
    CHECK(quadratic_roots(conditional_ratio_quadratic(spec)).empty());

    HidingReport report = verify_hiding(spec);
    CHECK(report.hides);
    CHECK(report.inputs_checked == 8);
    CHECK(report.entangled_count == 8);
    CHECK(report.reduced_full_both_sides);
    CHECK(report.reduced_identical);
    CHECK(!report.failure.has_value());
  }

  SUBCASE("GF(2), x^2 + x + 1") {
    FieldSpec f(2);
    HidingMapSpec spec = build_hiding_map(f, Polynomial(f, {1, 1, 1}));
    CHECK(spec.m1() == mat2(f, 0, 1, 1, 1));
    CHECK(product_state_locator(spec).empty());

    HidingReport report = verify_hiding(spec);
    CHECK(report.hides);
    CHECK(report.inputs_checked == 3);
    CHECK(report.entangled_count == 3);
  }

  SUBCASE("reducible quadratics are rejected with the root named") {
    FieldSpec f(3);
    try {
      build_hiding_map(f, Polynomial(f, {1, 1, 1}));  // root 1 over GF(3)
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("root 1") != std::string::npos);
    }
    CHECK_THROWS_AS(build_hiding_map(f, Polynomial(f, {1, 1})), DomainError);
    CHECK_THROWS_AS(build_hiding_map(f, Polynomial(f, {1, 0, 2})),
                    DomainError);
  }

  SUBCASE("first irreducible quadratic hides for small primes") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      FieldSpec f(p);
      HidingMapSpec spec = build_hiding_map(f, find_irreducible_quadratic(f));
      HidingReport report = verify_hiding(spec);
      CHECK(report.hides);
      CHECK(report.inputs_checked == p * p - 1);
      CHECK(report.entangled_count == p * p - 1);
      CHECK(report.reduced_full_both_sides);
    }
  }
}

TEST_CASE("failed hiding reports the first product input") {
  HidingMapSpec spec = z3_reducible_spec();
  HidingReport report = verify_hiding(spec);
  CHECK(!report.hides);
  CHECK(report.inputs_checked == 8);
  CHECK(report.entangled_count == 6);  // (0,1) and (0,2) degenerate
  CHECK(!report.reduced_full_both_sides);
  CHECK(!report.reduced_identical);
  REQUIRE(report.failure.has_value());
  CHECK(report.failure->a == Fp(spec.field(), 0));
  CHECK(report.failure->b == Fp(spec.field(), 1));
  CHECK(report.failure->factor_first == Vec(spec.field(), {1, 1}));
  CHECK(report.failure->factor_second == Vec(spec.field(), {1, 2}));
}

TEST_CASE("rank-one images on both projective axes are factored") {
  FieldSpec f(3);
  // det(a M0 + b M1) = ab: both axes degenerate, one with a zero second row.
  HidingMapSpec spec(f, mat2(f, 1, 0, 0, 0), mat2(f, 0, 0, 0, 1));
  std::vector<ProductWitness> found = product_state_locator(spec);
  REQUIRE(found.size() == 2);
  CHECK(found[0].a == Fp(f, 0));
  CHECK(found[0].b == Fp(f, 1));
  CHECK(found[0].factor_first == Vec(f, {0, 1}));
  CHECK(found[0].factor_second == Vec(f, {0, 1}));
  REQUIRE(found[0].ratio.has_value());
  CHECK(*found[0].ratio == Fp(f, 0));
  CHECK(found[1].a == Fp(f, 1));
  CHECK(found[1].b == Fp(f, 0));
  CHECK(found[1].factor_first == Vec(f, {1, 0}));
  CHECK(found[1].factor_second == Vec(f, {1, 0}));
  CHECK(!found[1].ratio.has_value());  // second row vanishes

  HidingReport report = verify_hiding(spec);
  CHECK(!report.hides);
  CHECK(report.entangled_count == 4);
  REQUIRE(report.failure.has_value());
  CHECK(report.failure->a == Fp(f, 0));
  CHECK(report.failure->b == Fp(f, 1));
}

TEST_CASE("verdicts, locator, and ratio roots agree on full sweeps") {
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    Mat id = Mat::identity(f, 2);
    std::size_t specs_checked = 0;
    for (std::uint32_t word = 0; word < p * p * p * p; ++word) {
      std::uint32_t w = word;
      Mat m1(f, 2, 2);
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          m1.set(i, j, Fp(f, w % p));
          w /= p;
        }
      }
      bool scalar_of_identity =
          m1.at(0, 1).is_zero() && m1.at(1, 0).is_zero() &&
          m1.at(0, 0) == m1.at(1, 1);
      if (scalar_of_identity) continue;
      ++specs_checked;

      HidingMapSpec spec(f, id, m1);
      std::vector<ProductWitness> found = product_state_locator(spec);
      HidingReport report = verify_hiding(spec);
      CHECK(report.hides == found.empty());

      Polynomial q = conditional_ratio_quadratic(spec);
      std::size_t roots_found = 0;
      for (const ProductWitness& w2 : found) {
        if (w2.b.is_zero()) continue;
        if (w2.ratio.has_value()) {
          // Every defined ratio satisfies the quadratic.
          CHECK(q(*w2.ratio).is_zero());
          ++roots_found;
        }
      }
      if (!m1.at(1, 0).is_zero()) {
        // Nondegenerate leading coefficient: roots and witnesses biject.
        CHECK(roots_found == quadratic_roots(q).size());
      }
    }
    CHECK(specs_checked == p * p * p * p - p);
  }
}

TEST_CASE("verdict is invariant under rescaling of either image") {
  FieldSpec f(3);
  for (bool expect_hiding : {true, false}) {
    HidingMapSpec base = expect_hiding
                             ? build_hiding_map(f, Polynomial(f, {1, 0, 1}))
                             : z3_reducible_spec();
    for (std::uint32_t s0 = 1; s0 < 3; ++s0) {
      for (std::uint32_t s1 = 1; s1 < 3; ++s1) {
        HidingMapSpec scaled(f, base.m0() * Fp(f, s0),
                             base.m1() * Fp(f, s1));
        CHECK(verify_hiding(scaled).hides == expect_hiding);
      }
    }
  }
}

TEST_CASE("entanglement coincides with full reduced states on both sides") {
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    StateSpace qubit(f, 2);
    StateSpace joint(f, 4);
    Subspace full = Subspace::full(f, 2);
    for (const ModalState& s : all_rays(joint)) {
      BipartiteState bp(qubit, qubit, s.vector());
      bool reduced_full =
          bp.reduced_a() == full && bp.reduced_b() == full;
      CHECK(bp.is_entangled() == reduced_full);
    }
  }
}

TEST_CASE("AQT instance validation") {
  std::array<std::array<Cx, 2>, 2> swap{
      {{Cx(0, 0), Cx(std::sqrt(0.5), 0)}, {Cx(std::sqrt(0.5), 0), Cx(0, 0)}}};
  CHECK_THROWS_AS(AqtHidingInstance(0.0, swap), DomainError);
  CHECK_THROWS_AS(AqtHidingInstance(1.0, swap), DomainError);
  CHECK_THROWS_AS(AqtHidingInstance(0.5, swap, 0.0), DomainError);
  std::array<std::array<Cx, 2>, 2> big{
      {{Cx(1, 0), Cx(1, 0)}, {Cx(1, 0), Cx(1, 0)}}};
  CHECK_THROWS_AS(AqtHidingInstance(0.5, big), DomainError);
  CHECK_NOTHROW(AqtHidingInstance(0.5, swap));
}

TEST_CASE("AQT demo unhides the swap-image example") {
  double r = std::sqrt(0.5);
  AqtHidingInstance inst(
      0.5, {{{Cx(0, 0), Cx(r, 0)}, {Cx(r, 0), Cx(0, 0)}}});
  AqtProductWitness w = aqt_unhide_demo(inst);

  REQUIRE(w.ratio.has_value());
  CHECK(std::abs(*w.ratio - Cx(1, 0)) < 1e-12);
  CHECK(std::abs(w.alpha - Cx(r, 0)) < 1e-12);
  CHECK(std::abs(w.beta - Cx(r, 0)) < 1e-12);
  CHECK(w.residual_ratio < 1e-9);
  CHECK(w.determinant_residual < 1e-9);

  // The witness state is (|0> + |1>) x (|0> + |1>) up to normalization.
  CHECK(cx_parallel(w.factor_first, {Cx(1, 0), Cx(1, 0)}, 1e-12));
  CHECK(cx_parallel(w.factor_second, {Cx(1, 0), Cx(1, 0)}, 1e-12));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(std::abs(w.product_state[i * 2 + j] -
                     w.factor_first[i] * w.factor_second[j]) < 1e-12);
    }
  }
}

TEST_CASE("AQT demo covers the degenerate ratio-form case") {
  // C10 = 0 with C11 sqrt(lambda) = C00 sqrt(1-lambda): the ratio form has
  // no finite root, but the determinant still factors (double root).
  AqtHidingInstance inst(
      0.5, {{{Cx(0.5, 0), Cx(std::sqrt(0.5), 0)}, {Cx(0, 0), Cx(0.5, 0)}}});
  AqtProductWitness w = aqt_unhide_demo(inst);
  REQUIRE(w.ratio.has_value());
  CHECK(std::abs(*w.ratio - Cx(-std::sqrt(0.5), 0)) < 1e-7);
  CHECK(w.residual_ratio < 1e-8);
}

TEST_CASE("AQT demo rejects dependent images") {
  double r = std::sqrt(0.5);
  AqtHidingInstance inst(0.5,
                         {{{Cx(r, 0), Cx(0, 0)}, {Cx(0, 0), Cx(r, 0)}}});
  CHECK_THROWS_AS(aqt_unhide_demo(inst), DomainError);
}

TEST_CASE("AQT demo succeeds on seeded random instances") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    AqtHidingInstance inst = random_aqt_instance(seed);
    AqtProductWitness w = aqt_unhide_demo(inst);
    CHECK(w.residual_ratio < 1e-8);
    CHECK(std::abs(std::norm(w.alpha) + std::norm(w.beta) - 1.0) < 1e-12);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(std::abs(w.product_state[i * 2 + j] -
                       w.factor_first[i] * w.factor_second[j]) < 1e-8);
      }
    }
  }

  AqtHidingInstance a = random_aqt_instance(42);
  AqtHidingInstance b = random_aqt_instance(42);
  CHECK(a.lambda == b.lambda);
  CHECK(a.c == b.c);
}
