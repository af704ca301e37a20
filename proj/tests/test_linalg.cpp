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

#include <random>
#include <vector>

#include "doctest.h"
#include "mqt/error.hpp"
#include "mqt/linalg.hpp"

using namespace mqt;

namespace {

Mat random_mat(std::mt19937& rng, const FieldSpec& f, std::size_t rows,
               std::size_t cols) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, Fp(f, dist(rng)));
    }
  }
  return m;
}

Vec random_vec(std::mt19937& rng, const FieldSpec& f, std::size_t dim) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
  Vec v = Vec::zero(f, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v.set(i, Fp(f, dist(rng)));
  }
  return v;
}

}  // namespace

TEST_CASE("vector arithmetic and parallelism") {
  FieldSpec f(5);
  Vec a(f, {1, 2, 3});
  Vec b(f, {4, 4, 0});
  CHECK((a + b) == Vec(f, {0, 1, 3}));
  CHECK((a - b) == Vec(f, {2, 3, 3}));
  CHECK((a * Fp(f, 2)) == Vec(f, {2, 4, 1}));

  CHECK(a.parallel_to(a * Fp(f, 3)));
  CHECK(!a.parallel_to(b));
  CHECK(!a.parallel_to(Vec::zero(f, 3)));
  CHECK(!Vec::zero(f, 3).parallel_to(a));
  // Same support, different ratio.
  CHECK(!Vec(f, {1, 1}).parallel_to(Vec(f, {1, 2})));
}

TEST_CASE("rref matches hand computation") {
  FieldSpec f(3);
  Mat m(f, 2, 3, {1, 1, 1, 2, 2, 1});
  RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 2});
  CHECK(r.rref == Mat(f, 2, 3, {1, 1, 0, 0, 0, 1}));
}

TEST_CASE("rref is idempotent and row-operation invariant") {
  std::mt19937 rng(12345);
  FieldSpec f(5);
  for (int it = 0; it < 50; ++it) {
    Mat m = random_mat(rng, f, 4, 5);
    RrefResult r1 = rref(m);
    CHECK(rref(r1.rref).rref == r1.rref);
    // Left-multiplying by an invertible matrix preserves the row space.
    Mat g = random_mat(rng, f, 4, 4);
    while (det(g).is_zero()) {
      g = random_mat(rng, f, 4, 4);
    }
    CHECK(rref(g * m).rref == r1.rref);
  }
}

TEST_CASE("determinant pinned values") {
  FieldSpec f3(3), f2(2);
  CHECK(det(Mat::identity(f3, 3)).value() == 1);
  CHECK(det(Mat(f3, 2, 2, {1, 1, 2, 2})).value() == 0);
  CHECK(det(Mat(f2, 2, 2, {0, 1, 1, 1})).value() == 1);
  CHECK(det(Mat(f3, 2, 2, {0, 2, 1, 0})).value() == 1);
  CHECK_THROWS_AS(det(Mat(f3, 2, 3)), DomainError);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(777);
  FieldSpec f(7);
  for (int it = 0; it < 50; ++it) {
    Mat a = random_mat(rng, f, 3, 3);
    Mat b = random_mat(rng, f, 3, 3);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("inverse round-trips and rejects singular input") {
  FieldSpec f(5);
  Mat m(f, 2, 2, {1, 2, 3, 4});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv * m) == Mat::identity(f, 2));
  CHECK((m * *inv) == Mat::identity(f, 2));
  CHECK(!inverse(Mat(f, 2, 2, {1, 2, 2, 4})).has_value());

  std::mt19937 rng(31);
  for (int it = 0; it < 30; ++it) {
    Mat a = random_mat(rng, f, 4, 4);
    auto ai = inverse(a);
    CHECK(ai.has_value() == !det(a).is_zero());
    if (ai) {
      CHECK((a * *ai) == Mat::identity(f, 4));
    }
  }
}

TEST_CASE("kernel satisfies rank-nullity") {
  std::mt19937 rng(99);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FieldSpec f(p);
    for (int it = 0; it < 30; ++it) {
      Mat m = random_mat(rng, f, 3, 4);
      Subspace k = kernel(m);
      CHECK(rank(m) + k.dim() == 4);
      for (std::size_t i = 0; i < k.dim(); ++i) {
        CHECK((m * k.basis().row(i)).is_zero());
      }
    }
  }
}

TEST_CASE("solve returns particular plus kernel") {
  FieldSpec f(3);
  Mat m(f, 2, 2, {1, 1, 2, 2});

  AffineSolutionSet s = solve(m, Vec(f, {1, 2}));
  REQUIRE(s.feasible);
  REQUIRE(s.particular.has_value());
  CHECK(*s.particular == Vec(f, {1, 0}));
  CHECK(s.kernel.dim() == 1);
  CHECK(s.kernel.basis().row(0) == Vec(f, {1, 2}));
  // Every kernel offset solves the system too.
  CHECK((m * (*s.particular + s.kernel.basis().row(0))) == Vec(f, {1, 2}));

  AffineSolutionSet bad = solve(m, Vec(f, {1, 1}));
  CHECK(!bad.feasible);
  CHECK(!bad.particular.has_value());
  REQUIRE(bad.certificate.has_value());
  CHECK(*bad.certificate == Vec(f, {0, 0, 1}));
}

TEST_CASE("solve agrees with exhaustive search on small systems") {
  std::mt19937 rng(2024);
  FieldSpec f(3);
  for (int it = 0; it < 40; ++it) {
    Mat m = random_mat(rng, f, 2, 3);
    Vec y = random_vec(rng, f, 2);
    AffineSolutionSet s = solve(m, y);
    std::size_t hits = 0;
    for (std::uint32_t x0 = 0; x0 < 3; ++x0) {
      for (std::uint32_t x1 = 0; x1 < 3; ++x1) {
        for (std::uint32_t x2 = 0; x2 < 3; ++x2) {
          Vec x(f, {x0, x1, x2});
          if ((m * x) == y) {
            ++hits;
          }
        }
      }
    }
    if (s.feasible) {
      CHECK((m * *s.particular) == y);
      std::size_t expect = 1;
      for (std::size_t i = 0; i < s.kernel.dim(); ++i) {
        expect *= 3;
      }
      CHECK(hits == expect);
    } else {
      CHECK(hits == 0);
    }
  }
}

TEST_CASE("subspace membership and canonical equality") {
  FieldSpec f(2);
  Mat gens(f, 2, 3, {1, 0, 1, 0, 1, 1});
  Subspace s = Subspace::span_of(gens);
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vec(f, {1, 1, 0})));
  CHECK(!s.contains(Vec(f, {0, 0, 1})));
  CHECK(!s.reduce(Vec(f, {0, 0, 1})).is_zero());
  CHECK(s.reduce(Vec(f, {1, 0, 1})).is_zero());

  // The same space from a different generating set.
  Mat gens2(f, 3, 3, {1, 1, 0, 1, 0, 1, 0, 1, 1});
  CHECK(Subspace::span_of(gens2) == s);
  CHECK(Subspace::zero(f, 3).dim() == 0);
  CHECK(Subspace::full(f, 3).contains(Vec(f, {1, 1, 1})));
}

TEST_CASE("invertible completion maps pairs and is deterministic") {
  FieldSpec f2(2);
  std::vector<Vec> in{Vec(f2, {1, 0})};
  std::vector<Vec> out{Vec(f2, {0, 1})};
  Mat t = invertible_completion(in, out);
  CHECK(t == Mat(f2, 2, 2, {0, 1, 1, 0}));
  CHECK(invertible_completion(in, out) == t);

  FieldSpec f3(3);
  std::mt19937 rng(5150);
  for (int it = 0; it < 30; ++it) {
    Vec a = random_vec(rng, f3, 3);
    Vec b = random_vec(rng, f3, 3);
    while (a.is_zero()) {
      a = random_vec(rng, f3, 3);
    }
    while (b.is_zero()) {
      b = random_vec(rng, f3, 3);
    }
    std::vector<Vec> ins{a};
    std::vector<Vec> outs{b};
    Mat m = invertible_completion(ins, outs);
    CHECK(!det(m).is_zero());
    CHECK((m * a) == b);
  }
}

TEST_CASE("invertible completion rejects dependent lists with a witness") {
  FieldSpec f(3);
  std::vector<Vec> in{Vec(f, {1, 0, 0}), Vec(f, {2, 0, 0})};
  std::vector<Vec> out{Vec(f, {1, 0, 0}), Vec(f, {0, 1, 0})};
  try {
    invertible_completion(in, out);
    FAIL("expected DependentSetError");
  } catch (const DependentSetError& e) {
    CHECK(e.witness() == std::vector<std::uint32_t>{0, 1});
  }

  std::vector<Vec> in3{Vec(f, {1, 0, 0}), Vec(f, {0, 1, 0}),
                       Vec(f, {1, 2, 0})};
  std::vector<Vec> out3{Vec(f, {1, 0, 0}), Vec(f, {0, 1, 0}),
                        Vec(f, {0, 0, 1})};
  try {
    invertible_completion(in3, out3);
    FAIL("expected DependentSetError");
  } catch (const DependentSetError& e) {
    CHECK(e.witness() == std::vector<std::uint32_t>{0, 1, 2});
  }
}

TEST_CASE("kronecker product uses row-major composite indexing") {
  FieldSpec f(5);
  Vec a(f, {1, 2});
  Vec b(f, {3, 4});
  CHECK(kron(a, b) == Vec(f, {3, 4, 1, 3}));

  Mat x(f, 2, 2, {1, 1, 0, 1});
  Mat y(f, 2, 2, {2, 0, 0, 3});
  Mat k = kron(x, y);
  CHECK(k == Mat(f, 4, 4,
                 {2, 0, 2, 0,
                  0, 3, 0, 3,
                  0, 0, 2, 0,
                  0, 0, 0, 3}));
  // (A (x) B)(u (x) v) = (A u) (x) (B v).
  Vec u(f, {1, 4});
  Vec v(f, {2, 3});
  CHECK((k * kron(u, v)) == kron(x * u, y * v));
}

TEST_CASE("kronecker rank is multiplicative") {
  std::mt19937 rng(4242);
  FieldSpec f(3);
  for (int it = 0; it < 30; ++it) {
    Mat a = random_mat(rng, f, 2, 3);
    Mat b = random_mat(rng, f, 3, 2);
    CHECK(rank(kron(a, b)) == rank(a) * rank(b));
  }
}

TEST_CASE("tensor power dimensions and scaling") {
  FieldSpec f(3);
  Vec v(f, {1, 2});
  CHECK(tensor_power(v, 1) == v);
  CHECK(tensor_power(v, 3).dim() == 8);
  CHECK(tensor_power(v, 3) == kron(kron(v, v), v));
  // (c v)^(x)n = c^n v^(x)n.
  Vec w = v * Fp(f, 2);
  CHECK(tensor_power(w, 2) == tensor_power(v, 2) * (Fp(f, 2) * Fp(f, 2)));
  CHECK_THROWS_AS(tensor_power(v, 0), DomainError);
}

TEST_CASE("shape and field mismatches are rejected") {
  FieldSpec f3(3), f5(5);
  CHECK_THROWS_AS(Vec(f3, {1}) + Vec(f5, {1}), FieldMismatchError);
  CHECK_THROWS_AS(Vec(f3, {1, 2}) + Vec(f3, {1}), DomainError);
  CHECK_THROWS_AS(Mat(f3, 2, 2) * Vec(f3, {1, 2, 0}), DomainError);
  CHECK_THROWS_AS(Mat(f3, 2, 3) * Mat(f3, 2, 3), DomainError);
  CHECK_THROWS_AS(kron(Vec(f3, {1}), Vec(f5, {1})), FieldMismatchError);
  CHECK_THROWS_AS(Vec(f3, std::vector<std::int64_t>{}), DomainError);
}
