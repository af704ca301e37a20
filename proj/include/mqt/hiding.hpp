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

#ifndef MQT_HIDING_HPP
#define MQT_HIDING_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "mqt/error.hpp"
#include "mqt/linalg.hpp"
#include "mqt/poly.hpp"
#include "mqt/states.hpp"

namespace mqt {

/// A linear map from one modal qubit into a pair of modal qubits, given by
/// the images of the two basis states as 2x2 coefficient matrices. The map
/// hides its input when no superposition of the images is a product state.
class HidingMapSpec {
 public:
  /// Validates: both matrices 2x2 over the field and linearly independent
  /// as vectors of entries (the map must be injective).
  HidingMapSpec(const FieldSpec& field, Mat m0, Mat m1);

  /// Spec with the first image fixed to |00> + |11> (identity matrix).
  static HidingMapSpec with_identity_first(const FieldSpec& field, Mat m1);

  const FieldSpec& field() const noexcept { return field_; }
  const Mat& m0() const noexcept { return m0_; }
  const Mat& m1() const noexcept { return m1_; }
  bool m0_is_identity() const;

  /// Coefficient matrix of the image of input a|0> + b|1>.
  Mat pencil(const Fp& a, const Fp& b) const;

  /// The image of a nonzero input vector as a bipartite state.
  BipartiteState image(const Vec& input) const;

 private:
  FieldSpec field_;
  Mat m0_, m1_;
};

/// A product state found in the image of a candidate hiding map: the input
/// coefficients, the output state, and its tensor factorization.
struct ProductWitness {
  Fp a, b;                       // projective pair, first nonzero scaled to 1
  BipartiteState product_state;  // image of a|0> + b|1>
  Vec factor_first;              // canonical rays: product_state is parallel
  Vec factor_second;             // to kron(factor_first, factor_second)
  std::optional<Fp> ratio;       // scalar with row0 = ratio * row1 of the
                                 // coefficient matrix, where row1 is nonzero
};

/// All projective inputs (a : b) whose image is a product state, in
/// lexicographic order of the canonical pair. Empty iff the map hides.
/// Decided by the vanishing of det(a*M0 + b*M1) at all p + 1 points.
std::vector<ProductWitness> product_state_locator(const HidingMapSpec& spec);

/// The quadratic in the conditional-ratio scalar k whose roots mark product
/// states with b != 0: C10 k^2 + (C11 - C00) k - C01, where C = M1. Returned
/// in polynomial normal form, so the degree drops when C10 = 0. Requires
/// M0 = identity; the root-to-witness map is a = C10 k - C00, b = 1.
Polynomial conditional_ratio_quadratic(const HidingMapSpec& spec);

/// Hiding map from a monic rootless quadratic q: M0 = identity and M1 the
/// companion matrix [[0, -q0], [1, -q1]]. The determinant pencil at (t : 1)
/// equals q(-t), so it inherits rootlessness and the map always hides.
/// A reducible q is rejected with its smallest root named.
HidingMapSpec build_hiding_map(const FieldSpec& field, const Polynomial& q);

/// Outcome of the exhaustive hiding check over all p^2 - 1 nonzero inputs.
struct HidingReport {
  bool hides;
  std::size_t inputs_checked;
  std::size_t entangled_count;
  bool reduced_full_both_sides;            // every reduced state = full space
  bool reduced_identical;                  // reduced states agree across inputs
  std::optional<ProductWitness> failure;   // first non-entangled input
};

/// Sweeps every nonzero input pair (a, b) in lexicographic order and checks
/// that the image is entangled with both reduced states equal to the full
/// single-qubit space. The first failing input yields the witness.
HidingReport verify_hiding(const HidingMapSpec& spec);

/// A 1 -> 2 qubit map instance in ordinary complex quantum theory:
/// |0> maps to sqrt(lambda)|00> + sqrt(1-lambda)|11> and |1> maps to the
/// state with coefficient matrix c. Frobenius norm of c must be 1 within
/// the tolerance; 0 < lambda < 1.
struct AqtHidingInstance {
  AqtHidingInstance(double lambda,
                    std::array<std::array<std::complex<double>, 2>, 2> c,
                    double tolerance = 1e-9);

  double lambda;
  std::array<std::array<std::complex<double>, 2>, 2> c;
  double tolerance;
};

/// A numerically located product state in the image of an AQT instance.
struct AqtProductWitness {
  std::complex<double> alpha, beta;            // unit-norm input pair
  std::optional<std::complex<double>> ratio;   // finite root z, when defined
  std::array<std::complex<double>, 4> product_state;  // joint coefficients
  std::array<std::complex<double>, 2> factor_first;
  std::array<std::complex<double>, 2> factor_second;
  double residual_ratio;        // sigma_min / sigma_max of the 2x2 matrix
  double determinant_residual;  // |det| of the 2x2 matrix at the root
};

/// Demonstrates that hiding always fails in complex quantum theory: solves
/// the homogeneous quadratic det(alpha*M0 + beta*C) = 0 by the quadratic
/// formula (projective special cases cover a degenerate leading
/// coefficient), picks the root with the smallest rank-1 residual, and
/// returns the witness. Requires the two image states to be linearly
/// independent within the instance tolerance.
AqtProductWitness aqt_unhide_demo(const AqtHidingInstance& inst);

/// Deterministic random instance: lambda uniform in [0.1, 0.9] and c a
/// normalized complex Gaussian matrix, resampled in the rare case it is
/// nearly proportional to the first image.
AqtHidingInstance random_aqt_instance(std::uint64_t seed);

}  // namespace mqt

#endif
