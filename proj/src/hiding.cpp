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

#include "mqt/hiding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace mqt {

namespace {

void check_2x2(const FieldSpec& field, const Mat& m, const char* which) {
  if (m.field() != field) {
    throw FieldMismatchError(std::string(which) +
                             " is over a different field than the map");
  }
  if (m.rows() != 2 || m.cols() != 2) {
    throw DomainError(std::string(which) + " must be a 2x2 matrix");
  }
}

Vec flatten(const Mat& m) {
  Vec v = Vec::zero(m.field(), m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v.set(i * m.cols() + j, m.at(i, j));
    }
  }
  return v;
}

/// Canonical projective representatives of P^1: (0, 1) then (1, t).
std::vector<std::pair<Fp, Fp>> projective_line(const FieldSpec& f) {
  std::vector<std::pair<Fp, Fp>> pts;
  pts.reserve(f.p() + 1);
  pts.emplace_back(Fp(f, 0), Fp(f, 1));
  for (std::uint32_t t = 0; t < f.p(); ++t) {
    pts.emplace_back(Fp(f, 1), Fp(f, t));
  }
  return pts;
}

ProductWitness make_witness(const HidingMapSpec& spec, const Fp& a,
                            const Fp& b) {
  const FieldSpec& f = spec.field();
  Mat w = spec.pencil(a, b);

  // Rank 1: every row is a multiple of the first nonzero row.
  std::size_t lead = w.row(0).is_zero() ? 1 : 0;
  Vec second = w.row(lead);
  std::size_t piv = 0;
  while (second.at(piv).is_zero()) ++piv;
  Vec first = Vec::zero(f, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    first.set(i, w.at(i, piv) / second.at(piv));
  }

  std::optional<Fp> ratio;
  if (!w.row(1).is_zero()) {
    std::size_t j = w.at(1, 0).is_zero() ? 1 : 0;
    ratio = w.at(0, j) / w.at(1, j);
  }

  StateSpace qubit(f, 2);
  return ProductWitness{a, b, BipartiteState(qubit, qubit, flatten(w)),
                        ModalState(qubit, first).canonical_ray(),
                        ModalState(qubit, second).canonical_ray(), ratio};
}

}  // namespace

HidingMapSpec::HidingMapSpec(const FieldSpec& field, Mat m0, Mat m1)
    : field_(field), m0_(std::move(m0)), m1_(std::move(m1)) {
  check_2x2(field_, m0_, "first image");
  check_2x2(field_, m1_, "second image");
  Mat stacked(field_, 2, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    stacked.set(0, j, m0_.at(j / 2, j % 2));
    stacked.set(1, j, m1_.at(j / 2, j % 2));
  }
  Subspace relations = kernel(stacked.transpose());
  if (relations.dim() > 0) {
    throw DependentSetError(
        "image matrices are linearly dependent; the map is not injective",
        relations.basis().row(0).raw());
  }
}

HidingMapSpec HidingMapSpec::with_identity_first(const FieldSpec& field,
                                                 Mat m1) {
  return HidingMapSpec(field, Mat::identity(field, 2), std::move(m1));
}

bool HidingMapSpec::m0_is_identity() const {
  return m0_ == Mat::identity(field_, 2);
}

Mat HidingMapSpec::pencil(const Fp& a, const Fp& b) const {
  return m0_ * a + m1_ * b;
}

BipartiteState HidingMapSpec::image(const Vec& input) const {
  if (input.dim() != 2) {
    throw DomainError("hiding map input must be a single-qubit vector");
  }
  if (input.is_zero()) {
    throw DomainError("hiding map input must be nonzero");
  }
  StateSpace qubit(field_, 2);
  return BipartiteState(qubit, qubit,
                        flatten(pencil(input.at(0), input.at(1))));
}

std::vector<ProductWitness> product_state_locator(const HidingMapSpec& spec) {
  std::vector<ProductWitness> found;
  for (const auto& [a, b] : projective_line(spec.field())) {
    if (det(spec.pencil(a, b)).is_zero()) {
      found.push_back(make_witness(spec, a, b));
    }
  }
  return found;
}

Polynomial conditional_ratio_quadratic(const HidingMapSpec& spec) {
  if (!spec.m0_is_identity()) {
    throw DomainError(
        "conditional-ratio quadratic requires the first image to be the "
        "identity matrix");
  }
  const Mat& c = spec.m1();
  return Polynomial(spec.field(),
                    {-static_cast<std::int64_t>(c.at(0, 1).value()),
                     static_cast<std::int64_t>(c.at(1, 1).value()) -
                         static_cast<std::int64_t>(c.at(0, 0).value()),
                     static_cast<std::int64_t>(c.at(1, 0).value())});
}

HidingMapSpec build_hiding_map(const FieldSpec& field, const Polynomial& q) {
  if (q.degree() != std::optional<std::size_t>(2) || !q.is_monic()) {
    throw DomainError("hiding map requires a monic quadratic");
  }
  if (q.field() != field) {
    throw FieldMismatchError("quadratic is over a different field");
  }
  std::vector<Fp> roots = quadratic_roots(q);
  if (!roots.empty()) {
    throw DomainError("quadratic has root " +
                      std::to_string(roots.front().value()) + " over GF(" +
                      std::to_string(field.p()) +
                      "); a rootless quadratic is required");
  }
  Mat m1(field, 2, 2);
  m1.set(0, 1, -q.coeff(0));
  m1.set(1, 0, Fp(field, 1));
  m1.set(1, 1, -q.coeff(1));
  return HidingMapSpec::with_identity_first(field, std::move(m1));
}

HidingReport verify_hiding(const HidingMapSpec& spec) {
  const FieldSpec& f = spec.field();
  StateSpace qubit(f, 2);
  Subspace full = Subspace::full(f, 2);

  HidingReport report{true, 0, 0, true, true, std::nullopt};
  std::optional<Subspace> seen_a, seen_b;
  for (std::uint32_t a = 0; a < f.p(); ++a) {
    for (std::uint32_t b = 0; b < f.p(); ++b) {
      if (a == 0 && b == 0) continue;
      ++report.inputs_checked;
      BipartiteState out(qubit, qubit, flatten(spec.pencil(Fp(f, a), Fp(f, b))));
      Subspace ra = out.reduced_a();
      Subspace rb = out.reduced_b();
      if (out.is_entangled()) {
        ++report.entangled_count;
      } else if (!report.failure) {
        report.hides = false;
        report.failure = make_witness(spec, Fp(f, a), Fp(f, b));
      }
      if (ra != full || rb != full) report.reduced_full_both_sides = false;
      if (!seen_a) {
        seen_a = ra;
        seen_b = rb;
      } else if (ra != *seen_a || rb != *seen_b) {
        report.reduced_identical = false;
      }
    }
  }
  return report;
}

namespace {

using Cx = std::complex<double>;
using CxMat = std::array<std::array<Cx, 2>, 2>;

double frobenius(const CxMat& m) {
  double s = 0.0;
  for (const auto& row : m) {
    for (const Cx& e : row) s += std::norm(e);
  }
  return std::sqrt(s);
}

CxMat first_image(double lambda) {
  return CxMat{{{Cx(std::sqrt(lambda), 0.0), Cx(0.0, 0.0)},
                {Cx(0.0, 0.0), Cx(std::sqrt(1.0 - lambda), 0.0)}}};
}

CxMat combine(const Cx& alpha, const CxMat& m0, const Cx& beta,
              const CxMat& m1) {
  CxMat w;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      w[i][j] = alpha * m0[i][j] + beta * m1[i][j];
    }
  }
  return w;
}

Cx det2(const CxMat& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

/// sigma_min / sigma_max from the closed-form 2x2 singular values. The
/// small one is computed through |det| = sigma_min * sigma_max to avoid
/// cancellation near rank 1.
double singular_ratio(const CxMat& m) {
  double t = 0.0;
  for (const auto& row : m) {
    for (const Cx& e : row) t += std::norm(e);
  }
  double d = std::norm(det2(m));
  double disc = std::sqrt(std::max(0.0, t * t - 4.0 * d));
  double smax2 = (t + disc) / 2.0;
  if (smax2 == 0.0) return 0.0;
  double smin2 = d / smax2;
  return std::sqrt(smin2 / smax2);
}

struct RootCandidate {
  Cx alpha, beta;
  std::optional<Cx> z;
};

}  // namespace

AqtHidingInstance::AqtHidingInstance(
    double lambda_in, std::array<std::array<std::complex<double>, 2>, 2> c_in,
    double tolerance_in)
    : lambda(lambda_in), c(c_in), tolerance(tolerance_in) {
  if (!(tolerance > 0.0)) {
    throw DomainError("tolerance must be positive");
  }
  if (!(lambda > 0.0) || !(lambda < 1.0)) {
    throw DomainError("lambda must lie strictly between 0 and 1");
  }
  if (std::abs(frobenius(c) - 1.0) > tolerance) {
    throw DomainError("second image must have unit norm");
  }
}

AqtProductWitness aqt_unhide_demo(const AqtHidingInstance& inst) {
  CxMat m0 = first_image(inst.lambda);
  const CxMat& m1 = inst.c;

  // Independence as 4-vectors, via the normalized Gram determinant.
  Cx inner = 0.0;
  double n0 = 0.0, n1 = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      inner += std::conj(m0[i][j]) * m1[i][j];
      n0 += std::norm(m0[i][j]);
      n1 += std::norm(m1[i][j]);
    }
  }
  double gram = n0 * n1 - std::norm(inner);
  if (gram <= inst.tolerance * inst.tolerance * n0 * n1) {
    throw DomainError("image states must be linearly independent");
  }

  // det(alpha*M0 + beta*C) = q2 alpha^2 + q1 alpha beta + q0 beta^2.
  double sl = std::sqrt(inst.lambda);
  double sm = std::sqrt(1.0 - inst.lambda);
  Cx q2 = Cx(sl * sm, 0.0);
  Cx q1 = sl * m1[1][1] + sm * m1[0][0];
  Cx q0 = det2(m1);

  double scale = std::max({std::abs(q2), std::abs(q1), std::abs(q0)});
  double tiny = 1e-14 * scale;
  std::vector<RootCandidate> candidates;
  if (std::abs(q2) > tiny) {
    Cx disc = std::sqrt(q1 * q1 - 4.0 * q2 * q0);
    for (Cx z : {(-q1 + disc) / (2.0 * q2), (-q1 - disc) / (2.0 * q2)}) {
      candidates.push_back({z, Cx(1.0, 0.0), z});
    }
  } else if (std::abs(q1) > tiny) {
    candidates.push_back({Cx(1.0, 0.0), Cx(0.0, 0.0), std::nullopt});
    Cx z = -q0 / q1;
    candidates.push_back({z, Cx(1.0, 0.0), z});
  } else {
    candidates.push_back({Cx(1.0, 0.0), Cx(0.0, 0.0), std::nullopt});
    candidates.push_back({Cx(0.0, 0.0), Cx(1.0, 0.0), Cx(0.0, 0.0)});
  }

  // Smallest rank-1 residual wins; near-ties prefer the root with the
  // lexicographically larger (Re, Im).
  std::size_t best = 0;
  double best_residual = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    double r = singular_ratio(
        combine(candidates[i].alpha, m0, candidates[i].beta, m1));
    if (i == 0) {
      best_residual = r;
      continue;
    }
    bool better = r < best_residual - 1e-12;
    if (!better && r < best_residual + 1e-12 && candidates[i].z &&
        candidates[best].z) {
      Cx zi = *candidates[i].z, zb = *candidates[best].z;
      better = zi.real() > zb.real() ||
               (zi.real() == zb.real() && zi.imag() > zb.imag());
    }
    if (better) {
      best = i;
      best_residual = r;
    }
  }

  RootCandidate pick = candidates[best];
  double norm = std::sqrt(std::norm(pick.alpha) + std::norm(pick.beta));
  Cx alpha = pick.alpha / norm;
  Cx beta = pick.beta / norm;
  CxMat w = combine(alpha, m0, beta, m1);

  // Rank-1 factorization: the larger row carries the second factor.
  double r0 = std::norm(w[0][0]) + std::norm(w[0][1]);
  double r1 = std::norm(w[1][0]) + std::norm(w[1][1]);
  std::size_t lead = r1 > r0 ? 1 : 0;
  double lead_norm = std::sqrt(lead == 0 ? r0 : r1);
  std::array<Cx, 2> second{w[lead][0] / lead_norm, w[lead][1] / lead_norm};
  std::array<Cx, 2> first{};
  for (std::size_t i = 0; i < 2; ++i) {
    first[i] = w[i][0] * std::conj(second[0]) + w[i][1] * std::conj(second[1]);
  }

  return AqtProductWitness{
      alpha,
      beta,
      pick.z,
      {w[0][0], w[0][1], w[1][0], w[1][1]},
      first,
      second,
      singular_ratio(w),
      std::abs(det2(w))};
}

AqtHidingInstance random_aqt_instance(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> lam(0.1, 0.9);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double lambda = lam(gen);
  for (;;) {
    CxMat c;
    for (auto& row : c) {
      for (Cx& e : row) e = Cx(gauss(gen), gauss(gen));
    }
    double norm = frobenius(c);
    if (norm < 1e-6) continue;
    for (auto& row : c) {
      for (Cx& e : row) e /= norm;
    }
    // Resample the measure-zero case of c parallel to the first image.
    CxMat m0 = first_image(lambda);
    Cx inner = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        inner += std::conj(m0[i][j]) * c[i][j];
      }
    }
    if (1.0 - std::norm(inner) < 1e-12) continue;
    return AqtHidingInstance(lambda, c);
  }
}

}  // namespace mqt
