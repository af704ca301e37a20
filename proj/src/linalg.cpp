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

#include "mqt/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "mqt/error.hpp"

namespace mqt {

namespace {

void check_field(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) {
    throw FieldMismatchError("operands live in different fields: GF(" +
                             std::to_string(a.p()) + ") vs GF(" +
                             std::to_string(b.p()) + ")");
  }
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

}  // namespace

Vec::Vec(const FieldSpec& field, const std::vector<std::int64_t>& entries)
    : field_(field) {
  if (entries.empty()) {
    throw DomainError("vector dimension must be at least 1");
  }
  e_.reserve(entries.size());
  for (std::int64_t v : entries) {
    e_.push_back(field_.reduce(v));
  }
}

Vec Vec::zero(const FieldSpec& field, std::size_t dim) {
  if (dim == 0) {
    throw DomainError("vector dimension must be at least 1");
  }
  return Vec(field, std::vector<std::uint32_t>(dim, 0));
}

Vec Vec::unit(const FieldSpec& field, std::size_t dim, std::size_t i) {
  Vec v = zero(field, dim);
  if (i >= dim) {
    throw DomainError("unit vector index out of range");
  }
  v.e_[i] = 1;
  return v;
}

void Vec::set(std::size_t i, const Fp& v) {
  check_field(field_, v.field());
  e_.at(i) = v.value();
}

bool Vec::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(),
                     [](std::uint32_t x) { return x == 0; });
}

Vec Vec::operator+(const Vec& o) const {
  check_field(field_, o.field_);
  if (dim() != o.dim()) {
    throw DomainError("vector dimensions differ");
  }
  std::vector<std::uint32_t> r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    r[i] = addmod(e_[i], o.e_[i], field_.p());
  }
  return Vec(field_, std::move(r));
}

Vec Vec::operator-(const Vec& o) const {
  check_field(field_, o.field_);
  if (dim() != o.dim()) {
    throw DomainError("vector dimensions differ");
  }
  std::vector<std::uint32_t> r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    r[i] = submod(e_[i], o.e_[i], field_.p());
  }
  return Vec(field_, std::move(r));
}

Vec Vec::operator*(const Fp& s) const {
  check_field(field_, s.field());
  std::vector<std::uint32_t> r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    r[i] = mulmod(e_[i], s.value(), field_.p());
  }
  return Vec(field_, std::move(r));
}

bool Vec::parallel_to(const Vec& o) const {
  check_field(field_, o.field_);
  if (dim() != o.dim() || is_zero() || o.is_zero()) {
    return false;
  }
  // Find the scalar from the first nonzero entry, then check everywhere.
  std::size_t k = 0;
  while (e_[k] == 0 && o.e_[k] == 0) {
    ++k;
  }
  if (e_[k] == 0 || o.e_[k] == 0) {
    return false;
  }
  Fp scale = Fp(field_, o.e_[k]) / Fp(field_, e_[k]);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (mulmod(e_[i], scale.value(), field_.p()) != o.e_[i]) {
      return false;
    }
  }
  return true;
}

Mat::Mat(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {
  if (cols == 0) {
    throw DomainError("matrix must have at least one column");
  }
}

Mat::Mat(const FieldSpec& field, std::size_t rows, std::size_t cols,
         const std::vector<std::int64_t>& entries)
    : Mat(field, rows, cols) {
  if (entries.size() != rows * cols) {
    throw DomainError("matrix entry count does not match shape");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    e_[i] = field_.reduce(entries[i]);
  }
}

Mat Mat::identity(const FieldSpec& field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.e_[i * n + i] = 1;
  }
  return m;
}

Mat Mat::from_rows(const FieldSpec& field, std::span<const Vec> rows,
                   std::size_t cols) {
  Mat m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    check_field(field, rows[r].field());
    if (rows[r].dim() != cols) {
      throw DomainError("row dimension does not match column count");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m.e_[r * cols + c] = rows[r].raw()[c];
    }
  }
  return m;
}

void Mat::set(std::size_t r, std::size_t c, const Fp& v) {
  check_field(field_, v.field());
  e_.at(r * cols_ + c) = v.value();
}

Vec Mat::row(std::size_t r) const {
  std::vector<std::uint32_t> out(e_.begin() + r * cols_,
                                 e_.begin() + (r + 1) * cols_);
  return Vec(field_, std::move(out));
}

Vec Mat::col(std::size_t c) const {
  if (rows_ == 0) {
    throw DomainError("cannot take a column of an empty matrix");
  }
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = e_[r * cols_ + c];
  }
  return Vec(field_, std::move(out));
}

Mat Mat::transpose() const {
  if (rows_ == 0) {
    throw DomainError("cannot transpose an empty matrix");
  }
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t.e_[c * rows_ + r] = e_[r * cols_ + c];
    }
  }
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  check_field(field_, o.field_);
  if (cols_ != o.rows_) {
    throw DomainError("matrix shapes do not compose");
  }
  Mat r(field_, rows_, o.cols_);
  const std::uint64_t p = field_.p();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = e_[i * cols_ + k];
      if (a == 0) {
        continue;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.e_[i * o.cols_ + j] = static_cast<std::uint32_t>(
            (r.e_[i * o.cols_ + j] + a * o.e_[k * o.cols_ + j]) % p);
      }
    }
  }
  return r;
}

Vec Mat::operator*(const Vec& v) const {
  check_field(field_, v.field());
  if (cols_ != v.dim()) {
    throw DomainError("matrix and vector shapes do not compose");
  }
  if (rows_ == 0) {
    throw DomainError("cannot apply an empty matrix to a vector");
  }
  std::vector<std::uint32_t> out(rows_, 0);
  const std::uint64_t p = field_.p();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += static_cast<std::uint64_t>(e_[i * cols_ + j]) * v.raw()[j];
    }
    out[i] = static_cast<std::uint32_t>(acc % p);
  }
  return Vec(field_, std::move(out));
}

Mat Mat::operator+(const Mat& o) const {
  check_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DomainError("matrix shapes differ");
  }
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] = addmod(e_[i], o.e_[i], field_.p());
  }
  return r;
}

Mat Mat::operator*(const Fp& s) const {
  check_field(field_, s.field());
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] = mulmod(e_[i], s.value(), field_.p());
  }
  return r;
}

bool Mat::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(),
                     [](std::uint32_t x) { return x == 0; });
}

RrefResult rref(const Mat& m) {
  Mat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a.at(piv, c).is_zero()) {
      ++piv;
    }
    if (piv == rows) {
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) {
        Fp tmp = a.at(r, j);
        a.set(r, j, a.at(piv, j));
        a.set(piv, j, tmp);
      }
    }
    Fp inv = a.at(r, c).inverse();
    for (std::size_t j = 0; j < cols; ++j) {
      a.set(r, j, a.at(r, j) * inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) {
        continue;
      }
      Fp factor = a.at(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        a.set(i, j, a.at(i, j) - factor * a.at(r, j));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Fp det(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw DomainError("determinant requires a square matrix");
  }
  Mat a = m;
  const FieldSpec& f = a.field();
  const std::size_t n = a.rows();
  Fp result(f, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c).is_zero()) {
      ++piv;
    }
    if (piv == n) {
      return Fp(f, 0);
    }
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        Fp tmp = a.at(c, j);
        a.set(c, j, a.at(piv, j));
        a.set(piv, j, tmp);
      }
      result = -result;
    }
    result = result * a.at(c, c);
    Fp inv = a.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) {
        continue;
      }
      Fp factor = a.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        a.set(i, j, a.at(i, j) - factor * a.at(c, j));
      }
    }
  }
  return result;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw DomainError("inverse requires a square matrix");
  }
  const std::size_t n = m.rows();
  const FieldSpec& f = m.field();
  // Row-reduce [m | I] and read off the right block.
  Mat aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      aug.set(i, j, m.at(i, j));
    }
    aug.set(i, n + i, Fp(f, 1));
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_cols[n - 1] != n - 1) {
    return std::nullopt;
  }
  Mat inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inv.set(i, j, red.rref.at(i, n + j));
    }
  }
  return inv;
}

Subspace Subspace::span_of(const Mat& generators) {
  RrefResult red = rref(generators);
  Mat basis(generators.field(), red.rank, generators.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    for (std::size_t j = 0; j < generators.cols(); ++j) {
      basis.set(i, j, red.rref.at(i, j));
    }
  }
  return Subspace(generators.cols(), std::move(basis));
}

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient) {
  return Subspace(ambient, Mat(field, 0, ambient));
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  return Subspace(ambient, Mat::identity(field, ambient));
}

Vec Subspace::reduce(const Vec& v) const {
  check_field(field(), v.field());
  if (v.dim() != ambient_) {
    throw DomainError("vector dimension does not match ambient space");
  }
  Vec r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // Pivot column of row i is the first nonzero entry; basis is RREF so the
    // pivot value is 1.
    std::size_t pc = 0;
    while (basis_.at(i, pc).is_zero()) {
      ++pc;
    }
    Fp coeff = r.at(pc);
    if (!coeff.is_zero()) {
      r = r - basis_.row(i) * coeff;
    }
  }
  return r;
}

Subspace kernel(const Mat& m) {
  RrefResult red = rref(m);
  const std::size_t n = m.cols();
  const FieldSpec& f = m.field();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : red.pivot_cols) {
    is_pivot[c] = true;
  }
  std::vector<Vec> gens;
  for (std::size_t free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[free_c]) {
      continue;
    }
    Vec g = Vec::zero(f, n);
    g.set(free_c, Fp(f, 1));
    for (std::size_t i = 0; i < red.rank; ++i) {
      g.set(red.pivot_cols[i], -red.rref.at(i, free_c));
    }
    gens.push_back(std::move(g));
  }
  if (gens.empty()) {
    return Subspace::zero(f, n);
  }
  return Subspace::span_of(Mat::from_rows(f, gens, n));
}

AffineSolutionSet solve(const Mat& m, const Vec& y) {
  check_field(m.field(), y.field());
  if (m.rows() != y.dim()) {
    throw DomainError("right-hand side dimension does not match matrix");
  }
  const FieldSpec& f = m.field();
  const std::size_t n = m.cols();
  Mat aug(f, m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      aug.set(i, j, m.at(i, j));
    }
    aug.set(i, n, y.at(i));
  }
  RrefResult red = rref(aug);
  // Infeasible iff some pivot lands in the augmented column.
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivot_cols[i] == n) {
      return AffineSolutionSet{false, std::nullopt, kernel(m),
                               red.rref.row(i)};
    }
  }
  Vec particular = Vec::zero(f, n);
  for (std::size_t i = 0; i < red.rank; ++i) {
    particular.set(red.pivot_cols[i], red.rref.at(i, n));
  }
  return AffineSolutionSet{true, std::move(particular), kernel(m),
                           std::nullopt};
}

Mat invertible_completion(std::span<const Vec> inputs,
                          std::span<const Vec> outputs) {
  if (inputs.size() != outputs.size()) {
    throw DomainError("input and output lists must have equal length");
  }
  if (inputs.empty()) {
    throw DomainError("invertible completion needs at least one pair");
  }
  const FieldSpec& f = inputs[0].field();
  const std::size_t n = inputs[0].dim();
  for (const Vec& v : inputs) {
    check_field(f, v.field());
    if (v.dim() != n) {
      throw DomainError("input vectors must share a dimension");
    }
  }
  for (const Vec& v : outputs) {
    check_field(f, v.field());
    if (v.dim() != n) {
      throw DomainError("output vectors must live in the same dimension");
    }
  }
  if (inputs.size() > n) {
    throw DomainError("more pairs than the dimension allows");
  }

  auto check_independent = [&](std::span<const Vec> vs, const char* side) {
    Mat rows = Mat::from_rows(f, vs, n);
    RrefResult red = rref(rows);
    if (red.rank == vs.size()) {
      return;
    }
    // Find the first vector inside the span of its predecessors, and report
    // the minimal prefix dependency.
    for (std::size_t k = 1; k < vs.size(); ++k) {
      Mat prefix = Mat::from_rows(f, vs.subspan(0, k), n);
      Subspace sp = Subspace::span_of(prefix);
      if (sp.contains(vs[k])) {
        std::vector<std::uint32_t> witness;
        for (std::size_t i = 0; i <= k; ++i) {
          witness.push_back(static_cast<std::uint32_t>(i));
        }
        throw DependentSetError(std::string(side) +
                                    " vectors are linearly dependent",
                                std::move(witness));
      }
    }
    assert(false && "rank deficit without a prefix dependency");
    throw DependentSetError(std::string(side) +
                                " vectors are linearly dependent",
                            {});
  };
  check_independent(inputs, "input");
  check_independent(outputs, "output");

  // Extend each list to a basis with the first standard basis vectors not
  // already in the span, pairing the extensions in order.
  auto extend = [&](std::span<const Vec> vs) {
    std::vector<Vec> full(vs.begin(), vs.end());
    Subspace sp = Subspace::span_of(Mat::from_rows(f, vs, n));
    for (std::size_t i = 0; i < n && full.size() < n; ++i) {
      Vec e = Vec::unit(f, n, i);
      if (!sp.contains(e)) {
        full.push_back(e);
        sp = Subspace::span_of(Mat::from_rows(f, full, n));
      }
    }
    return full;
  };
  std::vector<Vec> in_basis = extend(inputs);
  std::vector<Vec> out_basis = extend(outputs);
  assert(in_basis.size() == n && out_basis.size() == n);

  // T = B_out * B_in^{-1} where the bases are column matrices.
  Mat b_in = Mat::from_rows(f, in_basis, n).transpose();
  Mat b_out = Mat::from_rows(f, out_basis, n).transpose();
  std::optional<Mat> b_in_inv = inverse(b_in);
  assert(b_in_inv.has_value());
  return b_out * *b_in_inv;
}

Vec kron(const Vec& a, const Vec& b) {
  check_field(a.field(), b.field());
  Vec r = Vec::zero(a.field(), a.dim() * b.dim());
  const std::uint32_t p = a.field().p();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      r.set(i * b.dim() + j,
            Fp(a.field(), mulmod(a.raw()[i], b.raw()[j], p)));
    }
  }
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  check_field(a.field(), b.field());
  if (a.rows() == 0 || b.rows() == 0) {
    throw DomainError("Kronecker factors must be nonempty");
  }
  Mat r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      Fp v = a.at(ar, ac);
      if (v.is_zero()) {
        continue;
      }
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          r.set(ar * b.rows() + br, ac * b.cols() + bc, v * b.at(br, bc));
        }
      }
    }
  }
  return r;
}

Vec tensor_power(const Vec& v, std::size_t n) {
  if (n == 0) {
    throw DomainError("tensor power requires at least one factor");
  }
  Vec r = v;
  for (std::size_t i = 1; i < n; ++i) {
    r = kron(r, v);
  }
  return r;
}

}  // namespace mqt
