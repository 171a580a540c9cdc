// Copyright 2026 The zxpivot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxpivot/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "zxpivot/errors.hpp"

namespace zxp {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw PreconditionError("matrix data does not match its shape");
}

DenseMatrix DenseMatrix::identity(int qubits) {
  std::size_t n = std::size_t{1} << qubits;
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::scalar(cplx s) { return DenseMatrix(1, 1, {s}); }

int DenseMatrix::out_qubits() const {
  return std::countr_zero(static_cast<unsigned long long>(rows_));
}

int DenseMatrix::in_qubits() const {
  return std::countr_zero(static_cast<unsigned long long>(cols_));
}

double DenseMatrix::max_abs() const {
  double m = 0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double DenseMatrix::norm() const {
  double s = 0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw PreconditionError("matrix product shape mismatch");
  DenseMatrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      cplx a = (*this)(i, k);
      if (a == cplx(0)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) r(i, j) += a * rhs(k, j);
    }
  return r;
}

DenseMatrix DenseMatrix::operator*(cplx s) const {
  DenseMatrix r = *this;
  for (cplx& z : r.data_) z *= s;
  return r;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw PreconditionError("matrix sum shape mismatch");
  DenseMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += rhs.data_[i];
  return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
  return *this + rhs * cplx(-1);
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

DenseMatrix DenseMatrix::normalized() const {
  double n = norm();
  if (n == 0) return *this;
  return *this * cplx(1.0 / n);
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      cplx x = a(i, j);
      if (x == cplx(0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

EqResult eq_up_to(const DenseMatrix& a, const DenseMatrix& b, EqMode mode,
                  double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw PreconditionError("eq_up_to: shape mismatch");
  double ma = a.max_abs(), mb = b.max_abs();
  double scale = std::max(ma, mb);
  // Both sides at rounding-noise level count as the zero map.
  if (scale <= 1e-12) return {true, cplx(1)};
  const auto& da = a.data();
  const auto& db = b.data();
  if (mode == EqMode::Exact) {
    for (std::size_t i = 0; i < da.size(); ++i)
      if (std::abs(da[i] - db[i]) > tol * scale) return {false, std::nullopt};
    return {true, cplx(1)};
  }
  if (ma <= tol * scale || mb <= tol * scale) return {false, std::nullopt};
  std::size_t k = 0;
  for (std::size_t i = 0; i < db.size(); ++i)
    if (std::abs(db[i]) > std::abs(db[k])) k = i;
  cplx c = da[k] / db[k];
  for (std::size_t i = 0; i < da.size(); ++i)
    if (std::abs(da[i] - c * db[i]) > tol * ma) return {false, std::nullopt};
  if (mode == EqMode::UpToPhase && std::abs(std::abs(c) - 1.0) > tol)
    return {false, std::nullopt};
  return {true, c};
}

}  // namespace zxp
