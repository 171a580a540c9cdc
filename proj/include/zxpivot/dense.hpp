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

#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace zxp {

using cplx = std::complex<double>;

/** Complex 2^m x 2^n matrix, row-major. The first qubit is the MSB. */
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

  static DenseMatrix identity(int qubits);
  static DenseMatrix scalar(cplx s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int out_qubits() const;
  int in_qubits() const;
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  cplx operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<cplx>& data() const { return data_; }

  double max_abs() const;
  double norm() const;
  bool is_zero(double tol = 1e-12) const { return max_abs() <= tol; }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix operator*(cplx s) const;
  DenseMatrix operator+(const DenseMatrix& rhs) const;
  DenseMatrix operator-(const DenseMatrix& rhs) const;
  DenseMatrix adjoint() const;
  DenseMatrix normalized() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

enum class EqMode { Exact, UpToPhase, UpToScalar };

struct EqResult {
  bool equal = false;
  /** c with a = c * b, when one exists. */
  std::optional<cplx> scalar;
};

constexpr double kDefaultTol = 1e-9;

/**
 * Compares a and b. Tolerances are relative to the larger max-magnitude
 * entry of the two. Two zero matrices are equal in every mode; a zero and
 * a nonzero matrix are never equal up to scalar. Throws PreconditionError on
 * shape mismatch.
 */
EqResult eq_up_to(const DenseMatrix& a, const DenseMatrix& b, EqMode mode,
                  double tol = kDefaultTol);

}  // namespace zxp
