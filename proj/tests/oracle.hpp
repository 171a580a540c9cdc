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

// Dense reference values built directly from textbook definitions. Nothing
// here calls the library's interpreter, so tests can compare against it.

#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "zxpivot/dense.hpp"
#include "zxpivot/graph.hpp"

namespace zxp::oracle {

inline cplx expi(double a) { return std::polar(1.0, a); }

inline DenseMatrix mat(std::size_t r, std::size_t c, std::vector<cplx> v) {
  return DenseMatrix(r, c, std::move(v));
}

inline DenseMatrix hadamard() {
  const double s = 1 / std::sqrt(2.0);
  return mat(2, 2, {s, s, s, -s});
}
inline DenseMatrix pauli_z() { return mat(2, 2, {1, 0, 0, -1}); }
inline DenseMatrix pauli_x() { return mat(2, 2, {0, 1, 1, 0}); }
inline DenseMatrix ident() { return mat(2, 2, {1, 0, 0, 1}); }

inline DenseMatrix kron2(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

inline DenseMatrix power(const DenseMatrix& m, int n) {
  DenseMatrix r = DenseMatrix::scalar(1);
  for (int i = 0; i < n; ++i) r = kron2(r, m);
  return r;
}

/** Z spider: 1 on all-zero, e^{i alpha} on all-one, 0 elsewhere. */
inline DenseMatrix z_spider(int in, int out, double alpha) {
  DenseMatrix m(std::size_t{1} << out, std::size_t{1} << in);
  m(0, 0) += 1;
  m(m.rows() - 1, m.cols() - 1) += expi(alpha);
  return m;
}

/** X spider as the H-conjugate of the Z spider. */
inline DenseMatrix x_spider(int in, int out, double alpha) {
  return power(hadamard(), out) * z_spider(in, out, alpha) *
         power(hadamard(), in);
}

/** Single-qubit op on qubit q of n (qubit 0 is the most significant). */
inline DenseMatrix on_qubit(const DenseMatrix& op, int q, int n) {
  DenseMatrix r = DenseMatrix::scalar(1);
  for (int i = 0; i < n; ++i) r = kron2(r, i == q ? op : ident());
  return r;
}

inline DenseMatrix plus_state(int n) {
  DenseMatrix v(std::size_t{1} << n, 1);
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) = std::pow(2.0, -n / 2.0);
  return v;
}

/** CZ along every edge applied to |+>^n, qubits in sorted label order. */
inline DenseMatrix graph_state(const SimpleGraph& g) {
  std::vector<std::string> labels = g.vertices();
  const int n = static_cast<int>(labels.size());
  std::map<std::string, int> q;
  for (int i = 0; i < n; ++i) q[labels[i]] = i;
  DenseMatrix v = plus_state(n);
  for (const auto& [a, b] : g.edges())
    for (std::size_t x = 0; x < v.rows(); ++x) {
      bool ba = (x >> (n - 1 - q[a])) & 1, bb = (x >> (n - 1 - q[b])) & 1;
      if (ba && bb) v(x, 0) = -v(x, 0);
    }
  return v;
}

/** a = c b for some nonzero c; two zero matrices count as proportional. */
inline bool proportional(const DenseMatrix& a, const DenseMatrix& b,
                         double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  double na = a.max_abs(), nb = b.max_abs();
  if (na < tol || nb < tol) return na < tol && nb < tol;
  std::size_t k = 0;
  for (std::size_t i = 0; i < b.data().size(); ++i)
    if (std::abs(b.data()[i]) > std::abs(b.data()[k])) k = i;
  cplx c = a.data()[k] / b.data()[k];
  for (std::size_t i = 0; i < a.data().size(); ++i)
    if (std::abs(a.data()[i] - c * b.data()[i]) > tol * na) return false;
  return true;
}

/**
 * Equal after normalisation, up to a global phase. For nonzero vectors this
 * is the same as being proportional.
 */
inline bool same_ray(const DenseMatrix& a, const DenseMatrix& b,
                     double tol = 1e-9) {
  return proportional(a, b, tol);
}

/** The c with a = c b, assuming proportional(a, b). */
inline cplx ratio(const DenseMatrix& a, const DenseMatrix& b) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < b.data().size(); ++i)
    if (std::abs(b.data()[i]) > std::abs(b.data()[k])) k = i;
  return a.data()[k] / b.data()[k];
}

/** G*v from the definition: complement the neighbourhood of v. */
inline SimpleGraph lc(const SimpleGraph& g, const std::string& v) {
  SimpleGraph r = g;
  std::vector<std::string> n(g.neighbours(v).begin(), g.neighbours(v).end());
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j) r.toggle_edge(n[i], n[j]);
  return r;
}

}  // namespace zxp::oracle
