// Copyright 2026 The nvps Authors
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

#ifndef NVPS_LIOUVILLIAN_HPP
#define NVPS_LIOUVILLIAN_HPP

#include <vector>

#include <Eigen/Dense>
#include <Eigen/OrderingMethods>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "nvps/collapse.hpp"
#include "nvps/density_operator.hpp"

namespace nvps {

/// Sparse LU used for all Liouvillian-shaped systems. The natural ordering
/// keeps the fill lowest for the orbital-major basis.
using LiouvillianLU = Eigen::SparseLU<SparseMatrix, Eigen::NaturalOrdering<int>>;

/// Lindblad generator acting on column-stacked rho, vec(A X B) = (B^T (x) A) vec X.
/// Stored sparse; dense() gives the full dim^2 x dim^2 matrix.
class Liouvillian {
 public:
  Liouvillian(SparseMatrix matrix, int hilbert_dim);

  /// H in joules, rates in 1/s.
  static Liouvillian build(const Eigen::MatrixXcd& hamiltonian,
                           const std::vector<CollapseChannel>& channels);

  /// Superoperator -(i/hbar)[diag(d), .] for a diagonal Hamiltonian term d (J).
  static SparseMatrix diagonal_commutator(const Eigen::VectorXd& d);

  int hilbert_dim() const { return dim_; }
  Eigen::Index size() const { return matrix_.rows(); }
  const SparseMatrix& matrix() const { return matrix_; }
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(matrix_); }
  /// Frobenius norm.
  double norm() const { return norm_; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return matrix_ * v; }
  DensityOperator apply(const DensityOperator& rho) const;

  /// L + coefficient * term; the term must have the same shape.
  Liouvillian plus(const SparseMatrix& term, double coefficient) const;

  /// ||vec(1)^T L|| / ||L||.
  double trace_annihilation_error() const;

 private:
  SparseMatrix matrix_;
  int dim_;
  double norm_;
};

}  // namespace nvps

#endif  // NVPS_LIOUVILLIAN_HPP
