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

#ifndef NVPS_DENSITY_OPERATOR_HPP
#define NVPS_DENSITY_OPERATOR_HPP

#include <span>

#include <Eigen/Dense>

namespace nvps {

/// Dense density matrix. Construction does not check physicality; call
/// validate() where the invariants matter.
class DensityOperator {
 public:
  explicit DensityOperator(Eigen::MatrixXcd rho);

  /// Inverse of vec(): column-stacked vector of length dim^2, symmetrised.
  static DensityOperator from_vector(const Eigen::VectorXcd& v);
  static DensityOperator pure(int dim, int index);
  /// Equal-weight mixture of basis states.
  static DensityOperator mixture(int dim, std::span<const int> indices);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  Eigen::VectorXcd vec() const;
  double population(int i) const { return rho_(i, i).real(); }
  std::complex<double> trace() const { return rho_.trace(); }
  double min_eigenvalue() const;
  double hermiticity_error() const;

  /// NumericError unless Hermitian, unit trace and eigenvalues >= -tolerance.
  void validate(double tolerance = 1e-9) const;

 private:
  Eigen::MatrixXcd rho_;
};

/// (1/2) sum |eig(a - b)|.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

}  // namespace nvps

#endif  // NVPS_DENSITY_OPERATOR_HPP
