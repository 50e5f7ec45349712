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

#include "nvps/density_operator.hpp"

#include <cmath>
#include <sstream>

#include "nvps/errors.hpp"

namespace nvps {

DensityOperator::DensityOperator(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw UsageError("density operator must be a non-empty square matrix");
  }
}

DensityOperator DensityOperator::from_vector(const Eigen::VectorXcd& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size()) throw UsageError("vectorised density operator has non-square length");
  Eigen::MatrixXcd m = Eigen::Map<const Eigen::MatrixXcd>(v.data(), d, d);
  Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  return DensityOperator(std::move(sym));
}

DensityOperator DensityOperator::pure(int dim, int index) {
  if (index < 0 || index >= dim) throw RangeError("basis index outside the Hilbert space");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::mixture(int dim, std::span<const int> indices) {
  if (indices.empty()) throw UsageError("mixture needs at least one basis state");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i : indices) {
    if (i < 0 || i >= dim) throw RangeError("basis index outside the Hilbert space");
    m(i, i) += 1.0 / static_cast<double>(indices.size());
  }
  return DensityOperator(std::move(m));
}

Eigen::VectorXcd DensityOperator::vec() const {
  return Eigen::Map<const Eigen::VectorXcd>(rho_.data(), rho_.size());
}

double DensityOperator::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (rho_ + rho_.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double DensityOperator::hermiticity_error() const { return (rho_ - rho_.adjoint()).norm(); }

void DensityOperator::validate(double tolerance) const {
  std::ostringstream msg;
  if (!rho_.allFinite()) {
    msg << "density operator has non-finite entries";
  } else if (hermiticity_error() > tolerance) {
    msg << "density operator not Hermitian (||rho - rho^H|| = " << hermiticity_error() << ")";
  } else if (std::abs(trace() - 1.0) > tolerance) {
    msg << "density operator trace " << trace() << " != 1";
  } else if (min_eigenvalue() < -tolerance) {
    msg << "density operator has eigenvalue " << min_eigenvalue() << " < " << -tolerance;
  } else {
    return;
  }
  throw NumericError(msg.str());
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) throw UsageError("trace distance needs equal dimensions");
  const Eigen::MatrixXcd d = a.matrix() - b.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (d + d.adjoint()), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace nvps
