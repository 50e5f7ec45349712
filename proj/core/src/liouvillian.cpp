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

#include "nvps/liouvillian.hpp"

#include <complex>

#include "nvps/errors.hpp"
#include "nvps/units.hpp"

namespace nvps {

namespace {

using cplx = std::complex<double>;
using Triplet = Eigen::Triplet<cplx>;

// Appends coefficient * (B^T (x) A), the matrix of X -> A X B.
void add_sandwich(std::vector<Triplet>& out, cplx coefficient, const SparseMatrix& a,
                  const SparseMatrix& b) {
  const Eigen::Index d = a.rows();
  for (Eigen::Index ka = 0; ka < a.outerSize(); ++ka) {
    for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia) {
      for (Eigen::Index kb = 0; kb < b.outerSize(); ++kb) {
        for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib) {
          // A(i,k) B(l,j) -> row j*d + i, column l*d + k.
          const Eigen::Index i = ia.row(), k = ia.col(), l = ib.row(), j = ib.col();
          out.emplace_back(j * d + i, l * d + k, coefficient * ia.value() * ib.value());
        }
      }
    }
  }
}

SparseMatrix identity(Eigen::Index d) {
  SparseMatrix id(d, d);
  id.setIdentity();
  return id;
}

}  // namespace

Liouvillian::Liouvillian(SparseMatrix matrix, int hilbert_dim)
    : matrix_(std::move(matrix)), dim_(hilbert_dim) {
  const Eigen::Index n = static_cast<Eigen::Index>(hilbert_dim) * hilbert_dim;
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw AssemblyError("Liouvillian shape does not match the Hilbert dimension");
  }
  matrix_.makeCompressed();
  norm_ = matrix_.norm();
}

Liouvillian Liouvillian::build(const Eigen::MatrixXcd& hamiltonian,
                               const std::vector<CollapseChannel>& channels) {
  const Eigen::Index d = hamiltonian.rows();
  if (hamiltonian.cols() != d) throw AssemblyError("Hamiltonian must be square");
  const SparseMatrix h = hamiltonian.sparseView();
  const SparseMatrix id = identity(d);
  std::vector<Triplet> t;
  const cplx minus_i_over_hbar(0.0, -1.0 / units::kHbar);
  add_sandwich(t, minus_i_over_hbar, h, id);
  add_sandwich(t, -minus_i_over_hbar, id, h);
  for (const auto& ch : channels) {
    if (ch.op.rows() != d || ch.op.cols() != d) {
      throw AssemblyError("collapse operator " + ch.label + " has the wrong dimension");
    }
    if (!(ch.rate >= 0.0)) throw AssemblyError("collapse rate of " + ch.label + " must be >= 0");
    if (ch.rate == 0.0) continue;
    const SparseMatrix adj = ch.op.adjoint();
    const SparseMatrix ada = adj * ch.op;
    add_sandwich(t, ch.rate, ch.op, adj);
    add_sandwich(t, -0.5 * ch.rate, ada, id);
    add_sandwich(t, -0.5 * ch.rate, id, ada);
  }
  SparseMatrix l(d * d, d * d);
  l.setFromTriplets(t.begin(), t.end());
  l.prune(cplx(0.0, 0.0));
  return Liouvillian(std::move(l), static_cast<int>(d));
}

SparseMatrix Liouvillian::diagonal_commutator(const Eigen::VectorXd& diag) {
  const Eigen::Index d = diag.size();
  std::vector<Triplet> t;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      const double delta = diag(i) - diag(j);
      if (delta != 0.0) t.emplace_back(j * d + i, j * d + i, cplx(0.0, -delta / units::kHbar));
    }
  }
  SparseMatrix m(d * d, d * d);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

DensityOperator Liouvillian::apply(const DensityOperator& rho) const {
  if (rho.dim() != dim_) throw UsageError("density operator dimension mismatch");
  const Eigen::VectorXcd v = matrix_ * rho.vec();
  return DensityOperator(Eigen::Map<const Eigen::MatrixXcd>(v.data(), dim_, dim_));
}

Liouvillian Liouvillian::plus(const SparseMatrix& term, double coefficient) const {
  if (term.rows() != matrix_.rows() || term.cols() != matrix_.cols()) {
    throw AssemblyError("Liouvillian term has the wrong shape");
  }
  return Liouvillian(SparseMatrix(matrix_ + coefficient * term), dim_);
}

double Liouvillian::trace_annihilation_error() const {
  Eigen::VectorXcd id = Eigen::VectorXcd::Zero(matrix_.rows());
  for (int i = 0; i < dim_; ++i) id(static_cast<Eigen::Index>(i) * (dim_ + 1)) = 1.0;
  const Eigen::VectorXcd row = matrix_.transpose() * id;
  return norm_ > 0.0 ? row.norm() / norm_ : row.norm();
}

}  // namespace nvps
