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

#include "nvps/steady_state.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "nvps/errors.hpp"

namespace nvps {

int stationary_class_count(const Liouvillian& l) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  const int d = l.hilbert_dim();
  Graph g(static_cast<std::size_t>(d));
  const auto& m = l.matrix();
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(d), std::vector<bool>(static_cast<std::size_t>(d)));
  auto add = [&](Eigen::Index from, Eigen::Index to) {
    if (from == to || seen[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)]) return;
    seen[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] = true;
    boost::add_edge(static_cast<std::size_t>(from), static_cast<std::size_t>(to), g);
  };
  // Entry at row (a,b), column (c,e): amplitude moves c -> a and e -> b.
  for (Eigen::Index col = 0; col < m.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
      add(col % d, it.row() % d);
      add(col / d, it.row() / d);
    }
  }
  std::vector<int> component(static_cast<std::size_t>(d));
  const int count = boost::strong_components(g, component.data());
  std::vector<bool> has_exit(static_cast<std::size_t>(count), false);
  for (auto [e, end] = boost::edges(g); e != end; ++e) {
    const int cs = component[boost::source(*e, g)];
    const int ct = component[boost::target(*e, g)];
    if (cs != ct) has_exit[static_cast<std::size_t>(cs)] = true;
  }
  int closed = 0;
  for (bool exit : has_exit) closed += exit ? 0 : 1;
  return closed;
}

double steady_state_residual(const Liouvillian& l, const DensityOperator& rho) {
  const double r = l.apply(rho.vec()).norm();
  return l.norm() > 0.0 ? r / l.norm() : r;
}

DensityOperator steady_state(const Liouvillian& l, const SteadyStateOptions& options) {
  const int d = l.hilbert_dim();
  if (options.constraint_state < 0 || options.constraint_state >= d) {
    throw UsageError("constraint state outside the Hilbert space");
  }
  if (options.check_kernel) {
    const int classes = stationary_class_count(l);
    if (classes != 1) {
      throw DegenerateSteadyStateError("Liouvillian has " + std::to_string(classes) +
                                       " closed classes; the steady state is not unique");
    }
  }
  const Eigen::Index n = l.size();
  const Eigen::Index row = static_cast<Eigen::Index>(options.constraint_state) * (d + 1);
  // Every population row is a combination of the others (trace preservation),
  // so one of them can carry the normalisation instead.
  const double scale = l.norm() > 0.0 ? l.norm() / std::sqrt(static_cast<double>(n)) : 1.0;
  SparseMatrix a = l.matrix();
  a.prune([row](Eigen::Index r, Eigen::Index, const std::complex<double>&) { return r != row; });
  SparseMatrix trace_row(n, n);
  std::vector<Eigen::Triplet<std::complex<double>>> t;
  for (int i = 0; i < d; ++i) t.emplace_back(row, static_cast<Eigen::Index>(i) * (d + 1), scale);
  trace_row.setFromTriplets(t.begin(), t.end());
  a += trace_row;
  a.makeCompressed();

  LiouvillianLU lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success) {
    throw DegenerateSteadyStateError("steady-state system is singular: " + lu.lastErrorMessage());
  }
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
  rhs(row) = scale;
  const Eigen::VectorXcd x = lu.solve(rhs);
  if (!x.allFinite()) throw DegenerateSteadyStateError("steady-state solve produced non-finite values");

  DensityOperator rho = DensityOperator::from_vector(x);
  const std::complex<double> tr = rho.trace();
  rho = DensityOperator(rho.matrix() / tr);
  const double residual = steady_state_residual(l, rho);
  if (residual > options.residual_tolerance) {
    std::ostringstream msg;
    msg << "steady-state residual " << residual << " exceeds " << options.residual_tolerance
        << " (relative to ||L||)";
    throw SolverError(msg.str());
  }
  return rho;
}

}  // namespace nvps
