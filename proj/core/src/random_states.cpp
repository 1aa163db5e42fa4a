// Copyright 2026 The phasecx Authors
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
//
#include "phasecx/random_states.hpp"

#include <cmath>

#include "phasecx/errors.hpp"

namespace phasecx {

Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw Error(ErrorCode::kBadParameter, "dimension must be positive");
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd z(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) z(i, j) = Complex{gauss(rng), gauss(rng)};
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

FockMatrix random_fock_matrix(int dim, std::mt19937_64& rng) {
  const Eigen::MatrixXcd u = haar_unitary(dim, rng);
  std::exponential_distribution<double> expo(1.0);  // Gamma(1): flat Dirichlet
  Eigen::VectorXd p(dim);
  for (int i = 0; i < dim; ++i) p(i) = expo(rng);
  p /= p.sum();
  FockMatrix out;
  out.rho = u * p.cast<Complex>().asDiagonal() * u.adjoint();
  out.rho = 0.5 * (out.rho + out.rho.adjoint()).eval();
  return out;
}

FockMatrix random_fock_matrix(int min_dim, int max_dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(min_dim, max_dim);
  return random_fock_matrix(pick(rng), rng);
}

}  // namespace phasecx
