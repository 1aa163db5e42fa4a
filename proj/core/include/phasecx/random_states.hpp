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
#ifndef PHASECX_RANDOM_STATES_HPP_
#define PHASECX_RANDOM_STATES_HPP_

#include <cstdint>
#include <random>

#include "phasecx/states.hpp"

namespace phasecx {

/// Haar-random unitary (QR of a complex Ginibre matrix with the phases of
/// R's diagonal divided out).
Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng);

/// U diag(p) U^+ with U Haar-distributed and p drawn from the flat Dirichlet
/// distribution on the simplex. Reproducible for a fixed seed with one
/// standard library.
FockMatrix random_fock_matrix(int dim, std::mt19937_64& rng);

/// Same, with dim drawn uniformly from [min_dim, max_dim].
FockMatrix random_fock_matrix(int min_dim, int max_dim, std::mt19937_64& rng);

}  // namespace phasecx

#endif  // PHASECX_RANDOM_STATES_HPP_
