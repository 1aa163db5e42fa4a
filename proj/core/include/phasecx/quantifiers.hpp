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
#ifndef PHASECX_QUANTIFIERS_HPP_
#define PHASECX_QUANTIFIERS_HPP_

#include <optional>

#include <Eigen/Dense>

#include "phasecx/quadrature.hpp"
#include "phasecx/states.hpp"

namespace phasecx {

/// Mandel factor [<a^+2 a^2> - <a^+ a>^2] / <a^+ a>. Gaussian states use the
/// closed form, which depends on theta and xi. Throws Error(kZeroMeanPhoton).
double mandel_q(const CheckedState& state);

/// Same, from number-basis moments of a density matrix.
double mandel_q(const Eigen::MatrixXcd& rho);

struct NonclassicalDepth {
  double tau = 0.0;
  double tau_unfloored = 0.0;
};

/// Gaussian, Fock and classical families. Throws Error(kUnsupported).
NonclassicalDepth nonclassical_depth(const CheckedState& state);

/// N = <a^+ a> + 1/2 - tr(sqrt(rho) a^+ sqrt(rho) a). Closed forms for
/// Gaussian and Fock states, number-basis evaluation otherwise.
double skew_info_nonclassicality(const CheckedState& state);

double skew_info_nonclassicality(const Eigen::MatrixXcd& rho);

/// Integrated |W_0| minus one. Zero for Gaussian states; radial quadrature
/// split at the nodes of the Wigner function for Fock states.
/// Throws Error(kUnsupported).
QuadResult wigner_negativity(const CheckedState& state,
                             const QuadratureConfig& cfg = {});

struct FockNonGaussianity {
  double delta_a = 0.0;  // Hilbert-Schmidt distance
  double delta_b = 0.0;  // relative entropy
};

FockNonGaussianity nongaussianity_fock(int k);

struct QuantifierRow {
  std::optional<double> mandel_q;  // undefined for the vacuum
  std::optional<double> nonclassical_depth;
  std::optional<double> nonclassical_depth_unfloored;
  double skew_info = 0.0;
  std::optional<double> wigner_negativity;
  std::optional<double> delta_a;
  std::optional<double> delta_b;
};

/// Collects every quantifier defined for the state; entries that are
/// unsupported for the family are left empty.
QuantifierRow quantifier_row(const CheckedState& state,
                             const QuadratureConfig& cfg = {});

}  // namespace phasecx

#endif  // PHASECX_QUANTIFIERS_HPP_
