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
#ifndef PHASECX_PHASESPACE_HPP_
#define PHASECX_PHASESPACE_HPP_

#include <memory>

#include "phasecx/states.hpp"

namespace phasecx {

struct Gradient {
  double dx = 0.0;
  double dy = 0.0;

  double norm2() const { return dx * dx + dy * dy; }
};

struct FieldSample {
  double value = 0.0;
  Gradient grad;
};

/// Value and derivative along the radius of a radially symmetric field.
struct RadialSample {
  double value = 0.0;
  double slope = 0.0;
};

/// Husimi ordering.
inline constexpr double kHusimiOrder = -1.0;

/// The s-ordered quasiprobability W_s(alpha | rho) of one state, normalized
/// against d^2 alpha / pi. s = -1 is the Husimi function. Cheap to copy; the
/// per-state constants are computed once on construction.
///
/// Closed forms are used for every family that has one. Generic FockMatrix
/// input uses the number-basis expansion at s = -1 and Gaussian smoothing of
/// the Husimi function for s < -1.
class PhaseSpaceDistribution {
 public:
  /// Throws Error(kOrderingNotAdmissible) unless s_admissible(state, s).
  explicit PhaseSpaceDistribution(const CheckedState& state,
                                  double s = kHusimiOrder);

  /// W_s of a Fock or FockMatrix state obtained by smoothing its Husimi
  /// function with the Gaussian kernel of variance (-1 - s)/2, even where a
  /// closed form exists. Requires s < -1.
  static PhaseSpaceDistribution smoothed_husimi(const CheckedState& state,
                                                double s);

  double value(PhasePoint alpha) const;
  Gradient gradient(PhasePoint alpha) const;
  FieldSample sample(PhasePoint alpha) const;

  /// True when the distribution depends on |alpha - center()| only and the
  /// radial accessors below may be used.
  bool is_radial() const;
  RadialSample sample_radial(double radius) const;

  /// Point the distribution is concentrated around and its spread, used to
  /// size the quadrature domain.
  PhasePoint center() const;
  double scale() const;

  double ordering() const;

 private:
  struct Impl;
  explicit PhaseSpaceDistribution(std::shared_ptr<const Impl> impl);

  std::shared_ptr<const Impl> impl_;
};

/// Q(alpha | rho) = <alpha| rho |alpha>.
double husimi_q(const CheckedState& state, PhasePoint alpha);

/// (dQ/dx, dQ/dy), analytic.
Gradient husimi_grad(const CheckedState& state, PhasePoint alpha);

/// Central finite differences with step 1e-5 (1 + |alpha|). Cross-checks only.
Gradient husimi_grad_numeric(const CheckedState& state, PhasePoint alpha);

/// True iff W_s is pointwise nonnegative for this state and implemented:
/// classical families need s < 1, Gaussian states s < 1 - 2 tau_m, Fock and
/// FockMatrix s <= -1. Every other family supports only the Husimi order.
bool s_admissible(const CheckedState& state, double s);

/// W_s(alpha | rho). Throws Error(kOrderingNotAdmissible).
double quasiprob_s(const CheckedState& state, PhasePoint alpha, double s);

/// Wigner function of a Fock state, 2 (-1)^k e^{-2|alpha|^2} L_k(4|alpha|^2),
/// as a signed function of the radius.
double fock_wigner(int k, double radius);

}  // namespace phasecx

#endif  // PHASECX_PHASESPACE_HPP_
