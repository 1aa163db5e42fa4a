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
#ifndef PHASECX_CLOSEDFORM_HPP_
#define PHASECX_CLOSEDFORM_HPP_

#include "phasecx/states.hpp"

namespace phasecx {

/// Parameters of the Gaussian Husimi (or s-ordered) exponent
///   W = Delta^{-1/2} exp[(-A |u|^2 + B (e^{-i theta} u^2 + c.c.)) / (2 Delta)]
/// with u = alpha - xi.
struct GaussianMoments {
  double delta = 1.0;
  double a = 2.0;
  double b = 0.0;
};

/// Delta = (n+1)^2 + (2n+1) sinh^2 r, A = 1 + (2n+1) cosh 2r,
/// B = (n + 1/2) sinh 2r.
GaussianMoments gaussian_moments(double nbar, double r);

/// Delta_s = (n + (1-s)/2)^2 - s (2n+1) sinh^2 r, A_s = -s + (2n+1) cosh 2r,
/// B unchanged. Equal to gaussian_moments at s = -1.
GaussianMoments s_gaussian_moments(double nbar, double r, double s);

/// Unfloored nonclassical depth ((n+1) tanh r - n) / (1 + tanh r).
double gaussian_depth_unfloored(double nbar, double r);

/// Supremum of the orderings with a positive Gaussian W_s:
/// 1 - 2 tau~ = (2n+1) e^{-2r}.
double gaussian_ordering_limit(double nbar, double r);

struct ClosedComplexity {
  double entropy = 0.0;
  double fisher = 0.0;
  double complexity = 0.0;
};

/// S = 1 + ln(Delta)/2, I = A / (2 Delta), C = A / (2 sqrt(Delta)).
ClosedComplexity gaussian_closed(double nbar, double r);

/// The same functionals of the s-ordered Gaussian. Throws
/// Error(kOrderingNotAdmissible) when s >= gaussian_ordering_limit.
ClosedComplexity s_gaussian_closed(double nbar, double r, double s);

struct FockClosed {
  double entropy = 1.0;
  double complexity = 1.0;
};

/// S_W(k) = 1 + k + ln k! - k psi(k+1) and C(k) = k! e^{k - k psi(k+1)}.
FockClosed fock_closed(int k);

struct EnergyExtremes {
  Gaussian most_complex;  // squeezed vacuum
  double c_max = 1.0;     // sqrt(E + 1)
  double c_min = 1.0;     // any displaced thermal state at this energy
};

/// Analytic extremes of the Gaussian complexity at mean photon number E.
EnergyExtremes optimal_gaussian_at_energy(double energy);

/// n + |xi|^2 + (2n+1) sinh^2 r.
double gaussian_energy(double nbar, double r, double xi_mod);

struct ConstrainedPoint {
  double nbar = 0.0;
  double r = 0.0;
  double xi_mod = 0.0;
  double complexity = 1.0;
};

struct ConstrainedSearch {
  ConstrainedPoint max;
  ConstrainedPoint min_unsqueezed;  // best point on the r = 0 slice
  int evaluations = 0;
};

/// Brute-force scan of the Gaussian complexity over the energy surface
/// {n + |xi|^2 + (2n+1) sinh^2 r = E}, parametrized by n in [0, E] and the
/// fraction of the remaining energy spent on squeezing, followed by repeated
/// zooming of the grid around the best cell.
ConstrainedSearch search_gaussian_at_energy(double energy, int grid = 101,
                                            int refinements = 40);

}  // namespace phasecx

#endif  // PHASECX_CLOSEDFORM_HPP_
