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
#ifndef PHASECX_STATES_HPP_
#define PHASECX_STATES_HPP_

#include <complex>
#include <memory>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

namespace phasecx {

using Complex = std::complex<double>;

/// A point alpha = x + i y of the (dimensionless) phase plane.
struct PhasePoint {
  double x = 0.0;
  double y = 0.0;

  Complex as_complex() const { return {x, y}; }
  static PhasePoint from(Complex a) { return {a.real(), a.imag()}; }
  double norm2() const { return x * x + y * y; }
};

// State families. Angles are in radians and must lie in [0, 2 pi).

struct Coherent {
  Complex beta;
};

struct Thermal {
  double nbar = 0.0;
};

struct Fock {
  int k = 0;
};

/// Displaced squeezed thermal state D(xi) S(r e^{i theta}) rho_th S^+ D^+.
struct Gaussian {
  double nbar = 0.0;
  double r = 0.0;
  double theta = 0.0;
  Complex xi;
};

/// (a^+)^k rho_th a^k, normalized.
struct PhotonAddedThermal {
  int k = 1;
  double nbar = 0.0;
};

/// a^+ |beta>, normalized.
struct PhotonAddedCoherent {
  Complex beta;
};

/// (|beta> + e^{i phi} |-beta>) / N_beta.
struct Cat {
  Complex beta;
  double phi = 0.0;
};

/// Equal-weight mixture of |beta> and |-beta>.
struct CoherentMixture {
  Complex beta;
};

/// Coherent state |beta> averaged over the phase of beta.
struct PhaseAveragedCoherent {
  double beta_mod = 0.0;
};

/// Generic density matrix in the truncated number basis {|0>, ..., |dim-1>}.
struct FockMatrix {
  Eigen::MatrixXcd rho;

  int dim() const { return static_cast<int>(rho.rows()); }
};

using StateSpec =
    std::variant<Coherent, Thermal, Fock, Gaussian, PhotonAddedThermal,
                 PhotonAddedCoherent, Cat, CoherentMixture,
                 PhaseAveragedCoherent, FockMatrix>;

/// Lower-case identifier used by the JSON format, e.g. "photon_added_thermal".
std::string_view family_name(const StateSpec& spec);

/// An immutable, validated state. Copies share the underlying data.
class CheckedState {
 public:
  const StateSpec& spec() const { return *spec_; }

  template <class Family>
  const Family* as() const {
    return std::get_if<Family>(spec_.get());
  }

  std::string_view family() const { return family_name(*spec_); }

  /// Coherent, Thermal and Gaussian: all quantities have closed forms.
  bool is_gaussian() const;

  /// True for the families that are pure by construction. FockMatrix is
  /// reported as mixed even when it happens to be rank one.
  bool is_pure_family() const;

  /// FockMatrix only: true when rho has no off-diagonal entries, so the
  /// phase-space distributions are radially symmetric.
  bool is_diagonal() const;

 private:
  friend CheckedState validate(StateSpec spec);
  explicit CheckedState(StateSpec spec);

  std::shared_ptr<const StateSpec> spec_;
};

/// Checks parameter ranges and physicality. FockMatrix input is hermitized
/// and trace-renormalized before its spectrum is checked.
CheckedState validate(StateSpec spec);

inline constexpr double kDefaultTruncationTolerance = 1e-10;

struct TruncatedState {
  Eigen::MatrixXcd rho;
  /// Probability weight of the source state inside the kept levels.
  double retained_trace = 1.0;

  int dim() const { return static_cast<int>(rho.rows()); }
};

/// Number-basis representation on levels 0..dim-1. Squeezed Gaussian states
/// are not supported; every other family is.
TruncatedState to_fock_matrix(const CheckedState& state, int dim,
                              double trunc_tol = kDefaultTruncationTolerance);

/// As above with the dimension picked automatically: starting from
/// max(16, ceil(E + 8 sqrt(E + 1))) and growing until the retained weight
/// reaches 1 - trunc_tol.
TruncatedState to_fock_matrix(const CheckedState& state,
                              double trunc_tol = kDefaultTruncationTolerance);

/// tr(rho a^+ a).
double mean_photon(const CheckedState& state);

/// <m| D(xi) |n> for m < rows and n < cols, by the ladder recurrence.
Eigen::MatrixXcd displacement_matrix(Complex xi, int rows, int cols);

/// <n|beta> for n < dim.
Eigen::VectorXcd coherent_amplitudes(Complex beta, int dim);

}  // namespace phasecx

#endif  // PHASECX_STATES_HPP_
