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
#include "phasecx/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "phasecx/errors.hpp"
#include "phasecx/special.hpp"

namespace phasecx {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHermiticityTol = 1e-10;
constexpr double kTraceTol = 1e-8;
constexpr double kEigenTol = 1e-10;
constexpr double kDiagonalTol = 1e-14;
constexpr int kMaxAutoDimension = 8192;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kBadParameter, what);
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_angle(double a, const char* name) {
  require(std::isfinite(a) && a >= 0.0 && a < kTwoPi,
          std::string(name) + " must lie in [0, 2 pi)");
}

void require_occupation(double nbar) {
  require(std::isfinite(nbar) && nbar >= 0.0, "nbar must be finite and >= 0");
}

// 1 + e^{-2|beta|^2} cos(phi) written without cancellation.
double cat_norm_factor(Complex beta, double phi) {
  const double b2 = std::norm(beta);
  const double c = std::cos(0.5 * phi);
  return -std::expm1(-2.0 * b2) + 2.0 * std::exp(-2.0 * b2) * c * c;
}

FockMatrix checked_matrix(FockMatrix m) {
  const auto& rho = m.rho;
  require(rho.rows() >= 1 && rho.rows() == rho.cols(),
          "fock_matrix must be a non-empty square matrix");
  if (!rho.allFinite()) throw Error(ErrorCode::kNonPhysical, "rho has non-finite entries");
  const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermiticityTol) {
    throw Error(ErrorCode::kNonPhysical,
                "rho is not hermitian (deviation " + std::to_string(asym) + ")");
  }
  Eigen::MatrixXcd h = 0.5 * (rho + rho.adjoint());
  const double trace = h.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw Error(ErrorCode::kNonPhysical, "trace of rho is " + std::to_string(trace));
  }
  h /= trace;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kEigenTol) {
    throw Error(ErrorCode::kNonPhysical,
                "rho has negative eigenvalue " + std::to_string(min_eig));
  }
  return FockMatrix{std::move(h)};
}

StateSpec checked(StateSpec spec) {
  return std::visit(
      Overloaded{
          [](Coherent s) -> StateSpec {
            require(is_finite(s.beta), "beta must be finite");
            return s;
          },
          [](Thermal s) -> StateSpec {
            require_occupation(s.nbar);
            return s;
          },
          [](Fock s) -> StateSpec {
            require(s.k >= 0, "k must be >= 0");
            return s;
          },
          [](Gaussian s) -> StateSpec {
            require_occupation(s.nbar);
            require(std::isfinite(s.r) && s.r >= 0.0, "r must be finite and >= 0");
            require_angle(s.theta, "theta");
            require(is_finite(s.xi), "xi must be finite");
            return s;
          },
          [](PhotonAddedThermal s) -> StateSpec {
            require(s.k >= 1, "k must be >= 1");
            require_occupation(s.nbar);
            return s;
          },
          [](PhotonAddedCoherent s) -> StateSpec {
            require(is_finite(s.beta), "beta must be finite");
            return s;
          },
          [](Cat s) -> StateSpec {
            require(is_finite(s.beta), "beta must be finite");
            require_angle(s.phi, "phi");
            if (s.beta == Complex{} && cat_norm_factor(s.beta, s.phi) < 1e-24) {
              throw Error(ErrorCode::kDegenerateCat,
                          "odd cat with beta = 0 has vanishing norm");
            }
            return s;
          },
          [](CoherentMixture s) -> StateSpec {
            require(is_finite(s.beta), "beta must be finite");
            return s;
          },
          [](PhaseAveragedCoherent s) -> StateSpec {
            require(std::isfinite(s.beta_mod) && s.beta_mod >= 0.0,
                    "beta_mod must be finite and >= 0");
            return s;
          },
          [](FockMatrix s) -> StateSpec { return checked_matrix(std::move(s)); },
      },
      std::move(spec));
}

Eigen::VectorXd thermal_weights(double nbar, int dim) {
  Eigen::VectorXd p(dim);
  const double ratio = nbar / (nbar + 1.0);
  double w = 1.0 / (nbar + 1.0);
  for (int n = 0; n < dim; ++n) {
    p(n) = w;
    w *= ratio;
  }
  return p;
}

// Weight of |n + k> in the k-photon-added thermal state.
Eigen::VectorXd photon_added_thermal_weights(int k, double nbar, int dim) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(dim);
  const double log_ratio = nbar > 0.0 ? std::log(nbar / (nbar + 1.0)) : 0.0;
  const double log_norm = -(k + 1.0) * std::log1p(nbar);
  for (int m = k; m < dim; ++m) {
    const int n = m - k;
    if (n > 0 && nbar == 0.0) break;
    p(m) = std::exp(special::log_binomial(n + k, k) + n * log_ratio + log_norm);
  }
  return p;
}

Eigen::VectorXd poisson_weights(double mean, int dim) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(dim);
  if (mean == 0.0) {
    p(0) = 1.0;
    return p;
  }
  const double log_mean = std::log(mean);
  for (int n = 0; n < dim; ++n) {
    p(n) = std::exp(-mean + n * log_mean - special::log_factorial(n));
  }
  return p;
}

Eigen::MatrixXcd projector(const Eigen::VectorXcd& v) { return v * v.adjoint(); }

Eigen::VectorXcd parity_flipped(Eigen::VectorXcd v) {
  for (Eigen::Index n = 1; n < v.size(); n += 2) v(n) = -v(n);
  return v;
}

Eigen::MatrixXcd displaced_thermal(double nbar, Complex xi, int dim, double trunc_tol) {
  int sources = 1;
  if (nbar > 0.0) {
    const double ratio = nbar / (nbar + 1.0);
    sources = static_cast<int>(std::ceil(std::log(1e-3 * trunc_tol) / std::log(ratio))) + 1;
    sources = std::clamp(sources, 1, kMaxAutoDimension);
  }
  const Eigen::MatrixXcd d = displacement_matrix(xi, dim, sources);
  const Eigen::VectorXd p = thermal_weights(nbar, sources);
  return d * p.cast<Complex>().asDiagonal() * d.adjoint();
}

TruncatedState truncate(const CheckedState& state, int dim, double trunc_tol) {
  TruncatedState out;
  std::visit(
      Overloaded{
          [&](const Coherent& s) {
            out.rho = projector(coherent_amplitudes(s.beta, dim));
          },
          [&](const Thermal& s) {
            out.rho = thermal_weights(s.nbar, dim).cast<Complex>().asDiagonal();
          },
          [&](const Fock& s) {
            out.rho = Eigen::MatrixXcd::Zero(dim, dim);
            if (s.k < dim) out.rho(s.k, s.k) = 1.0;
          },
          [&](const Gaussian& s) {
            if (s.r > 0.0) {
              throw Error(ErrorCode::kUnsupported,
                          "squeezed Gaussian states are not truncated; use the closed forms");
            }
            if (s.xi == Complex{}) {
              out.rho = thermal_weights(s.nbar, dim).cast<Complex>().asDiagonal();
            } else {
              out.rho = displaced_thermal(s.nbar, s.xi, dim, trunc_tol);
            }
          },
          [&](const PhotonAddedThermal& s) {
            out.rho = photon_added_thermal_weights(s.k, s.nbar, dim).cast<Complex>().asDiagonal();
          },
          [&](const PhotonAddedCoherent& s) {
            const Eigen::VectorXcd c = coherent_amplitudes(s.beta, dim);
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
            const double norm = std::sqrt(1.0 + std::norm(s.beta));
            for (int n = 0; n + 1 < dim; ++n) v(n + 1) = c(n) * std::sqrt(n + 1.0) / norm;
            out.rho = projector(v);
          },
          [&](const Cat& s) {
            const Eigen::VectorXcd c = coherent_amplitudes(s.beta, dim);
            const Complex phase = std::polar(1.0, s.phi);
            const double norm = std::sqrt(2.0 * cat_norm_factor(s.beta, s.phi));
            Eigen::VectorXcd v(dim);
            for (int n = 0; n < dim; ++n) {
              const double parity = (n % 2 == 0) ? 1.0 : -1.0;
              v(n) = c(n) * (1.0 + phase * parity) / norm;
            }
            out.rho = projector(v);
          },
          [&](const CoherentMixture& s) {
            const Eigen::VectorXcd c = coherent_amplitudes(s.beta, dim);
            out.rho = 0.5 * (projector(c) + projector(parity_flipped(c)));
          },
          [&](const PhaseAveragedCoherent& s) {
            out.rho = poisson_weights(s.beta_mod * s.beta_mod, dim).cast<Complex>().asDiagonal();
          },
          [&](const FockMatrix& s) {
            out.rho = Eigen::MatrixXcd::Zero(dim, dim);
            const int keep = std::min(dim, s.dim());
            out.rho.topLeftCorner(keep, keep) = s.rho.topLeftCorner(keep, keep);
          },
      },
      state.spec());
  out.retained_trace = out.rho.trace().real();
  return out;
}

}  // namespace

std::string_view family_name(const StateSpec& spec) {
  return std::visit(Overloaded{
                        [](const Coherent&) { return "coherent"; },
                        [](const Thermal&) { return "thermal"; },
                        [](const Fock&) { return "fock"; },
                        [](const Gaussian&) { return "gaussian"; },
                        [](const PhotonAddedThermal&) { return "photon_added_thermal"; },
                        [](const PhotonAddedCoherent&) { return "photon_added_coherent"; },
                        [](const Cat&) { return "cat"; },
                        [](const CoherentMixture&) { return "coherent_mixture"; },
                        [](const PhaseAveragedCoherent&) { return "phase_averaged_coherent"; },
                        [](const FockMatrix&) { return "fock_matrix"; },
                    },
                    spec);
}

CheckedState::CheckedState(StateSpec spec)
    : spec_(std::make_shared<const StateSpec>(std::move(spec))) {}

bool CheckedState::is_gaussian() const {
  return as<Coherent>() || as<Thermal>() || as<Gaussian>();
}

bool CheckedState::is_pure_family() const {
  if (const auto* g = as<Gaussian>()) return g->nbar == 0.0;
  if (const auto* t = as<Thermal>()) return t->nbar == 0.0;
  return as<Coherent>() || as<Fock>() || as<PhotonAddedCoherent>() || as<Cat>();
}

bool CheckedState::is_diagonal() const {
  const auto* m = as<FockMatrix>();
  if (!m) return false;
  Eigen::MatrixXcd off = m->rho;
  off.diagonal().setZero();
  return off.cwiseAbs().maxCoeff() <= kDiagonalTol;
}

CheckedState validate(StateSpec spec) { return CheckedState(checked(std::move(spec))); }

Eigen::VectorXcd coherent_amplitudes(Complex beta, int dim) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
  if (dim <= 0) return c;
  const double mod = std::abs(beta);
  if (mod == 0.0) {
    c(0) = 1.0;
    return c;
  }
  const double log_mod = std::log(mod);
  const double half_norm = 0.5 * mod * mod;
  const double arg = std::arg(beta);
  for (int n = 0; n < dim; ++n) {
    const double log_amp = -half_norm + n * log_mod - 0.5 * special::log_factorial(n);
    c(n) = std::polar(std::exp(log_amp), n * arg);
  }
  return c;
}

Eigen::MatrixXcd displacement_matrix(Complex xi, int rows, int cols) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(rows, cols);
  if (rows <= 0 || cols <= 0) return d;
  // Row 0: <0| D(xi) |n> = <n|-xi>^*.
  const Eigen::VectorXcd first = coherent_amplitudes(-xi, cols).conjugate();
  d.row(0) = first.transpose();
  // a D = D (a + xi):  sqrt(m+1) D[m+1][n] = sqrt(n) D[m][n-1] + xi D[m][n].
  for (int m = 0; m + 1 < rows; ++m) {
    const double inv = 1.0 / std::sqrt(m + 1.0);
    d(m + 1, 0) = xi * d(m, 0) * inv;
    for (int n = 1; n < cols; ++n) {
      d(m + 1, n) = (std::sqrt(static_cast<double>(n)) * d(m, n - 1) + xi * d(m, n)) * inv;
    }
  }
  return d;
}

TruncatedState to_fock_matrix(const CheckedState& state, int dim, double trunc_tol) {
  if (dim < 1) throw Error(ErrorCode::kBadParameter, "dim must be >= 1");
  TruncatedState out = truncate(state, dim, trunc_tol);
  if (!(out.retained_trace >= 1.0 - trunc_tol)) {
    throw Error(ErrorCode::kTruncationTooSevere,
                "dim " + std::to_string(dim) + " retains only " +
                    std::to_string(out.retained_trace) + " of the state");
  }
  return out;
}

TruncatedState to_fock_matrix(const CheckedState& state, double trunc_tol) {
  const double energy = mean_photon(state);
  int dim = std::max(16, static_cast<int>(std::ceil(energy + 8.0 * std::sqrt(energy + 1.0))));
  if (const auto* f = state.as<Fock>()) dim = std::max(dim, f->k + 1);
  if (const auto* m = state.as<FockMatrix>()) dim = std::max(dim, m->dim());
  while (dim <= kMaxAutoDimension) {
    TruncatedState out = truncate(state, dim, trunc_tol);
    if (out.retained_trace >= 1.0 - trunc_tol) return out;
    dim = dim + dim / 2;
  }
  throw Error(ErrorCode::kTruncationTooSevere,
              "no dimension up to " + std::to_string(kMaxAutoDimension) +
                  " retains 1 - " + std::to_string(trunc_tol) + " of the state");
}

double mean_photon(const CheckedState& state) {
  return std::visit(
      Overloaded{
          [](const Coherent& s) { return std::norm(s.beta); },
          [](const Thermal& s) { return s.nbar; },
          [](const Fock& s) { return static_cast<double>(s.k); },
          [](const Gaussian& s) {
            const double sh = std::sinh(s.r);
            return s.nbar + std::norm(s.xi) + (2.0 * s.nbar + 1.0) * sh * sh;
          },
          [](const PhotonAddedThermal& s) { return s.k + s.nbar * (s.k + 1.0); },
          [](const PhotonAddedCoherent& s) {
            const double b2 = std::norm(s.beta);
            return (b2 * b2 + 3.0 * b2 + 1.0) / (1.0 + b2);
          },
          [](const Cat& s) {
            const double b2 = std::norm(s.beta);
            const double c = std::cos(0.5 * s.phi);
            const double s2 = std::sin(0.5 * s.phi);
            // |b|^2 (1 - e^{-2b^2} cos phi) / (1 + e^{-2b^2} cos phi), both
            // factors in cancellation-free form.
            const double num = -std::expm1(-2.0 * b2) + 2.0 * std::exp(-2.0 * b2) * s2 * s2;
            const double den = -std::expm1(-2.0 * b2) + 2.0 * std::exp(-2.0 * b2) * c * c;
            return b2 * num / den;
          },
          [](const CoherentMixture& s) { return std::norm(s.beta); },
          [](const PhaseAveragedCoherent& s) { return s.beta_mod * s.beta_mod; },
          [](const FockMatrix& s) {
            double e = 0.0;
            for (int n = 0; n < s.dim(); ++n) e += n * s.rho(n, n).real();
            return e;
          },
      },
      state.spec());
}

}  // namespace phasecx
