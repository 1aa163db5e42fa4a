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
#include "phasecx/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "phasecx/closedform.hpp"
#include "phasecx/errors.hpp"
#include "phasecx/phasespace.hpp"
#include "phasecx/special.hpp"

namespace phasecx {
namespace {

// Gaussian parameters of the three Gaussian families.
struct GaussianView {
  double nbar = 0.0;
  double r = 0.0;
  double theta = 0.0;
  Complex xi;
};

std::optional<GaussianView> as_gaussian(const CheckedState& state) {
  if (const auto* c = state.as<Coherent>()) return GaussianView{0.0, 0.0, 0.0, c->beta};
  if (const auto* t = state.as<Thermal>()) return GaussianView{t->nbar, 0.0, 0.0, {}};
  if (const auto* g = state.as<Gaussian>()) return GaussianView{g->nbar, g->r, g->theta, g->xi};
  return std::nullopt;
}

[[noreturn]] void zero_mean() {
  throw Error(ErrorCode::kZeroMeanPhoton, "Mandel Q is undefined at zero mean photon number");
}

Eigen::MatrixXcd matrix_sqrt(const Eigen::MatrixXcd& rho) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double mandel_q(const Eigen::MatrixXcd& rho) {
  double n1 = 0.0, n2 = 0.0;
  for (int n = 0; n < rho.rows(); ++n) {
    const double p = rho(n, n).real();
    n1 += n * p;
    n2 += static_cast<double>(n) * (n - 1) * p;
  }
  if (!(n1 > 1e-14)) zero_mean();
  return (n2 - n1 * n1) / n1;
}

double mandel_q(const CheckedState& state) {
  if (const auto g = as_gaussian(state)) {
    const double h = g->nbar + 0.5;
    const double ch = std::cosh(g->r);
    const double sh = std::sinh(g->r);
    const Complex mix = g->xi * ch + std::conj(g->xi) * std::polar(1.0, g->theta) * sh;
    const double den = h * std::cosh(2.0 * g->r) + std::norm(g->xi) - 0.5;
    if (!(den > 1e-14)) zero_mean();
    const double num = h * h * std::cosh(4.0 * g->r) + 2.0 * h * std::norm(mix) - 0.25;
    return num / den - 1.0;
  }
  if (const auto* f = state.as<Fock>()) {
    if (f->k == 0) zero_mean();
    return -1.0;
  }
  // Phase averaging and the +/- beta mixture both keep Poisson photon statistics.
  const auto* pa = state.as<PhaseAveragedCoherent>();
  const auto* mix = state.as<CoherentMixture>();
  if (pa || mix) {
    const double mean = pa ? pa->beta_mod * pa->beta_mod : std::norm(mix->beta);
    if (!(mean > 1e-14)) zero_mean();
    return 0.0;
  }
  return mandel_q(to_fock_matrix(state).rho);
}

NonclassicalDepth nonclassical_depth(const CheckedState& state) {
  if (state.as<Coherent>() || state.as<PhaseAveragedCoherent>() || state.as<CoherentMixture>()) {
    return {0.0, 0.0};
  }
  if (const auto* t = state.as<Thermal>()) return {0.0, -t->nbar};
  if (const auto* g = state.as<Gaussian>()) {
    const double tau = gaussian_depth_unfloored(g->nbar, g->r);
    return {std::max(0.0, tau), tau};
  }
  if (state.as<Fock>()) return {1.0, 1.0};
  throw Error(ErrorCode::kUnsupported, "nonclassical depth is not implemented for a " +
                                           std::string(state.family()) + " state");
}

double skew_info_nonclassicality(const Eigen::MatrixXcd& rho) {
  const int dim = static_cast<int>(rho.rows());
  const Eigen::MatrixXcd root = matrix_sqrt(rho);
  double mean = 0.0;
  for (int n = 0; n < dim; ++n) mean += n * rho(n, n).real();
  // tr(sqrt(rho) a^+ sqrt(rho) a) = sum_{n,m >= 1} sqrt(nm) X_{mn} X_{n-1,m-1}.
  double cross = 0.0;
  for (int n = 1; n < dim; ++n) {
    for (int m = 1; m < dim; ++m) {
      cross += std::sqrt(static_cast<double>(n) * m) * (root(m, n) * root(n - 1, m - 1)).real();
    }
  }
  return mean + 0.5 - cross;
}

double skew_info_nonclassicality(const CheckedState& state) {
  if (const auto g = as_gaussian(state)) {
    const double n = g->nbar;
    return (0.5 + n - std::sqrt(n * (n + 1.0))) * std::cosh(2.0 * g->r);
  }
  if (const auto* f = state.as<Fock>()) return 0.5 + f->k;
  return skew_info_nonclassicality(to_fock_matrix(state).rho);
}

QuadResult wigner_negativity(const CheckedState& state, const QuadratureConfig& cfg) {
  if (as_gaussian(state)) return {0.0, 0.0};
  const auto* f = state.as<Fock>();
  if (f == nullptr) {
    throw Error(ErrorCode::kUnsupported, "Wigner negativity is implemented for Gaussian and fock "
                                         "states only");
  }
  if (f->k == 0) return {0.0, 0.0};
  const int k = f->k;
  std::vector<double> nodes;
  for (const double x : special::laguerre_zeros(k)) nodes.push_back(0.5 * std::sqrt(x));
  const QuadResult abs_mass = integrate_radial(
      [k](double r) { return std::abs(fock_wigner(k, r)); }, std::sqrt(k + 1.0), cfg, nodes);
  return {abs_mass.value - 1.0, abs_mass.error};
}

FockNonGaussianity nongaussianity_fock(int k) {
  if (k < 0) throw Error(ErrorCode::kBadParameter, "photon number must be nonnegative");
  if (k == 0) return {0.0, 0.0};
  const double kd = k;
  const double delta_a =
      0.5 * (1.0 + 1.0 / (2.0 * kd + 1.0)) - std::exp(kd * std::log(kd) - (kd + 1.0) * std::log1p(kd));
  const double delta_b = (kd + 1.0) * std::log1p(kd) - kd * std::log(kd);
  return {delta_a, delta_b};
}

QuantifierRow quantifier_row(const CheckedState& state, const QuadratureConfig& cfg) {
  QuantifierRow row;
  try {
    row.mandel_q = mandel_q(state);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kZeroMeanPhoton) throw;
  }
  try {
    const NonclassicalDepth d = nonclassical_depth(state);
    row.nonclassical_depth = d.tau;
    row.nonclassical_depth_unfloored = d.tau_unfloored;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnsupported) throw;
  }
  row.skew_info = skew_info_nonclassicality(state);
  if (as_gaussian(state)) {
    row.wigner_negativity = 0.0;
    row.delta_a = 0.0;
    row.delta_b = 0.0;
  } else if (const auto* f = state.as<Fock>()) {
    row.wigner_negativity = wigner_negativity(state, cfg).value;
    const FockNonGaussianity ng = nongaussianity_fock(f->k);
    row.delta_a = ng.delta_a;
    row.delta_b = ng.delta_b;
  }
  return row;
}

}  // namespace phasecx
