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
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "phasecx/closedform.hpp"
#include "phasecx/errors.hpp"
#include "phasecx/random_states.hpp"
#include "phasecx/states.hpp"
#include "phasecx_app/app.hpp"
#include "phasecx_app/parallel.hpp"

namespace phasecx::app {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20260214;

Check make_check(std::string name, double deviation, double tol, std::string detail = {}) {
  return {std::move(name), deviation <= tol, deviation, tol, std::move(detail)};
}

double quad_c(const StateSpec& spec, const QuadratureConfig& cfg) {
  return complexity(validate(spec), cfg, Route::kQuadrature).complexity;
}

FockMatrix rotated(const FockMatrix& m, double theta) {
  FockMatrix out = m;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out.rho(i, j) *= std::polar(1.0, -theta * (i - j));
  }
  return out;
}

std::vector<Check> propositions(const Options& opts) {
  const QuadratureConfig& cfg = opts.cfg;
  std::vector<Check> checks;

  {
    const double base = quad_c(Gaussian{0.5, 0.8, 0.0, {}}, cfg);
    double dev = 0.0;
    for (const Complex xi : {Complex{1.0, 1.0}, Complex{3.0, 0.0}}) {
      dev = std::max(dev, std::abs(quad_c(Gaussian{0.5, 0.8, 0.0, xi}, cfg) - base));
    }
    checks.push_back(make_check("prop1_displacement_gaussian", dev, 1e-7));
    const double rot = quad_c(Gaussian{0.5, 0.8, kPi / 3, {}}, cfg);
    checks.push_back(make_check("prop1_rotation_gaussian", std::abs(rot - base), 1e-7));
  }
  {
    const double a = quad_c(Cat{{1.2, 0.0}, kPi / 2}, cfg);
    const double b = quad_c(Cat{std::polar(1.2, 0.9), kPi / 2}, cfg);
    checks.push_back(make_check("prop1_rotation_cat", std::abs(a - b), 1e-6));
  }
  {
    std::mt19937_64 rng(kSeed);
    const FockMatrix m = random_fock_matrix(6, rng);
    const double a = quad_c(m, cfg);
    const double b = quad_c(rotated(m, 1.1), cfg);
    checks.push_back(make_check("prop1_rotation_fock_matrix", std::abs(a - b), 1e-6));
  }
  {
    double dev = 0.0;
    for (const int k : {1, 2, 3}) {
      const double fock = quad_c(Fock{k}, cfg);
      for (const double n : {0.2, 1.0, 5.0}) {
        dev = std::max(dev, std::abs(quad_c(PhotonAddedThermal{k, n}, cfg) - fock));
      }
    }
    checks.push_back(make_check("prop2_photon_added_thermal_scaling", dev, 1e-6));
  }
  {
    double dev = 0.0;
    const double b = 1.0;
    for (const double s : {-3.0, -0.5, 0.5}) {
      const double f = std::sqrt(0.5 * (1.0 - s));
      const double cs = s_complexity(validate(PhaseAveragedCoherent{b}), s, cfg).complexity;
      const double ch = quad_c(PhaseAveragedCoherent{b / f}, cfg);
      dev = std::max(dev, std::abs(cs - ch));
    }
    checks.push_back(make_check("prop2_phase_averaged_rescaling", dev, 1e-6));
  }
  {
    double dev = 0.0;
    for (const StateSpec& spec : {StateSpec{Coherent{{1.0, -0.5}}}, StateSpec{Thermal{2.0}}}) {
      dev = std::max(dev, std::abs(quad_c(spec, cfg) - 1.0));
    }
    checks.push_back(make_check("prop3_equality_classical", dev, 1e-6));
  }
  {
    std::mt19937_64 rng(kSeed + 1);
    std::vector<FockMatrix> states;
    for (int i = 0; i < 20; ++i) states.push_back(random_fock_matrix(2, 8, rng));
    const std::vector<double> cs = parallel_map(
        states.size(), opts.threads, [&](std::size_t i) { return quad_c(states[i], cfg); });
    const double min_c = *std::min_element(cs.begin(), cs.end());
    checks.push_back(make_check("prop3_lower_bound_random", std::max(0.0, 1.0 - min_c), 1e-6,
                                "min C = " + format_number(min_c) + " over 20 states"));
  }
  return checks;
}

std::vector<Check> prop4(double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw Error(ErrorCode::kBadParameter, "energy must be positive");
  }
  const ConstrainedSearch s = search_gaussian_at_energy(energy);
  const double target = std::sqrt(energy + 1.0);
  const double r_sv = std::asinh(std::sqrt(energy));
  const double param_dev =
      std::max({s.max.nbar, s.max.xi_mod, std::abs(s.max.r - r_sv)});
  char detail[160];
  std::snprintf(detail, sizeof detail, "argmax nbar=%.3g r=%.6f |xi|=%.3g C=%.9f", s.max.nbar,
                s.max.r, s.max.xi_mod, s.max.complexity);
  return {make_check("prop4_max_value", std::abs(s.max.complexity - target), 1e-4, detail),
          make_check("prop4_argmax_squeezed_vacuum", param_dev, 1e-3),
          make_check("prop4_min_unsqueezed", std::abs(s.min_unsqueezed.complexity - 1.0), 1e-6)};
}

// Var(n) / <n> - 1 from the Gaussian moment theorem with <a> = xi,
// <da^+ da> = N and <da da> = M = (n + 1/2) e^{i theta} sinh 2r.
double mandel_from_moments(double nbar, double r, double theta, Complex xi) {
  const double h = nbar + 0.5;
  const double n_th = h * std::cosh(2.0 * r) - 0.5;
  const Complex m = h * std::polar(1.0, theta) * std::sinh(2.0 * r);
  const double x2 = std::norm(xi);
  const double mean = x2 + n_th;
  const double var = 2.0 * x2 * n_th + 2.0 * (std::conj(xi) * std::conj(xi) * m).real() +
                     n_th * n_th + std::norm(m) + x2 + n_th;
  return var / mean - 1.0;
}

std::vector<Check> table2(const Options& opts) {
  const QuadratureConfig& cfg = opts.cfg;
  std::vector<Check> checks;
  for (int k = 1; k <= 5; ++k) {
    const CheckedState st = validate(Fock{k});
    const QuantifierRow row = quantifier_row(st, cfg);
    const Eigen::MatrixXcd rho = to_fock_matrix(st).rho;
    const double kd = k;
    const double da = 0.5 * (1.0 + 1.0 / (2.0 * kd + 1.0)) - std::pow(kd, kd) / std::pow(kd + 1.0, kd + 1.0);
    const double db = (kd + 1.0) * std::log(kd + 1.0) - kd * std::log(kd);
    const double dev = std::max({std::abs(*row.mandel_q + 1.0), std::abs(mandel_q(rho) + 1.0),
                                 std::abs(*row.nonclassical_depth - 1.0),
                                 std::abs(row.skew_info - (kd + 0.5)),
                                 std::abs(skew_info_nonclassicality(rho) - (kd + 0.5)),
                                 std::abs(*row.delta_a - da), std::abs(*row.delta_b - db)});
    const bool negativity_ok = row.wigner_negativity && *row.wigner_negativity > 0.0;
    Check c = make_check("table2_fock_k" + std::to_string(k), dev, 1e-8,
                         "negativity=" + format_number(row.wigner_negativity.value_or(-1.0)));
    c.passed = c.passed && negativity_ok;
    checks.push_back(std::move(c));
  }

  double dev = 0.0;
  double basis_dev = 0.0;
  bool vacuum_ok = true;
  for (const double n : {0.0, 0.5, 2.0}) {
    for (const double r : {0.0, 0.4, 1.0}) {
      for (const double theta : {0.0, kPi / 3}) {
        for (const Complex xi : {Complex{}, Complex{1.0, 0.5}}) {
          const CheckedState st = validate(Gaussian{n, r, theta, xi});
          const QuantifierRow row = quantifier_row(st, cfg);
          const double t = std::tanh(r);
          const double tau = ((n + 1.0) * t - n) / (1.0 + t);
          const double skew = (0.5 + n - std::sqrt(n * (n + 1.0))) * std::cosh(2.0 * r);
          dev = std::max({dev, std::abs(*row.nonclassical_depth_unfloored - tau),
                          std::abs(*row.nonclassical_depth - std::max(0.0, tau)),
                          std::abs(row.skew_info - skew), std::abs(*row.wigner_negativity),
                          std::abs(*row.delta_a), std::abs(*row.delta_b)});
          if (n == 0.0 && r == 0.0 && xi == Complex{}) {
            vacuum_ok = vacuum_ok && !row.mandel_q;
            continue;
          }
          dev = std::max(dev, std::abs(*row.mandel_q - mandel_from_moments(n, r, theta, xi)));
          if (r == 0.0) {
            const Eigen::MatrixXcd rho = to_fock_matrix(st).rho;
            basis_dev = std::max({basis_dev, std::abs(mandel_q(rho) - *row.mandel_q),
                                  std::abs(skew_info_nonclassicality(rho) - skew)});
          }
        }
      }
    }
  }
  Check g = make_check("table2_gaussian_grid", dev, 1e-8, vacuum_ok ? "" : "vacuum Mandel defined");
  g.passed = g.passed && vacuum_ok;
  checks.push_back(std::move(g));
  checks.push_back(make_check("table2_gaussian_number_basis", basis_dev, 1e-6));
  return checks;
}

}  // namespace

std::vector<Check> verify_suite(const std::string& suite, double energy, const Options& opts) {
  if (suite == "propositions") {
    std::vector<Check> out = propositions(opts);
    for (Check& c : prop4(1.0)) out.push_back(std::move(c));
    return out;
  }
  if (suite == "table2") return table2(opts);
  if (suite == "prop4") return prop4(energy);
  throw Error(ErrorCode::kBadParameter, "unknown suite '" + suite + "'");
}

int cmd_verify(const std::string& suite, double energy, const Options& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(
      [&] {
        const std::vector<Check> checks = verify_suite(suite, energy, opts);
        bool all = true;
        nlohmann::json j = nlohmann::json::array();
        for (const Check& c : checks) {
          all = all && c.passed;
          if (opts.json) {
            j.push_back({{"name", c.name},
                         {"passed", c.passed},
                         {"deviation", c.deviation},
                         {"tolerance", c.tolerance},
                         {"detail", c.detail}});
            continue;
          }
          char line[256];
          std::snprintf(line, sizeof line, "%s %-36s deviation=%.3e tol=%.0e", c.passed ? "PASS" : "FAIL",
                        c.name.c_str(), c.deviation, c.tolerance);
          out << line;
          if (!c.detail.empty()) out << "  " << c.detail;
          out << '\n';
        }
        if (opts.json) out << j.dump(2) << '\n';
        return all ? kExitOk : kExitCheckFailed;
      },
      err);
}

}  // namespace phasecx::app
