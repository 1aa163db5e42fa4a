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
#include "phasecx/special.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace phasecx::special {
namespace {

constexpr int kFactorialTableSize = 4096;

const std::vector<double>& factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kFactorialTableSize);
    t[0] = 0.0;
    for (int n = 1; n < kFactorialTableSize; ++n) {
      t[n] = std::lgamma(static_cast<double>(n) + 1.0);
    }
    return t;
  }();
  return table;
}

// Stirling series for ln Gamma(x), x large.
double log_gamma_large(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

// e^{-z} I_nu(z) ~ (2 pi z)^{-1/2} sum_k (-1)^k a_k(nu) / z^k.
double bessel_scaled_asymptotic(int nu, double z) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 12; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (k * 8.0 * z);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * z);
}

constexpr double kBesselDirectLimit = 700.0;

}  // namespace

double log_factorial(int n) {
  if (n < 0) return std::numeric_limits<double>::quiet_NaN();
  if (n < kFactorialTableSize) return factorial_table()[n];
  return log_gamma_large(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double digamma_int_plus_one(int k) {
  if (k <= 10000) {
    CompensatedSum h;
    for (int m = k; m >= 1; --m) h.add(1.0 / m);
    return h.value() - kEulerGamma;
  }
  return digamma(static_cast<double>(k) + 1.0);
}

double digamma(double x) {
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  const double tail =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))));
  return shift + std::log(x) - 0.5 / x - tail;
}

double bessel_i0_scaled(double z) {
  if (z <= 0.0) return 1.0;
  if (z < kBesselDirectLimit) return std::cyl_bessel_i(0.0, z) * std::exp(-z);
  return bessel_scaled_asymptotic(0, z);
}

double bessel_i1_scaled(double z) {
  if (z <= 0.0) return 0.0;
  if (z < kBesselDirectLimit) return std::cyl_bessel_i(1.0, z) * std::exp(-z);
  return bessel_scaled_asymptotic(1, z);
}

double laguerre(int k, double x) {
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int n = 1; n < k; ++n) {
    const double next = ((2.0 * n + 1.0 - x) * cur - n * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

QuadratureRule gauss_hermite(int n) {
  QuadratureRule rule;
  if (n <= 0) return rule;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) off(i - 1) = std::sqrt(0.5 * i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Eigenvector weights lose relative accuracy on the outer nodes, so polish
  // each node with Newton steps on the orthonormal recurrence and take the
  // weight from the Christoffel-Darboux identity w = 1 / (n psi_{n-1}^2).
  const double psi0 = std::pow(std::numbers::pi, -0.25);
  auto orthonormal = [&](double x, double& pn, double& pn1) {
    double prev = 0.0;
    double cur = psi0;
    for (int k = 0; k < n; ++k) {
      const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
    }
    pn = cur;
    pn1 = prev;
  };
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()(i);
    double pn = 0.0, pn1 = 0.0;
    for (int iter = 0; iter < 3; ++iter) {
      orthonormal(x, pn, pn1);
      if (pn1 == 0.0) break;
      x -= pn / (std::sqrt(2.0 * n) * pn1);
    }
    orthonormal(x, pn, pn1);
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / (n * pn1 * pn1);
  }
  return rule;
}

std::vector<double> laguerre_zeros(int k) {
  if (k <= 0) return {};
  Eigen::VectorXd diag(k);
  Eigen::VectorXd off(std::max(k - 1, 0));
  for (int i = 0; i < k; ++i) diag(i) = 2.0 * i + 1.0;
  for (int i = 1; i < k; ++i) off(i - 1) = i;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  std::vector<double> zeros(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + k);
  // One Newton step on the recurrence sharpens each eigenvalue.
  for (double& x : zeros) {
    const double lk = laguerre(k, x);
    const double lk1 = laguerre(k - 1, x);
    const double derivative = k * (lk - lk1) / x;
    if (derivative != 0.0) x -= lk / derivative;
  }
  return zeros;
}

}  // namespace phasecx::special
