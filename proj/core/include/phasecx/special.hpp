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
#ifndef PHASECX_SPECIAL_HPP_
#define PHASECX_SPECIAL_HPP_

#include <vector>

namespace phasecx::special {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// ln(n!) for n >= 0. Table lookup for small n; safe to call concurrently.
double log_factorial(int n);

/// ln C(n, k) for 0 <= k <= n.
double log_binomial(int n, int k);

/// psi(k + 1) = H_k - gamma. Exact harmonic sum up to k = 10^4, asymptotic
/// series beyond.
double digamma_int_plus_one(int k);

/// Digamma for real x > 0 (recurrence plus asymptotic series).
double digamma(double x);

/// e^{-z} I_0(z) and e^{-z} I_1(z) for z >= 0, without overflow.
double bessel_i0_scaled(double z);
double bessel_i1_scaled(double z);

/// Laguerre polynomial L_k(x) by the three-term recurrence.
double laguerre(int k, double x);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for the weight e^{-t^2} on the real line
/// (Golub-Welsch), exact for polynomials of degree <= 2n - 1.
QuadratureRule gauss_hermite(int n);

/// Zeros of L_k in increasing order (k >= 1).
std::vector<double> laguerre_zeros(int k);

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (v >= 0 ? v : -v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace phasecx::special

#endif  // PHASECX_SPECIAL_HPP_
