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
#include "phasecx/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "phasecx/closedform.hpp"
#include "phasecx/errors.hpp"
#include "phasecx/special.hpp"

namespace phasecx {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Husimi value at a point where the analytic expression may round to a tiny
// negative number.
double clip(double v) { return v > 0.0 ? v : 0.0; }

// ---------------------------------------------------------------------------
// Gaussian W_s (coherent, thermal and general Gaussian states):
//   W = Delta_s^{-1/2} exp[E / (2 Delta_s)],
//   E = -A_s |u|^2 + 2B (cos(theta)(ux^2 - uy^2) + 2 sin(theta) ux uy).
struct GaussianKernel {
  double cx, cy;
  double a, b;
  double cos_t, sin_t;
  double inv_two_delta;
  double norm;

  GaussianKernel(double nbar, double r, double theta, Complex xi, double s)
      : cx(xi.real()), cy(xi.imag()), cos_t(std::cos(theta)), sin_t(std::sin(theta)) {
    const GaussianMoments m = s_gaussian_moments(nbar, r, s);
    a = m.a;
    b = m.b;
    inv_two_delta = 0.5 / m.delta;
    norm = 1.0 / std::sqrt(m.delta);
  }

  FieldSample sample(PhasePoint p) const {
    const double ux = p.x - cx;
    const double uy = p.y - cy;
    const double e = -a * (ux * ux + uy * uy) +
                     2.0 * b * (cos_t * (ux * ux - uy * uy) + 2.0 * sin_t * ux * uy);
    const double w = norm * std::exp(e * inv_two_delta);
    const double ex = -2.0 * a * ux + 4.0 * b * (cos_t * ux + sin_t * uy);
    const double ey = -2.0 * a * uy + 4.0 * b * (sin_t * ux - cos_t * uy);
    return {w, {w * ex * inv_two_delta, w * ey * inv_two_delta}};
  }

  bool radial() const { return b == 0.0; }

  RadialSample sample_radial(double rho) const {
    const double w = norm * std::exp(-a * rho * rho * inv_two_delta);
    return {w, -2.0 * a * rho * inv_two_delta * w};
  }

  PhasePoint center() const { return {cx, cy}; }
};

// ---------------------------------------------------------------------------
// Fock state |k> at ordering s <= -1, optionally rescaled by lambda (the
// photon-added thermal state is a rescaled Fock state):
//   W_s(rho) = (2/(1-s)) e^{-2 rho^2/(1-s)} sum_j C(k,j) p^{k-j} q^j / j!,
//   p = (-1-s)/(1-s), q = 4 rho^2/(1-s)^2,
// which is the Laguerre form (2/(1-s)) p^k e^{-2rho^2/(1-s)} L_k(4rho^2/(1-s^2))
// with every term positive.
struct FockRadialKernel {
  int k;
  double s;
  double lambda;
  double log_p;  // -inf at the Husimi order
  std::vector<double> log_coeff;

  FockRadialKernel(int k_, double s_, double lambda_) : k(k_), s(s_), lambda(lambda_) {
    const double p = (-1.0 - s) / (1.0 - s);
    log_p = p > 0.0 ? std::log(p) : -std::numeric_limits<double>::infinity();
    log_coeff.resize(k + 1);
    for (int j = 0; j <= k; ++j) {
      log_coeff[j] = special::log_binomial(k, j) - special::log_factorial(j);
    }
  }

  RadialSample unscaled(double rho) const {
    const double inv = 1.0 / (1.0 - s);
    const double log_pref = std::log(2.0 * inv) - 2.0 * rho * rho * inv;
    if (rho == 0.0) {
      // Only the j = 0 term survives.
      const double v = (k == 0) ? std::exp(log_pref)
                                : (std::isfinite(log_p) ? std::exp(log_pref + k * log_p) : 0.0);
      return {v, 0.0};
    }
    const double log_q = std::log(4.0 * rho * rho * inv * inv);
    double peak = -std::numeric_limits<double>::infinity();
    const int j_min = std::isfinite(log_p) ? 0 : k;
    for (int j = j_min; j <= k; ++j) {
      const double lt = log_coeff[j] + (k - j) * (j == k ? 0.0 : log_p) + j * log_q;
      peak = std::max(peak, lt);
    }
    double sum = 0.0;
    double dsum = 0.0;  // sum of (2j / rho) * term
    for (int j = j_min; j <= k; ++j) {
      const double lt = log_coeff[j] + (k - j) * (j == k ? 0.0 : log_p) + j * log_q;
      const double t = std::exp(lt - peak);
      sum += t;
      dsum += (2.0 * j / rho) * t;
    }
    const double value = std::exp(log_pref + peak) * sum;
    const double slope = value * (-4.0 * rho * inv + dsum / sum);
    return {value, slope};
  }

  RadialSample sample_radial(double rho) const {
    if (lambda == 1.0) return unscaled(rho);
    const RadialSample u = unscaled(rho / lambda);
    return {u.value / (lambda * lambda), u.slope / (lambda * lambda * lambda)};
  }
};

// ---------------------------------------------------------------------------
// Phase-averaged coherent state:
//   W_s = (2/(1-s)) e^{-2 (rho - b)^2 / (1-s)} [e^{-z} I_0(z)],  z = 4 rho b/(1-s).
struct PhaseAveragedKernel {
  double b;
  double s;

  RadialSample sample_radial(double rho) const {
    const double inv = 1.0 / (1.0 - s);
    const double z = 4.0 * rho * b * inv;
    const double g = 2.0 * inv * std::exp(-2.0 * (rho - b) * (rho - b) * inv);
    const double i0 = special::bessel_i0_scaled(z);
    const double i1 = special::bessel_i1_scaled(z);
    return {g * i0, g * 4.0 * inv * (b * i1 - rho * i0)};
  }
};

// ---------------------------------------------------------------------------
// Photon-added coherent state: Q = |alpha|^2 e^{-|alpha - beta|^2} / (1 + |beta|^2).
struct PhotonAddedCoherentKernel {
  double bx, by;
  double inv_norm;

  FieldSample sample(PhasePoint p) const {
    const double ux = p.x - bx;
    const double uy = p.y - by;
    const double g = std::exp(-(ux * ux + uy * uy)) * inv_norm;
    const double r2 = p.norm2();
    return {r2 * g, {g * (2.0 * p.x - 2.0 * ux * r2), g * (2.0 * p.y - 2.0 * uy * r2)}};
  }
};

// ---------------------------------------------------------------------------
// Cat state (|beta> + e^{i phi}|-beta>)/N. With u = 2 Re(conj(alpha) beta) and
// v = 2 Im(conj(alpha) beta):
//   Q = e^{-|alpha|^2 - |beta|^2} [2 sinh^2(u/2) + 2 cos^2((v - phi)/2)] / nf,
//   nf = 1 + e^{-2|beta|^2} cos(phi),
// both brackets nonnegative, so no cancellation near the odd-cat limit.
struct CatKernel {
  double bx, by, b2;
  double phi;
  double inv_nf;

  FieldSample sample(PhasePoint p) const {
    const double r2 = p.norm2();
    const double u = 2.0 * (p.x * bx + p.y * by);
    const double v = 2.0 * (p.x * by - p.y * bx);
    const double t0 = std::exp(-r2 - b2);

    // Hyperbolic part h = t0 * 2 sinh^2(u/2) and its gradient.
    double h, hx, hy;
    if (std::abs(u) < 1.0) {
      const double sh = std::sinh(0.5 * u);
      const double two_sh2 = 2.0 * sh * sh;
      const double sinh_u = std::sinh(u);
      h = t0 * two_sh2;
      hx = t0 * (-2.0 * p.x * two_sh2 + 2.0 * bx * sinh_u);
      hy = t0 * (-2.0 * p.y * two_sh2 + 2.0 * by * sinh_u);
    } else {
      // t0 (cosh u - 1) = (T+ + T-)/2 - t0 with T+- = e^{-|alpha -+ beta|^2}.
      const double tp = std::exp(-((p.x - bx) * (p.x - bx) + (p.y - by) * (p.y - by)));
      const double tm = std::exp(-((p.x + bx) * (p.x + bx) + (p.y + by) * (p.y + by)));
      h = 0.5 * (tp + tm) - t0;
      hx = -(p.x - bx) * tp - (p.x + bx) * tm + 2.0 * p.x * t0;
      hy = -(p.y - by) * tp - (p.y + by) * tm + 2.0 * p.y * t0;
    }

    // Interference part t0 * (1 + cos(v - phi)).
    const double cv = std::cos(0.5 * (v - phi));
    const double two_c2 = 2.0 * cv * cv;
    const double sin_v = std::sin(v - phi);
    const double c = t0 * two_c2;
    const double cx = t0 * (-2.0 * p.x * two_c2 - 2.0 * by * sin_v);
    const double cy = t0 * (-2.0 * p.y * two_c2 + 2.0 * bx * sin_v);

    return {clip((h + c) * inv_nf), {(hx + cx) * inv_nf, (hy + cy) * inv_nf}};
  }
};

// ---------------------------------------------------------------------------
// Equal mixture of |beta> and |-beta> at ordering s < 1.
struct CoherentMixtureKernel {
  double bx, by;
  double s;

  FieldSample sample(PhasePoint p) const {
    const double inv = 2.0 / (1.0 - s);
    const double ux = p.x - bx, uy = p.y - by;
    const double vx = p.x + bx, vy = p.y + by;
    const double g1 = 0.5 * inv * std::exp(-inv * (ux * ux + uy * uy));
    const double g2 = 0.5 * inv * std::exp(-inv * (vx * vx + vy * vy));
    return {g1 + g2,
            {-2.0 * inv * (ux * g1 + vx * g2), -2.0 * inv * (uy * g1 + vy * g2)}};
  }
};

// ---------------------------------------------------------------------------
// Generic density matrix at the Husimi order:
//   Q = c^+ rho c,  c_m = <m|alpha> = e^{-|alpha|^2/2} alpha^m / sqrt(m!).
struct FockMatrixKernel {
  Eigen::MatrixXcd rho;
  Eigen::VectorXd diag;  // set when rho is diagonal
  bool is_diag = false;

  void amplitudes(PhasePoint p, Eigen::VectorXcd& c) const {
    const int dim = static_cast<int>(rho.rows());
    const double r2 = p.norm2();
    if (r2 == 0.0) {
      c.setZero();
      c(0) = 1.0;
      return;
    }
    const Complex alpha{p.x, p.y};
    if (0.5 * r2 < 700.0) {
      c(0) = std::exp(-0.5 * r2);
      for (int m = 1; m < dim; ++m) c(m) = c(m - 1) * alpha / std::sqrt(static_cast<double>(m));
      return;
    }
    const double log_r = 0.5 * std::log(r2);
    const double arg = std::arg(alpha);
    for (int m = 0; m < dim; ++m) {
      const double lm = -0.5 * r2 + m * log_r - 0.5 * special::log_factorial(m);
      c(m) = std::polar(std::exp(lm), m * arg);
    }
  }

  FieldSample sample(PhasePoint p) const {
    const int dim = static_cast<int>(rho.rows());
    Eigen::VectorXcd c(dim);
    amplitudes(p, c);
    const Eigen::VectorXcd v = rho * c;
    const double q = v.dot(c).real();  // conj(v) . c = c^+ rho c
    double gx = 0.0, gy = 0.0;
    for (int m = 0; m < dim; ++m) {
      const Complex prev = m > 0 ? std::sqrt(static_cast<double>(m)) * c(m - 1) : Complex{};
      const Complex dcx = -p.x * c(m) + prev;
      const Complex dcy = -p.y * c(m) + Complex{0.0, 1.0} * prev;
      gx += (std::conj(v(m)) * dcx).real();
      gy += (std::conj(v(m)) * dcy).real();
    }
    return {clip(q), {2.0 * gx, 2.0 * gy}};
  }

  RadialSample sample_radial(double r) const {
    const int dim = static_cast<int>(diag.size());
    const double r2 = r * r;
    double value = 0.0, slope = 0.0;
    if (r2 < 700.0) {
      double t = std::exp(-r2);  // e^{-r^2} r^{2n} / n!
      for (int n = 0; n < dim; ++n) {
        if (n > 0) t *= r2 / n;
        value += diag(n) * t;
        if (r > 0.0) slope += diag(n) * t * (2.0 * n / r - 2.0 * r);
      }
    } else {
      const double log_r2 = std::log(r2);
      for (int n = 0; n < dim; ++n) {
        const double t = std::exp(-r2 + n * log_r2 - special::log_factorial(n));
        value += diag(n) * t;
        slope += diag(n) * t * (2.0 * n / r - 2.0 * r);
      }
    }
    return {clip(value), slope};
  }
};

// Husimi function of a state with finite number-basis support, used as the
// smoothing input below.
using FiniteSupportHusimi = std::variant<FockRadialKernel, FockMatrixKernel>;

// ---------------------------------------------------------------------------
// s < -1 by smoothing the Husimi function:
//   W_s(alpha) = (1/w) int Q(beta) e^{-|alpha - beta|^2 / w} d^2beta/pi,
//   w = (-1 - s)/2.
// Q(beta) e^{|beta|^2} is a polynomial of degree <= 2(n_max) per axis, so the
// integrand is polynomial times the Gaussian e^{-a|beta - c|^2} with
// a = 1 + 1/w and c = alpha/(1 + w), and a tensor Gauss-Hermite rule with
// n_max + 3 nodes per axis integrates it (and its alpha-gradient) exactly.
struct SmoothedHusimiKernel {
  FiniteSupportHusimi base;
  double w;
  special::QuadratureRule rule;

  double husimi(PhasePoint p) const {
    return std::visit(Overloaded{
                          [&](const FockRadialKernel& f) {
                            return f.sample_radial(std::sqrt(p.norm2())).value;
                          },
                          [&](const FockMatrixKernel& f) { return f.sample(p).value; },
                      },
                      base);
  }

  FieldSample sample(PhasePoint alpha) const {
    const double a = 1.0 + 1.0 / w;
    const double inv_sqrt_a = 1.0 / std::sqrt(a);
    const double cx = alpha.x / (1.0 + w);
    const double cy = alpha.y / (1.0 + w);
    const double log_env = -alpha.norm2() / (1.0 + w);
    const std::size_t n = rule.nodes.size();
    special::CompensatedSum value, gx, gy;
    for (std::size_t i = 0; i < n; ++i) {
      const double bx = cx + rule.nodes[i] * inv_sqrt_a;
      for (std::size_t j = 0; j < n; ++j) {
        const double by = cy + rule.nodes[j] * inv_sqrt_a;
        const PhasePoint beta{bx, by};
        const double poly = husimi(beta) * std::exp(beta.norm2() + log_env);
        const double t = rule.weights[i] * rule.weights[j] * poly;
        value.add(t);
        gx.add(t * (alpha.x - bx));
        gy.add(t * (alpha.y - by));
      }
    }
    const double pref = 1.0 / (kPi * w * a);
    const double gpref = -2.0 * pref / w;
    return {clip(pref * value.value()), {gpref * gx.value(), gpref * gy.value()}};
  }

  bool radial() const {
    return std::visit(Overloaded{
                          [](const FockRadialKernel&) { return true; },
                          [](const FockMatrixKernel& f) { return f.is_diag; },
                      },
                      base);
  }

  RadialSample sample_radial(double r) const {
    const FieldSample s = sample(PhasePoint{r, 0.0});
    return {s.value, s.grad.dx};
  }
};

using Kernel =
    std::variant<GaussianKernel, FockRadialKernel, PhaseAveragedKernel, PhotonAddedCoherentKernel,
                 CatKernel, CoherentMixtureKernel, FockMatrixKernel, SmoothedHusimiKernel>;

FockMatrixKernel make_matrix_kernel(const FockMatrix& m) {
  FockMatrixKernel k;
  k.rho = m.rho;
  Eigen::MatrixXcd off = m.rho;
  off.diagonal().setZero();
  k.is_diag = off.cwiseAbs().maxCoeff() <= 1e-14;
  if (k.is_diag) k.diag = m.rho.diagonal().real();
  return k;
}

// Highest level with non-negligible population.
int top_level(const FockMatrix& m) {
  int top = 0;
  for (int n = 0; n < m.dim(); ++n) {
    if (std::abs(m.rho(n, n)) > 1e-300) top = n;
  }
  return top;
}

void require_smoothing_order(double s) {
  if (!(s < -1.0)) {
    throw Error(ErrorCode::kOrderingNotAdmissible,
                "Husimi smoothing needs s < -1, got " + std::to_string(s));
  }
}

}  // namespace

struct PhaseSpaceDistribution::Impl {
  Kernel kernel;
  PhasePoint center;
  double scale;
  double s;
};

PhaseSpaceDistribution::PhaseSpaceDistribution(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

PhaseSpaceDistribution::PhaseSpaceDistribution(const CheckedState& state, double s) {
  if (!s_admissible(state, s)) {
    throw Error(ErrorCode::kOrderingNotAdmissible,
                "s = " + std::to_string(s) + " is not admissible for a " +
                    std::string(state.family()) + " state");
  }
  const double spread = std::sqrt(0.5 * (1.0 - s));  // 1 at the Husimi order
  const double w = 0.5 * (-1.0 - s);                 // extra smoothing, s < -1
  auto impl = std::make_shared<Impl>(std::visit(
      Overloaded{
          [&](const Coherent& c) {
            return Impl{GaussianKernel(0.0, 0.0, 0.0, c.beta, s), PhasePoint::from(c.beta), spread,
                        s};
          },
          [&](const Thermal& t) {
            return Impl{GaussianKernel(t.nbar, 0.0, 0.0, {}, s), {},
                        std::sqrt(t.nbar + 0.5 * (1.0 - s)), s};
          },
          [&](const Gaussian& g) {
            const double sc =
                std::max(spread, std::exp(g.r) * std::sqrt(g.nbar + 0.5 * (1.0 - s)));
            return Impl{GaussianKernel(g.nbar, g.r, g.theta, g.xi, s), PhasePoint::from(g.xi), sc,
                        s};
          },
          [&](const Fock& f) {
            return Impl{FockRadialKernel(f.k, s, 1.0), {}, std::sqrt(f.k + 1.0 + std::max(w, 0.0)),
                        s};
          },
          [&](const PhotonAddedThermal& t) {
            const double lambda = std::sqrt(t.nbar + 1.0);
            return Impl{FockRadialKernel(t.k, s, lambda), {}, std::sqrt(t.k + 1.0) * lambda, s};
          },
          [&](const PhotonAddedCoherent& c) {
            return Impl{PhotonAddedCoherentKernel{c.beta.real(), c.beta.imag(),
                                                  1.0 / (1.0 + std::norm(c.beta))},
                        {}, std::abs(c.beta) + 2.0, s};
          },
          [&](const Cat& c) {
            const double b2 = std::norm(c.beta);
            const double half = std::cos(0.5 * c.phi);
            const double nf = -std::expm1(-2.0 * b2) + 2.0 * std::exp(-2.0 * b2) * half * half;
            return Impl{CatKernel{c.beta.real(), c.beta.imag(), b2, c.phi, 1.0 / nf}, {},
                        std::abs(c.beta) + 2.0, s};
          },
          [&](const CoherentMixture& m) {
            return Impl{CoherentMixtureKernel{m.beta.real(), m.beta.imag(), s}, {},
                        std::abs(m.beta) + 2.0 * spread, s};
          },
          [&](const PhaseAveragedCoherent& p) {
            return Impl{PhaseAveragedKernel{p.beta_mod, s}, {}, p.beta_mod + 2.0 * spread, s};
          },
          [&](const FockMatrix& m) {
            const double sc = std::sqrt(top_level(m) + 1.0 + std::max(w, 0.0));
            FockMatrixKernel base = make_matrix_kernel(m);
            if (s == kHusimiOrder) return Impl{std::move(base), {}, sc, s};
            const int nodes = top_level(m) + 3;
            return Impl{SmoothedHusimiKernel{std::move(base), w, special::gauss_hermite(nodes)}, {},
                        sc, s};
          },
      },
      state.spec()));
  impl_ = std::move(impl);
}

PhaseSpaceDistribution PhaseSpaceDistribution::smoothed_husimi(const CheckedState& state,
                                                                double s) {
  require_smoothing_order(s);
  const double w = 0.5 * (-1.0 - s);
  if (const auto* f = state.as<Fock>()) {
    auto impl = std::make_shared<Impl>(
        Impl{SmoothedHusimiKernel{FockRadialKernel(f->k, kHusimiOrder, 1.0), w,
                                  special::gauss_hermite(f->k + 3)},
             {}, std::sqrt(f->k + 1.0 + w), s});
    return PhaseSpaceDistribution(std::move(impl));
  }
  if (state.as<FockMatrix>()) return PhaseSpaceDistribution(state, s);
  throw Error(ErrorCode::kUnsupported,
              "Husimi smoothing is implemented for fock and fock_matrix states");
}

FieldSample PhaseSpaceDistribution::sample(PhasePoint alpha) const {
  return std::visit(
      Overloaded{
          [&](const FockRadialKernel& k) {
            const double r = std::sqrt(alpha.norm2());
            const RadialSample rs = k.sample_radial(r);
            if (r == 0.0) return FieldSample{rs.value, {}};
            return FieldSample{rs.value, {rs.slope * alpha.x / r, rs.slope * alpha.y / r}};
          },
          [&](const PhaseAveragedKernel& k) {
            const double r = std::sqrt(alpha.norm2());
            const RadialSample rs = k.sample_radial(r);
            if (r == 0.0) return FieldSample{rs.value, {}};
            return FieldSample{rs.value, {rs.slope * alpha.x / r, rs.slope * alpha.y / r}};
          },
          [&](const auto& k) { return k.sample(alpha); },
      },
      impl_->kernel);
}

double PhaseSpaceDistribution::value(PhasePoint alpha) const { return sample(alpha).value; }

Gradient PhaseSpaceDistribution::gradient(PhasePoint alpha) const { return sample(alpha).grad; }

bool PhaseSpaceDistribution::is_radial() const {
  return std::visit(Overloaded{
                        [](const GaussianKernel& k) { return k.radial(); },
                        [](const FockRadialKernel&) { return true; },
                        [](const PhaseAveragedKernel&) { return true; },
                        [](const FockMatrixKernel& k) { return k.is_diag; },
                        [](const SmoothedHusimiKernel& k) { return k.radial(); },
                        [](const auto&) { return false; },
                    },
                    impl_->kernel);
}

RadialSample PhaseSpaceDistribution::sample_radial(double radius) const {
  return std::visit(
      Overloaded{
          [&](const GaussianKernel& k) { return k.sample_radial(radius); },
          [&](const FockRadialKernel& k) { return k.sample_radial(radius); },
          [&](const PhaseAveragedKernel& k) { return k.sample_radial(radius); },
          [&](const FockMatrixKernel& k) { return k.sample_radial(radius); },
          [&](const SmoothedHusimiKernel& k) { return k.sample_radial(radius); },
          [&](const auto&) -> RadialSample {
            throw Error(ErrorCode::kUnsupported, "distribution is not radially symmetric");
          },
      },
      impl_->kernel);
}

PhasePoint PhaseSpaceDistribution::center() const { return impl_->center; }

double PhaseSpaceDistribution::scale() const { return impl_->scale; }

double PhaseSpaceDistribution::ordering() const { return impl_->s; }

bool s_admissible(const CheckedState& state, double s) {
  if (!std::isfinite(s)) return false;
  if (s == kHusimiOrder) return true;
  return std::visit(Overloaded{
                        [&](const Coherent&) { return s < 1.0; },
                        [&](const Thermal&) { return s < 1.0; },
                        [&](const PhaseAveragedCoherent&) { return s < 1.0; },
                        [&](const CoherentMixture&) { return s < 1.0; },
                        [&](const Gaussian& g) {
                          const double tau = std::max(0.0, gaussian_depth_unfloored(g.nbar, g.r));
                          return s < 1.0 - 2.0 * tau;
                        },
                        [&](const Fock&) { return s < -1.0; },
                        [&](const FockMatrix&) { return s < -1.0; },
                        [&](const auto&) { return false; },
                    },
                    state.spec());
}

double husimi_q(const CheckedState& state, PhasePoint alpha) {
  return PhaseSpaceDistribution(state).value(alpha);
}

Gradient husimi_grad(const CheckedState& state, PhasePoint alpha) {
  return PhaseSpaceDistribution(state).gradient(alpha);
}

Gradient husimi_grad_numeric(const CheckedState& state, PhasePoint alpha) {
  const PhaseSpaceDistribution q(state);
  const double h = 1e-5 * (1.0 + std::sqrt(alpha.norm2()));
  const double dx = (q.value({alpha.x + h, alpha.y}) - q.value({alpha.x - h, alpha.y})) / (2 * h);
  const double dy = (q.value({alpha.x, alpha.y + h}) - q.value({alpha.x, alpha.y - h})) / (2 * h);
  return {dx, dy};
}

double quasiprob_s(const CheckedState& state, PhasePoint alpha, double s) {
  return PhaseSpaceDistribution(state, s).value(alpha);
}

double fock_wigner(int k, double radius) {
  const double r2 = radius * radius;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return 2.0 * sign * std::exp(-2.0 * r2) * special::laguerre(k, 4.0 * r2);
}

}  // namespace phasecx
