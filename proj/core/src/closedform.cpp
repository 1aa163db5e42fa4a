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
#include "phasecx/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phasecx/errors.hpp"
#include "phasecx/special.hpp"

namespace phasecx {
namespace {

void require_gaussian_params(double nbar, double r) {
  if (!(nbar >= 0.0) || !(r >= 0.0) || !std::isfinite(nbar) || !std::isfinite(r)) {
    throw Error(ErrorCode::kBadParameter, "need finite nbar >= 0 and r >= 0");
  }
}

ClosedComplexity from_moments(const GaussianMoments& m) {
  return {1.0 + 0.5 * std::log(m.delta), m.a / (2.0 * m.delta),
          m.a / (2.0 * std::sqrt(m.delta))};
}

struct SurfacePoint {
  double n;
  double t;
};

ConstrainedPoint on_surface(double energy, SurfacePoint p) {
  const double rest = std::max(energy - p.n, 0.0);
  ConstrainedPoint out;
  out.nbar = p.n;
  out.r = std::asinh(std::sqrt(p.t * rest / (2.0 * p.n + 1.0)));
  out.xi_mod = std::sqrt((1.0 - p.t) * rest);
  out.complexity = gaussian_closed(out.nbar, out.r).complexity;
  return out;
}

}  // namespace

GaussianMoments gaussian_moments(double nbar, double r) {
  require_gaussian_params(nbar, r);
  const double sh = std::sinh(r);
  const double w = 2.0 * nbar + 1.0;
  return {(nbar + 1.0) * (nbar + 1.0) + w * sh * sh, 1.0 + w * std::cosh(2.0 * r),
          (nbar + 0.5) * std::sinh(2.0 * r)};
}

GaussianMoments s_gaussian_moments(double nbar, double r, double s) {
  require_gaussian_params(nbar, r);
  const double sh = std::sinh(r);
  const double w = 2.0 * nbar + 1.0;
  const double shifted = nbar + 0.5 * (1.0 - s);
  return {shifted * shifted - s * w * sh * sh, -s + w * std::cosh(2.0 * r),
          (nbar + 0.5) * std::sinh(2.0 * r)};
}

double gaussian_depth_unfloored(double nbar, double r) {
  const double t = std::tanh(r);
  return ((nbar + 1.0) * t - nbar) / (1.0 + t);
}

double gaussian_ordering_limit(double nbar, double r) {
  return (2.0 * nbar + 1.0) * std::exp(-2.0 * r);
}

ClosedComplexity gaussian_closed(double nbar, double r) {
  return from_moments(gaussian_moments(nbar, r));
}

ClosedComplexity s_gaussian_closed(double nbar, double r, double s) {
  require_gaussian_params(nbar, r);
  if (!(s < gaussian_ordering_limit(nbar, r))) {
    throw Error(ErrorCode::kOrderingNotAdmissible,
                "s = " + std::to_string(s) + " is not below the Gaussian limit " +
                    std::to_string(gaussian_ordering_limit(nbar, r)));
  }
  const GaussianMoments m = s_gaussian_moments(nbar, r, s);
  if (!(m.delta > 0.0)) {
    throw Error(ErrorCode::kOrderingNotAdmissible, "Delta_s is not positive");
  }
  return from_moments(m);
}

FockClosed fock_closed(int k) {
  if (k < 0) throw Error(ErrorCode::kBadParameter, "k must be >= 0");
  const double log_fact = special::log_factorial(k);
  const double exponent = k - k * special::digamma_int_plus_one(k);
  return {1.0 + log_fact + exponent, std::exp(log_fact + exponent)};
}

double gaussian_energy(double nbar, double r, double xi_mod) {
  const double sh = std::sinh(r);
  return nbar + xi_mod * xi_mod + (2.0 * nbar + 1.0) * sh * sh;
}

EnergyExtremes optimal_gaussian_at_energy(double energy) {
  if (!(energy >= 0.0) || !std::isfinite(energy)) {
    throw Error(ErrorCode::kBadParameter, "energy must be finite and >= 0");
  }
  EnergyExtremes out;
  out.most_complex = Gaussian{0.0, std::log(std::sqrt(energy) + std::sqrt(energy + 1.0)), 0.0, {}};
  out.c_max = std::sqrt(energy + 1.0);
  out.c_min = 1.0;
  return out;
}

ConstrainedSearch search_gaussian_at_energy(double energy, int grid, int refinements) {
  if (!(energy >= 0.0) || !std::isfinite(energy)) {
    throw Error(ErrorCode::kBadParameter, "energy must be finite and >= 0");
  }
  if (grid < 3) throw Error(ErrorCode::kBadParameter, "grid must be >= 3");
  ConstrainedSearch out;

  // Coarse scan of the whole surface for both extremes.
  SurfacePoint best_max{0.0, 0.0};
  out.max.complexity = -1.0;
  out.min_unsqueezed.complexity = 1e300;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const SurfacePoint p{energy * i / (grid - 1.0), 1.0 * j / (grid - 1.0)};
      const ConstrainedPoint c = on_surface(energy, p);
      ++out.evaluations;
      if (c.complexity > out.max.complexity) {
        out.max = c;
        best_max = p;
      }
      if (c.complexity < out.min_unsqueezed.complexity) {
        out.min_unsqueezed = c;
      }
    }
  }

  // Zoom around the maximizer: each pass re-grids +/- two cells around the
  // current best point, clamped to the parameter box.
  double half_n = 2.0 * energy / (grid - 1.0);
  double half_t = 2.0 / (grid - 1.0);
  for (int pass = 0; pass < refinements; ++pass) {
    const double n_lo = std::max(0.0, best_max.n - half_n);
    const double n_hi = std::min(energy, best_max.n + half_n);
    const double t_lo = std::max(0.0, best_max.t - half_t);
    const double t_hi = std::min(1.0, best_max.t + half_t);
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        const SurfacePoint p{n_lo + (n_hi - n_lo) * i / (grid - 1.0),
                             t_lo + (t_hi - t_lo) * j / (grid - 1.0)};
        const ConstrainedPoint c = on_surface(energy, p);
        ++out.evaluations;
        if (c.complexity > out.max.complexity) {
          out.max = c;
          best_max = p;
        }
      }
    }
    half_n = 2.0 * (n_hi - n_lo) / (grid - 1.0);
    half_t = 2.0 * (t_hi - t_lo) / (grid - 1.0);
  }
  return out;
}

}  // namespace phasecx
