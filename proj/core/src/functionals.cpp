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
#include "phasecx/functionals.hpp"

#include <cmath>
#include <optional>

#include "phasecx/closedform.hpp"

namespace phasecx {
namespace {

// Integrand triple [W, -W ln W, |grad W|^2 / (4W)] with the floor applied to
// the two singular terms.
void fill(double w, double grad2, double floor_eps, Components& out) {
  out[0] = w;
  if (w < floor_eps) {
    out[1] = 0.0;
    out[2] = 0.0;
    return;
  }
  out[1] = -w * std::log(w);
  out[2] = 0.25 * grad2 / w;
}

struct GaussianParams {
  double nbar;
  double r;
};

std::optional<GaussianParams> gaussian_params(const CheckedState& state) {
  if (state.as<Coherent>()) return GaussianParams{0.0, 0.0};
  if (const auto* t = state.as<Thermal>()) return GaussianParams{t->nbar, 0.0};
  if (const auto* g = state.as<Gaussian>()) return GaussianParams{g->nbar, g->r};
  return std::nullopt;
}

ComplexityReport from_closed(const ClosedComplexity& c, double s) {
  ComplexityReport rep;
  rep.entropy = c.entropy;
  rep.fisher = c.fisher;
  rep.complexity = c.complexity;
  rep.s = s;
  rep.method = Method::kClosedForm;
  return rep;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kClosedForm:
      return "closed_form";
    case Method::kQuadrature:
      return "quadrature";
  }
  return "unknown";
}

DistributionFunctionals evaluate_functionals(const PhaseSpaceDistribution& w,
                                             const QuadratureConfig& cfg) {
  cfg.check();
  const double floor_eps = cfg.floor_eps;
  std::vector<QuadResult> res;
  if (w.is_radial()) {
    res = integrate_radial(
        [&](double r, Components& out) {
          const RadialSample rs = w.sample_radial(r);
          fill(rs.value, rs.slope * rs.slope, floor_eps, out);
        },
        3, w.scale(), cfg);
  } else {
    res = integrate_plane(
        [&](PhasePoint p, Components& out) {
          const FieldSample fs = w.sample(p);
          fill(fs.value, fs.grad.norm2(), floor_eps, out);
        },
        3, w.center(), w.scale(), cfg);
  }
  return {res[0], res[1], res[2]};
}

QuadResult wehrl_entropy(const CheckedState& state, const QuadratureConfig& cfg) {
  return evaluate_functionals(PhaseSpaceDistribution(state), cfg).entropy;
}

QuadResult fisher_information(const CheckedState& state, const QuadratureConfig& cfg) {
  return evaluate_functionals(PhaseSpaceDistribution(state), cfg).fisher;
}

ComplexityReport s_complexity(const PhaseSpaceDistribution& w, const QuadratureConfig& cfg) {
  const DistributionFunctionals f = evaluate_functionals(w, cfg);
  ComplexityReport rep;
  rep.entropy = f.entropy.value;
  rep.fisher = f.fisher.value;
  rep.complexity = std::exp(rep.entropy - 1.0) * rep.fisher;
  rep.s = w.ordering();
  rep.err_entropy = f.entropy.error;
  rep.err_fisher = f.fisher.error;
  rep.method = Method::kQuadrature;
  return rep;
}

ComplexityReport complexity(const CheckedState& state, const QuadratureConfig& cfg, Route route) {
  return s_complexity(state, kHusimiOrder, cfg, route);
}

ComplexityReport s_complexity(const CheckedState& state, double s, const QuadratureConfig& cfg,
                              Route route) {
  // Validates the ordering for every route.
  const PhaseSpaceDistribution w(state, s);
  if (route == Route::kAutomatic) {
    if (const auto g = gaussian_params(state)) {
      return from_closed(s_gaussian_closed(g->nbar, g->r, s), s);
    }
  }
  return s_complexity(w, cfg);
}

}  // namespace phasecx
