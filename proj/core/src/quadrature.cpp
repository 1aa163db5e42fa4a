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
#include "phasecx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <utility>

#include "phasecx/errors.hpp"
#include "phasecx/special.hpp"

namespace phasecx {
namespace {

// Gauss-Kronrod 7/15 abscissae on [-1, 1], listed from the outermost node
// inwards, with the Kronrod weights and the Gauss weights of the odd entries.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kNodes = 15;

struct Rule15 {
  std::array<double, kNodes> t{};
  std::array<double, kNodes> wk{};
  std::array<double, kNodes> wg{};
};

constexpr Rule15 make_rule() {
  Rule15 r;
  for (int i = 0; i < 7; ++i) {
    r.t[i] = -kXgk[i];
    r.t[kNodes - 1 - i] = kXgk[i];
    r.wk[i] = r.wk[kNodes - 1 - i] = kWgk[i];
    const double g = (i % 2 == 1) ? kWg[i / 2] : 0.0;
    r.wg[i] = r.wg[kNodes - 1 - i] = g;
  }
  r.t[7] = 0.0;
  r.wk[7] = kWgk[7];
  r.wg[7] = kWg[3];
  return r;
}

constexpr Rule15 kRule = make_rule();

struct Estimate {
  Components value{};
  Components abs{};
  Components err{};
};

[[noreturn]] void fail_non_finite(double where_a, double where_b) {
  throw Error(ErrorCode::kNoConvergence, "integrand is not finite near (" +
                                             std::to_string(where_a) + ", " +
                                             std::to_string(where_b) + ")");
}

struct PlanePolicy {
  struct Region {
    double cx, cy, hx, hy;
    int depth;
  };
  static constexpr int kChildren = 4;

  const PlaneVectorFunction* f;
  std::size_t ncomp;

  Estimate evaluate(const Region& reg) const {
    Components k{}, g{}, a{}, sample{};
    for (int i = 0; i < kNodes; ++i) {
      const double x = reg.cx + reg.hx * kRule.t[i];
      Components ki{}, gi{}, ai{};
      for (int j = 0; j < kNodes; ++j) {
        const double y = reg.cy + reg.hy * kRule.t[j];
        sample.fill(0.0);
        (*f)(PhasePoint{x, y}, sample);
        for (std::size_t c = 0; c < ncomp; ++c) {
          const double v = sample[c];
          if (!std::isfinite(v)) fail_non_finite(x, y);
          ki[c] += kRule.wk[j] * v;
          gi[c] += kRule.wg[j] * v;
          ai[c] += kRule.wk[j] * std::abs(v);
        }
      }
      for (std::size_t c = 0; c < ncomp; ++c) {
        k[c] += kRule.wk[i] * ki[c];
        g[c] += kRule.wg[i] * gi[c];
        a[c] += kRule.wk[i] * ai[c];
      }
    }
    const double jac = reg.hx * reg.hy / std::numbers::pi;
    Estimate e;
    for (std::size_t c = 0; c < ncomp; ++c) {
      e.value[c] = jac * k[c];
      e.abs[c] = jac * a[c];
      e.err[c] = jac * std::abs(k[c] - g[c]);
    }
    return e;
  }

  std::array<Region, kChildren> split(const Region& r) const {
    const double hx = 0.5 * r.hx;
    const double hy = 0.5 * r.hy;
    const int d = r.depth + 1;
    return {Region{r.cx - hx, r.cy - hy, hx, hy, d}, Region{r.cx + hx, r.cy - hy, hx, hy, d},
            Region{r.cx - hx, r.cy + hy, hx, hy, d}, Region{r.cx + hx, r.cy + hy, hx, hy, d}};
  }

  static int depth(const Region& r) { return r.depth; }
};

struct RadialPolicy {
  struct Region {
    double c, h;
    int depth;
  };
  static constexpr int kChildren = 2;

  const RadialVectorFunction* g;
  std::size_t ncomp;

  Estimate evaluate(const Region& reg) const {
    Components k{}, gs{}, a{}, sample{};
    for (int i = 0; i < kNodes; ++i) {
      const double r = reg.c + reg.h * kRule.t[i];
      sample.fill(0.0);
      (*g)(r, sample);
      for (std::size_t c = 0; c < ncomp; ++c) {
        const double v = 2.0 * r * sample[c];
        if (!std::isfinite(v)) fail_non_finite(r, 0.0);
        k[c] += kRule.wk[i] * v;
        gs[c] += kRule.wg[i] * v;
        a[c] += kRule.wk[i] * std::abs(v);
      }
    }
    Estimate e;
    for (std::size_t c = 0; c < ncomp; ++c) {
      e.value[c] = reg.h * k[c];
      e.abs[c] = reg.h * a[c];
      e.err[c] = reg.h * std::abs(k[c] - gs[c]);
    }
    return e;
  }

  std::array<Region, kChildren> split(const Region& r) const {
    const double h = 0.5 * r.h;
    return {Region{r.c - h, h, r.depth + 1}, Region{r.c + h, h, r.depth + 1}};
  }

  static int depth(const Region& r) { return r.depth; }
};

// Globally adaptive refinement: the region with the largest normalized error
// is split until every component meets err <= tol * integral |f|. The order of
// operations depends only on the integrand values, which makes the result
// deterministic.
template <class Policy>
std::vector<QuadResult> adapt(const Policy& policy,
                              const std::vector<typename Policy::Region>& initial,
                              std::size_t ncomp, const QuadratureConfig& cfg,
                              std::size_t max_regions) {
  using Region = typename Policy::Region;
  struct Node {
    Region region;
    Estimate est;
    bool alive;
  };
  std::vector<Node> nodes;
  nodes.reserve(initial.size() * 4);

  Components total_value{}, total_abs{}, total_err{};
  auto add_totals = [&](const Estimate& e, double sign) {
    for (std::size_t c = 0; c < ncomp; ++c) {
      total_value[c] += sign * e.value[c];
      total_abs[c] += sign * e.abs[c];
      total_err[c] += sign * e.err[c];
    }
  };

  for (const Region& r : initial) {
    nodes.push_back(Node{r, policy.evaluate(r), true});
    add_totals(nodes.back().est, 1.0);
  }

  Components norm{};
  auto priority = [&](const Estimate& e) {
    double p = 0.0;
    for (std::size_t c = 0; c < ncomp; ++c) p = std::max(p, e.err[c] / norm[c]);
    return p;
  };
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry> heap;

  auto rebuild = [&] {
    total_value.fill(0.0);
    total_abs.fill(0.0);
    total_err.fill(0.0);
    for (const Node& n : nodes) {
      if (n.alive) add_totals(n.est, 1.0);
    }
    for (std::size_t c = 0; c < ncomp; ++c) {
      norm[c] = std::max(total_abs[c], 1e-300);
    }
    heap = {};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      if (n.alive && Policy::depth(n.region) < cfg.max_subdivisions) {
        heap.emplace(priority(n.est), i);
      }
    }
  };

  auto converged = [&] {
    for (std::size_t c = 0; c < ncomp; ++c) {
      if (total_err[c] > cfg.target_rel_tol * total_abs[c]) return false;
    }
    return true;
  };

  rebuild();
  std::size_t next_rebuild = 2 * nodes.size();
  while (!converged()) {
    if (heap.empty()) {
      throw Error(ErrorCode::kNoConvergence,
                  "refinement depth " + std::to_string(cfg.max_subdivisions) +
                      " exhausted before reaching rel_tol " +
                      std::to_string(cfg.target_rel_tol));
    }
    if (nodes.size() + Policy::kChildren > max_regions) {
      throw Error(ErrorCode::kNoConvergence,
                  "region budget of " + std::to_string(max_regions) + " exhausted");
    }
    const std::size_t index = heap.top().second;
    heap.pop();
    nodes[index].alive = false;
    add_totals(nodes[index].est, -1.0);
    const auto children = policy.split(nodes[index].region);
    for (const Region& child : children) {
      nodes.push_back(Node{child, policy.evaluate(child), true});
      const Node& n = nodes.back();
      add_totals(n.est, 1.0);
      if (Policy::depth(child) < cfg.max_subdivisions) {
        heap.emplace(priority(n.est), nodes.size() - 1);
      }
    }
    if (nodes.size() >= next_rebuild) {
      rebuild();
      next_rebuild = 2 * nodes.size();
    }
  }

  std::vector<QuadResult> out(ncomp);
  for (std::size_t c = 0; c < ncomp; ++c) {
    special::CompensatedSum value, err;
    for (const Node& n : nodes) {
      if (!n.alive) continue;
      value.add(n.est.value[c]);
      err.add(n.est.err[c]);
    }
    out[c] = QuadResult{value.value(), err.value()};
  }
  return out;
}

constexpr std::size_t kMaxPlaneRegions = 200000;
constexpr std::size_t kMaxRadialRegions = 1 << 20;

int initial_cells(const QuadratureConfig& cfg) {
  return std::max(4, static_cast<int>(std::ceil(2.0 * cfg.radius_margin)));
}

void check_scale(double scale) {
  if (!(std::isfinite(scale) && scale > 0.0)) {
    throw Error(ErrorCode::kBadParameter, "integration scale must be finite and > 0");
  }
}

void check_components(std::size_t n) {
  if (n == 0 || n > kMaxComponents) {
    throw Error(ErrorCode::kBadParameter, "between 1 and 4 integrands are supported");
  }
}

}  // namespace

void QuadratureConfig::check() const {
  if (!(radius_margin > 0.0) || !std::isfinite(radius_margin)) {
    throw Error(ErrorCode::kBadParameter, "radius_margin must be > 0");
  }
  if (!(target_rel_tol > 0.0 && target_rel_tol < 1.0)) {
    throw Error(ErrorCode::kBadParameter, "target_rel_tol must lie in (0, 1)");
  }
  if (max_subdivisions < 1) {
    throw Error(ErrorCode::kBadParameter, "max_subdivisions must be >= 1");
  }
  if (!(floor_eps > 0.0)) {
    throw Error(ErrorCode::kBadParameter, "floor_eps must be > 0");
  }
}

std::vector<QuadResult> integrate_plane(const PlaneVectorFunction& f, std::size_t components,
                                        PhasePoint center, double scale,
                                        const QuadratureConfig& cfg) {
  cfg.check();
  check_scale(scale);
  check_components(components);
  const double radius = cfg.radius_margin * scale;
  const int cells = initial_cells(cfg);
  const double h = radius / cells;
  std::vector<PlanePolicy::Region> initial;
  initial.reserve(static_cast<std::size_t>(cells) * cells);
  for (int j = 0; j < cells; ++j) {
    for (int i = 0; i < cells; ++i) {
      initial.push_back({center.x - radius + (2 * i + 1) * h,
                         center.y - radius + (2 * j + 1) * h, h, h, 0});
    }
  }
  return adapt(PlanePolicy{&f, components}, initial, components, cfg, kMaxPlaneRegions);
}

QuadResult integrate_plane(const PlaneFunction& f, PhasePoint center, double scale,
                           const QuadratureConfig& cfg) {
  const PlaneVectorFunction wrapped = [&f](PhasePoint p, Components& out) { out[0] = f(p); };
  return integrate_plane(wrapped, 1, center, scale, cfg).front();
}

std::vector<QuadResult> integrate_radial(const RadialVectorFunction& g, std::size_t components,
                                         double scale, const QuadratureConfig& cfg,
                                         std::span<const double> breakpoints) {
  cfg.check();
  check_scale(scale);
  check_components(components);
  const double radius = cfg.radius_margin * scale;
  const int cells = initial_cells(cfg);
  std::vector<double> edges;
  edges.reserve(cells + 1 + breakpoints.size());
  for (int i = 0; i <= cells; ++i) edges.push_back(radius * i / cells);
  for (double b : breakpoints) {
    if (b > 0.0 && b < radius) edges.push_back(b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<RadialPolicy::Region> initial;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double h = 0.5 * (edges[i + 1] - edges[i]);
    if (h > 0.0) initial.push_back({edges[i] + h, h, 0});
  }
  return adapt(RadialPolicy{&g, components}, initial, components, cfg, kMaxRadialRegions);
}

QuadResult integrate_radial(const RadialFunction& g, double scale, const QuadratureConfig& cfg,
                            std::span<const double> breakpoints) {
  const RadialVectorFunction wrapped = [&g](double r, Components& out) { out[0] = g(r); };
  return integrate_radial(wrapped, 1, scale, cfg, breakpoints).front();
}

}  // namespace phasecx
