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
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "phasecx/errors.hpp"
#include "phasecx/states.hpp"
#include "phasecx_app/app.hpp"
#include "phasecx_app/parallel.hpp"

namespace phasecx::app {
namespace {

constexpr double kPi = std::numbers::pi;

using Row = std::vector<std::optional<double>>;

// One curve: a state built from the grid value, evaluated at ordering s.
struct Curve {
  std::string name;
  std::string grid;
  std::vector<std::string> columns;
  std::vector<double> xs;
  std::function<Row(double)> row;
};

// Grid values are generated from integer indices so they are exact multiples
// of the step.
std::vector<double> grid(double from, double step, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = from + step * i;
  return v;
}

std::string label(double v) {
  std::string s = format_number(v);
  for (char& c : s) {
    if (c == '.') c = 'p';
    if (c == '-') c = 'm';
  }
  return s;
}

double husimi_c(const StateSpec& spec, const QuadratureConfig& cfg) {
  return complexity(validate(spec), cfg).complexity;
}

double ordered_c(const StateSpec& spec, double s, const QuadratureConfig& cfg) {
  return s_complexity(validate(spec), s, cfg).complexity;
}

std::vector<Curve> curves(const std::string& id, const QuadratureConfig& cfg) {
  std::vector<Curve> out;
  if (id == "fig1a") {
    for (const double r : {0.5, 1.0, 1.5, 2.0}) {
      out.push_back({"fig1a_r" + label(r), "nbar 0..10 step 0.25, r=" + format_number(r),
                     {"nbar", "r", "C"}, grid(0.0, 0.25, 41), [r, cfg](double n) {
                       return Row{n, r, husimi_c(Gaussian{n, r, 0.0, {}}, cfg)};
                     }});
    }
  } else if (id == "fig1b") {
    for (const double n : {0.1, 1.0, 10.0}) {
      out.push_back({"fig1b_nbar" + label(n), "r 0..5 step 0.1, nbar=" + format_number(n),
                     {"r", "nbar", "C", "log10_C"}, grid(0.0, 0.1, 51), [n, cfg](double r) {
                       const double c = husimi_c(Gaussian{n, r, 0.0, {}}, cfg);
                       return Row{r, n, c, std::log10(c)};
                     }});
    }
  } else if (id == "fig2") {
    out.push_back({"fig2_photon_added_coherent", "|beta| 0.05..4 step 0.05, real beta",
                   {"beta", "C"}, grid(0.05, 0.05, 80), [cfg](double b) {
                     return Row{b, husimi_c(PhotonAddedCoherent{{b, 0.0}}, cfg)};
                   }});
  } else if (id == "fig3_phase_averaged") {
    for (const double b : {0.5, 1.0, 1.5}) {
      out.push_back({"fig3_phase_averaged_beta" + label(b),
                     "s -1..0.9 step 0.05, |beta|=" + format_number(b),
                     {"s", "beta_mod", "C_s"}, grid(-1.0, 0.05, 39), [b, cfg](double s) {
                       return Row{s, b, ordered_c(PhaseAveragedCoherent{b}, s, cfg)};
                     }});
    }
  } else if (id == "fig4") {
    const std::vector<double> betas = grid(0.05, 0.05, 60);
    const std::string g = "beta 0.05..3 step 0.05, real beta";
    out.push_back({"fig4_mixture", g, {"beta", "C"}, betas, [cfg](double b) {
                     return Row{b, husimi_c(CoherentMixture{{b, 0.0}}, cfg)};
                   }});
    const std::vector<std::pair<std::string, double>> phases = {
        {"0", 0.0},           {"pi_4", kPi / 4},        {"pi_2", kPi / 2},
        {"3pi_4", 3 * kPi / 4}, {"9pi_10", 9 * kPi / 10}, {"pi", kPi}};
    for (const auto& [name, phi] : phases) {
      out.push_back({"fig4_cat_phi_" + name, g + ", phi=" + name, {"beta", "phi", "C"}, betas,
                     [phi = phi, cfg](double b) {
                       return Row{b, phi, husimi_c(Cat{{b, 0.0}, phi}, cfg)};
                     }});
    }
  } else if (id == "fig5_fock_s") {
    for (const int k : {1, 2, 3, 4}) {
      out.push_back({"fig5_fock_s_k" + std::to_string(k), "s -20..-1 step 0.25, k=" + std::to_string(k),
                     {"s", "k", "C_s"}, grid(-20.0, 0.25, 77), [k, cfg](double s) {
                       return Row{s, static_cast<double>(k), ordered_c(Fock{k}, s, cfg)};
                     }});
    }
  } else {
    throw Error(ErrorCode::kBadParameter, "unknown figure '" + id + "'");
  }
  return out;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig1a", "fig1b", "fig2",
                                               "fig3_phase_averaged", "fig4", "fig5_fock_s"};
  return ids;
}

std::vector<CsvTable> figure_tables(const std::string& id, const Options& opts) {
  const std::vector<Curve> cs = curves(id, opts.cfg);
  // Flatten every (curve, point) pair into one job list so workers stay busy
  // across curves.
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    for (std::size_t i = 0; i < cs[c].xs.size(); ++i) jobs.emplace_back(c, i);
  }
  const std::vector<Row> rows = parallel_map(jobs.size(), opts.threads, [&](std::size_t j) {
    const auto [c, i] = jobs[j];
    return cs[c].row(cs[c].xs[i]);
  });
  std::vector<CsvTable> tables;
  std::size_t next = 0;
  for (const Curve& c : cs) {
    CsvTable t;
    t.name = c.name;
    t.grid = c.grid;
    t.columns = c.columns;
    t.cfg = opts.cfg;
    for (std::size_t i = 0; i < c.xs.size(); ++i) t.rows.push_back(rows[next++]);
    tables.push_back(std::move(t));
  }
  return tables;
}

int cmd_figures(const std::string& id, const std::filesystem::path& out_dir, const Options& opts,
                std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        std::vector<std::string> ids;
        if (id == "all") {
          ids = figure_ids();
        } else {
          bool known = false;
          for (const auto& f : figure_ids()) known = known || f == id;
          if (!known) throw Error(ErrorCode::kBadParameter, "unknown figure '" + id + "'");
          ids = {id};
        }
        std::filesystem::create_directories(out_dir);
        nlohmann::json written = nlohmann::json::array();
        for (const auto& fig : ids) {
          // Everything is computed and formatted before the first file is
          // opened, so a failure leaves no partial output for this figure.
          std::vector<std::pair<std::filesystem::path, std::string>> files;
          for (const CsvTable& t : figure_tables(fig, opts)) {
            std::ostringstream buf;
            write_csv(t, buf);
            files.emplace_back(out_dir / (t.name + ".csv"), buf.str());
          }
          for (const auto& [path, text] : files) {
            std::ofstream f(path, std::ios::binary);
            f << text;
            if (!f) throw Error(ErrorCode::kParse, "cannot write " + path.string());
            written.push_back(path.string());
            if (!opts.json) out << path.string() << '\n';
          }
        }
        if (opts.json) out << nlohmann::json{{"files", written}}.dump(2) << '\n';
        return kExitOk;
      },
      err);
}

}  // namespace phasecx::app
