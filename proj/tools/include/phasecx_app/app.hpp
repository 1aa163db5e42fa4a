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
#ifndef PHASECX_APP_APP_HPP_
#define PHASECX_APP_APP_HPP_

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phasecx/functionals.hpp"
#include "phasecx/quadrature.hpp"
#include "phasecx/quantifiers.hpp"
#include "phasecx_app/csv.hpp"

namespace phasecx::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNoConvergence = 3;

inline constexpr const char* kVersion = "0.1.0";

struct Options {
  QuadratureConfig cfg;
  int threads = 1;
  bool json = false;
};

/// Runs fn, mapping exceptions to exit codes: Error(kNoConvergence) -> 3,
/// any other library or I/O error -> 2, with the message on err.
int guarded(const std::function<int()>& fn, std::ostream& err);

nlohmann::json report_to_json(const ComplexityReport& rep);
nlohmann::json quantifiers_to_json(const QuantifierRow& row);

// compute ------------------------------------------------------------------

struct ComputeRequest {
  std::filesystem::path spec_path;
  std::optional<double> s;
  bool quantifiers = false;
  Route route = Route::kAutomatic;
};

nlohmann::json compute(const ComputeRequest& req, const Options& opts);
int cmd_compute(const ComputeRequest& req, const Options& opts, std::ostream& out,
                std::ostream& err);

// sweep --------------------------------------------------------------------

/// {"state": <state spec with range objects>, "quantity": "...", "s": x,
///  "cfg": {"rel_tol": .., "radius_margin": .., "max_subdivisions": ..}}.
/// A range object is {"from": a, "to": b, "steps": n, "scale": "linear"|"log"};
/// at most two may appear.
CsvTable sweep(const nlohmann::json& spec, const Options& opts);
int cmd_sweep(const std::filesystem::path& spec_path,
              const std::optional<std::filesystem::path>& out_path, const Options& opts,
              std::ostream& out, std::ostream& err);

// figures ------------------------------------------------------------------

/// fig1a fig1b fig2 fig3_phase_averaged fig4 fig5_fock_s.
const std::vector<std::string>& figure_ids();

/// All curves of one figure ("all" is not accepted here).
std::vector<CsvTable> figure_tables(const std::string& id, const Options& opts);

/// Writes <out_dir>/<name>.csv per curve. "all" runs every figure.
int cmd_figures(const std::string& id, const std::filesystem::path& out_dir, const Options& opts,
                std::ostream& out, std::ostream& err);

// verify -------------------------------------------------------------------

struct Check {
  std::string name;
  bool passed = false;
  double deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Suites: propositions, table2, prop4.
std::vector<Check> verify_suite(const std::string& suite, double energy, const Options& opts);
int cmd_verify(const std::string& suite, double energy, const Options& opts, std::ostream& out,
               std::ostream& err);

}  // namespace phasecx::app

#endif  // PHASECX_APP_APP_HPP_
