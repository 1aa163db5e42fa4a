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
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "phasecx/errors.hpp"
#include "phasecx_app/app.hpp"

int main(int argc, char** argv) {
  using namespace phasecx::app;

  CLI::App app{"Phase-space complexity of single-mode bosonic states"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--rel-tol", opts.cfg.target_rel_tol, "Relative quadrature tolerance")
      ->capture_default_str();
  app.add_option("--radius-margin", opts.cfg.radius_margin,
                 "Half-width of the integration domain in distribution scales")
      ->capture_default_str();
  app.add_option("--max-subdivisions", opts.cfg.max_subdivisions, "Panel refinement depth limit")
      ->capture_default_str();
  app.add_option("--threads", opts.threads, "Workers for grid evaluation (0: one per core)")
      ->capture_default_str();
  app.add_flag("--json", opts.json, "Machine-readable output");

  ComputeRequest compute_req;
  std::string spec_path;
  std::optional<double> s;
  std::string route = "auto";
  auto* compute = app.add_subcommand("compute", "Complexity report of one state");
  compute->add_option("spec", spec_path, "State spec (JSON file)")->required();
  compute->add_option("--s", s, "Ordering parameter (default: Husimi, s = -1)");
  compute->add_flag("--quantifiers", compute_req.quantifiers, "Append the comparison quantifiers");
  compute->add_option("--route", route, "auto (closed forms where available) or quadrature")
      ->check(CLI::IsMember({"auto", "quadrature"}));

  std::string sweep_path;
  std::optional<std::string> sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a quantity over a parameter grid");
  sweep->add_option("spec", sweep_path, "Sweep spec (JSON file)")->required();
  sweep->add_option("-o,--out", sweep_out, "Output CSV (default: stdout)");

  std::string figure;
  std::string out_dir = ".";
  auto* figures = app.add_subcommand("figures", "Write figure data as CSV");
  figures->add_option("id", figure, "fig1a fig1b fig2 fig3_phase_averaged fig4 fig5_fock_s all")
      ->required();
  figures->add_option("-o,--out", out_dir, "Output directory")->capture_default_str();

  std::string suite;
  double energy = 1.0;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite, "propositions, table2 or prop4")
      ->required()
      ->check(CLI::IsMember({"propositions", "table2", "prop4"}));
  verify->add_option("--energy", energy, "Mean photon number for prop4")->capture_default_str();

  try {
    app.parse(argc, argv);
    opts.cfg.check();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const phasecx::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (*compute) {
    compute_req.spec_path = spec_path;
    compute_req.s = s;
    compute_req.route = route == "quadrature" ? phasecx::Route::kQuadrature
                                              : phasecx::Route::kAutomatic;
    return cmd_compute(compute_req, opts, std::cout, std::cerr);
  }
  if (*sweep) {
    std::optional<std::filesystem::path> out;
    if (sweep_out) out = *sweep_out;
    return cmd_sweep(sweep_path, out, opts, std::cout, std::cerr);
  }
  if (*figures) return cmd_figures(figure, out_dir, opts, std::cout, std::cerr);
  return cmd_verify(suite, energy, opts, std::cout, std::cerr);
}
