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
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "internal.hpp"
#include "phasecx/errors.hpp"
#include "phasecx/state_json.hpp"
#include "phasecx/states.hpp"
#include "phasecx_app/app.hpp"
#include "phasecx_app/parallel.hpp"

namespace phasecx::app {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, "sweep: " + what); }

struct Axis {
  json::json_pointer where;
  std::string column;
  std::vector<double> values;
};

bool is_range(const json& j) {
  return j.is_object() && j.contains("from") && j.contains("to") && j.contains("steps");
}

std::vector<double> expand(const json& r, const std::string& name) {
  if (!r.at("from").is_number() || !r.at("to").is_number() || !r.at("steps").is_number_integer()) {
    bad("range '" + name + "' needs numeric from/to and an integer steps");
  }
  const double from = r.at("from").get<double>();
  const double to = r.at("to").get<double>();
  const int steps = r.at("steps").get<int>();
  const std::string scale = r.value("scale", std::string("linear"));
  if (steps < 2) bad("range '" + name + "' needs steps >= 2");
  std::vector<double> v(steps);
  if (scale == "linear") {
    for (int i = 0; i < steps; ++i) v[i] = from + (to - from) * i / (steps - 1);
  } else if (scale == "log") {
    if (!(from > 0.0 && to > 0.0)) bad("log range '" + name + "' needs positive endpoints");
    const double a = std::log(from), b = std::log(to);
    for (int i = 0; i < steps; ++i) v[i] = std::exp(a + (b - a) * i / (steps - 1));
  } else {
    bad("unknown scale '" + scale + "'");
  }
  return v;
}

void find_ranges(const json& node, const json::json_pointer& at, const std::string& name,
                 std::vector<Axis>& axes) {
  if (is_range(node)) {
    axes.push_back({at, name, expand(node, name)});
    return;
  }
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      find_ranges(it.value(), at / it.key(), name.empty() ? it.key() : name + "." + it.key(),
                  axes);
    }
  }
}

QuadratureConfig apply_overrides(QuadratureConfig cfg, const json& j) {
  if (j.is_null()) return cfg;
  if (!j.is_object()) bad("'cfg' must be an object");
  if (j.contains("rel_tol")) cfg.target_rel_tol = j.at("rel_tol").get<double>();
  if (j.contains("radius_margin")) cfg.radius_margin = j.at("radius_margin").get<double>();
  if (j.contains("max_subdivisions")) cfg.max_subdivisions = j.at("max_subdivisions").get<int>();
  if (j.contains("floor_eps")) cfg.floor_eps = j.at("floor_eps").get<double>();
  cfg.check();
  return cfg;
}

enum class Quantity { kComplexity, kSComplexity, kWehrl, kFisher, kQuantifierRow };

Quantity parse_quantity(const std::string& q) {
  if (q == "complexity") return Quantity::kComplexity;
  if (q == "s_complexity") return Quantity::kSComplexity;
  if (q == "wehrl") return Quantity::kWehrl;
  if (q == "fisher") return Quantity::kFisher;
  if (q == "quantifier_row") return Quantity::kQuantifierRow;
  bad("unknown quantity '" + q + "'");
}

std::vector<std::string> quantity_columns(Quantity q) {
  switch (q) {
    case Quantity::kComplexity:
    case Quantity::kSComplexity:
      return {"s", "entropy", "fisher", "complexity", "err_entropy", "err_fisher"};
    case Quantity::kWehrl:
      return {"entropy", "err_entropy"};
    case Quantity::kFisher:
      return {"fisher", "err_fisher"};
    case Quantity::kQuantifierRow:
      return {"mandel_q",          "nonclassical_depth", "nonclassical_depth_unfloored",
              "skew_info",         "wigner_negativity",  "delta_a",
              "delta_b"};
  }
  return {};
}

using Row = std::vector<std::optional<double>>;

Row evaluate(Quantity q, const CheckedState& state, double s, const QuadratureConfig& cfg) {
  switch (q) {
    case Quantity::kComplexity:
    case Quantity::kSComplexity: {
      const ComplexityReport r = s_complexity(state, s, cfg);
      return {r.s, r.entropy, r.fisher, r.complexity, r.err_entropy, r.err_fisher};
    }
    case Quantity::kWehrl: {
      const QuadResult r = wehrl_entropy(state, cfg);
      return {r.value, r.error};
    }
    case Quantity::kFisher: {
      const QuadResult r = fisher_information(state, cfg);
      return {r.value, r.error};
    }
    case Quantity::kQuantifierRow: {
      const QuantifierRow r = quantifier_row(state, cfg);
      return {r.mandel_q,  r.nonclassical_depth, r.nonclassical_depth_unfloored, r.skew_info,
              r.wigner_negativity, r.delta_a, r.delta_b};
    }
  }
  return {};
}

}  // namespace

CsvTable sweep(const json& spec, const Options& opts) {
  if (!spec.is_object() || !spec.contains("state")) bad("missing 'state'");
  const json& tmpl = spec.at("state");
  const Quantity quantity = parse_quantity(spec.value("quantity", std::string("complexity")));
  double s = kHusimiOrder;
  if (spec.contains("s")) {
    if (!spec.at("s").is_number()) bad("'s' must be a number");
    s = spec.at("s").get<double>();
  } else if (quantity == Quantity::kSComplexity) {
    bad("s_complexity needs 's'");
  }
  const QuadratureConfig cfg = apply_overrides(opts.cfg, spec.value("cfg", json()));

  std::vector<Axis> axes;
  if (tmpl.contains("params")) find_ranges(tmpl.at("params"), json::json_pointer("/params"), "", axes);
  if (axes.empty()) bad("no range parameter in 'state'");
  if (axes.size() > 2) bad("at most two range parameters are supported");

  std::vector<std::vector<double>> points;
  for (const double a : axes[0].values) {
    if (axes.size() == 1) {
      points.push_back({a});
    } else {
      for (const double b : axes[1].values) points.push_back({a, b});
    }
  }

  const std::vector<Row> rows = parallel_map(points.size(), opts.threads, [&](std::size_t i) {
    json j = tmpl;
    for (std::size_t a = 0; a < axes.size(); ++a) j[axes[a].where] = points[i][a];
    const CheckedState state = validate(state_spec_from_json(j));
    Row row(points[i].begin(), points[i].end());
    const Row values = evaluate(quantity, state, s, cfg);
    row.insert(row.end(), values.begin(), values.end());
    return row;
  });

  CsvTable table;
  table.name = "sweep";
  std::string grid = tmpl.value("family", std::string("state"));
  for (const Axis& a : axes) {
    grid += " " + a.column + "[" + format_number(a.values.front()) + ".." +
            format_number(a.values.back()) + " x" + std::to_string(a.values.size()) + "]";
    table.columns.push_back(a.column);
  }
  table.grid = grid;
  for (const auto& c : quantity_columns(quantity)) table.columns.push_back(c);
  table.rows = rows;
  table.cfg = cfg;
  return table;
}

int cmd_sweep(const std::filesystem::path& spec_path,
              const std::optional<std::filesystem::path>& out_path, const Options& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const CsvTable table = sweep(read_json_file(spec_path), opts);
        if (!out_path) {
          write_csv(table, out);
          return kExitOk;
        }
        std::ostringstream buf;
        write_csv(table, buf);
        std::ofstream file(*out_path, std::ios::binary);
        if (!file) throw Error(ErrorCode::kParse, "cannot write " + out_path->string());
        file << buf.str();
        return kExitOk;
      },
      err);
}

}  // namespace phasecx::app
