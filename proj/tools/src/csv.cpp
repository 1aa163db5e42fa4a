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
#include "phasecx_app/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "phasecx/errors.hpp"
#include "phasecx_app/app.hpp"

namespace phasecx::app {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::uint64_t config_hash(const QuadratureConfig& cfg, std::string_view grid) {
  std::string key = "rel_tol=" + format_number(cfg.target_rel_tol) +
                    ";radius_margin=" + format_number(cfg.radius_margin) +
                    ";max_subdivisions=" + std::to_string(cfg.max_subdivisions) +
                    ";floor_eps=" + format_number(cfg.floor_eps) + ";grid=";
  key += grid;
  return fnv1a(key);
}

void write_csv(const CsvTable& table, std::ostream& out) {
  for (const auto& row : table.rows) {
    for (const auto& cell : row) {
      if (cell && !std::isfinite(*cell)) {
        throw Error(ErrorCode::kNoConvergence, "non-finite value in " + table.name);
      }
    }
  }
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(config_hash(table.cfg, table.grid)));
  out << "# phasecx " << kVersion << " config=" << hash << " grid: " << table.grid << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (row[i]) out << format_number(*row[i]);
    }
    out << '\n';
  }
}

}  // namespace phasecx::app
