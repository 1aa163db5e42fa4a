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
#ifndef PHASECX_APP_CSV_HPP_
#define PHASECX_APP_CSV_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phasecx/quadrature.hpp"

namespace phasecx::app {

/// One CSV file: a '#' metadata line, a header and numeric rows. Empty
/// optionals are written as empty cells.
struct CsvTable {
  std::string name;  // file stem
  std::string grid;  // sample grid, copied into the metadata line
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
  QuadratureConfig cfg;  // configuration the rows were computed with
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

/// Hash of the numerical configuration and the grid description.
std::uint64_t config_hash(const QuadratureConfig& cfg, std::string_view grid);

/// Throws Error(kNoConvergence) on a non-finite value, before writing anything.
void write_csv(const CsvTable& table, std::ostream& out);

std::string format_number(double v);

}  // namespace phasecx::app

#endif  // PHASECX_APP_CSV_HPP_
