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
#ifndef PHASECX_TOOLS_SRC_INTERNAL_HPP_
#define PHASECX_TOOLS_SRC_INTERNAL_HPP_

#include <filesystem>

#include <nlohmann/json.hpp>

namespace phasecx::app {

/// Throws Error(kParse) on unreadable or malformed files.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace phasecx::app

#endif  // PHASECX_TOOLS_SRC_INTERNAL_HPP_
