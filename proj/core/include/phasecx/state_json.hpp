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
#ifndef PHASECX_STATE_JSON_HPP_
#define PHASECX_STATE_JSON_HPP_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "phasecx/states.hpp"

namespace phasecx {

// {"family": "<name>", "params": {...}}; complex numbers are
// {"re": x, "im": y}; a FockMatrix is {"dim": n, "re": [[...]], "im": [[...]]}.

/// Throws Error(kParse) on malformed input. Range checks are left to
/// validate().
StateSpec state_spec_from_json(const nlohmann::json& j);

nlohmann::json state_spec_to_json(const StateSpec& spec);

StateSpec parse_state_spec(std::string_view text);

Complex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(Complex z);

}  // namespace phasecx

#endif  // PHASECX_STATE_JSON_HPP_
