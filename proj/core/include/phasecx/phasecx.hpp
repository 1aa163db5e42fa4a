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
#ifndef PHASECX_PHASECX_HPP_
#define PHASECX_PHASECX_HPP_

#include "phasecx/closedform.hpp"
#include "phasecx/errors.hpp"
#include "phasecx/functionals.hpp"
#include "phasecx/phasespace.hpp"
#include "phasecx/quadrature.hpp"
#include "phasecx/quantifiers.hpp"
#include "phasecx/random_states.hpp"
#include "phasecx/special.hpp"
#include "phasecx/state_json.hpp"
#include "phasecx/states.hpp"

#endif  // PHASECX_PHASECX_HPP_
