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
#include <fstream>
#include <ostream>
#include <sstream>

#include "phasecx/errors.hpp"
#include "phasecx/state_json.hpp"
#include "phasecx/states.hpp"
#include "phasecx_app/app.hpp"
#include "internal.hpp"

namespace phasecx::app {

int guarded(const std::function<int()>& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kNoConvergence ? kExitNoConvergence : kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

nlohmann::json report_to_json(const ComplexityReport& rep) {
  return {{"entropy", rep.entropy},         {"fisher", rep.fisher},
          {"complexity", rep.complexity},   {"s", rep.s},
          {"err_entropy", rep.err_entropy}, {"err_fisher", rep.err_fisher},
          {"method", std::string(to_string(rep.method))}};
}

nlohmann::json quantifiers_to_json(const QuantifierRow& row) {
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {{"mandel_q", opt(row.mandel_q)},
          {"nonclassical_depth", opt(row.nonclassical_depth)},
          {"nonclassical_depth_unfloored", opt(row.nonclassical_depth_unfloored)},
          {"skew_info", row.skew_info},
          {"wigner_negativity", opt(row.wigner_negativity)},
          {"delta_a", opt(row.delta_a)},
          {"delta_b", opt(row.delta_b)}};
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

nlohmann::json compute(const ComputeRequest& req, const Options& opts) {
  const CheckedState state = validate(parse_state_spec(read_file(req.spec_path)));
  const ComplexityReport rep =
      s_complexity(state, req.s.value_or(kHusimiOrder), opts.cfg, req.route);
  nlohmann::json out = {{"state", state_spec_to_json(state.spec())},
                        {"report", report_to_json(rep)}};
  if (req.quantifiers) out["quantifiers"] = quantifiers_to_json(quantifier_row(state, opts.cfg));
  return out;
}

int cmd_compute(const ComputeRequest& req, const Options& opts, std::ostream& out,
                std::ostream& err) {
  return guarded(
      [&] {
        out << compute(req, opts).dump(2) << '\n';
        return kExitOk;
      },
      err);
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

}  // namespace phasecx::app
