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
#include "phasecx/state_json.hpp"

#include <string>

#include "phasecx/errors.hpp"

namespace phasecx {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const json& field(const json& params, const char* name) {
  if (!params.is_object() || !params.contains(name)) {
    parse_error(std::string("missing parameter '") + name + "'");
  }
  return params.at(name);
}

double number(const json& params, const char* name) {
  const json& v = field(params, name);
  if (!v.is_number()) parse_error(std::string("parameter '") + name + "' must be a number");
  return v.get<double>();
}

double number_or(const json& params, const char* name, double fallback) {
  return params.contains(name) ? number(params, name) : fallback;
}

int integer(const json& params, const char* name) {
  const json& v = field(params, name);
  if (!v.is_number_integer()) parse_error(std::string("parameter '") + name + "' must be an integer");
  return v.get<int>();
}

Complex complex_field(const json& params, const char* name) {
  return complex_from_json(field(params, name));
}

Eigen::MatrixXd real_matrix(const json& rows, int dim, const char* name) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    parse_error(std::string("'") + name + "' must have dim rows");
  }
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      parse_error(std::string("'") + name + "' must have dim columns");
    }
    for (int j = 0; j < dim; ++j) {
      if (!row[j].is_number()) parse_error(std::string("'") + name + "' entries must be numbers");
      m(i, j) = row[j].get<double>();
    }
  }
  return m;
}

FockMatrix fock_matrix_from(const json& params) {
  const int dim = integer(params, "dim");
  if (dim < 1) parse_error("'dim' must be positive");
  FockMatrix out;
  out.rho = real_matrix(field(params, "re"), dim, "re").cast<Complex>();
  if (params.contains("im")) {
    out.rho += Complex{0.0, 1.0} * real_matrix(params.at("im"), dim, "im").cast<Complex>();
  }
  return out;
}

}  // namespace

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_object() && j.contains("re") && j.at("re").is_number()) {
    double im = 0.0;
    if (j.contains("im")) {
      if (!j.at("im").is_number()) parse_error("complex 'im' must be a number");
      im = j.at("im").get<double>();
    }
    return {j.at("re").get<double>(), im};
  }
  parse_error("complex numbers are written {\"re\": x, \"im\": y}");
}

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

StateSpec state_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    parse_error("state must be an object with a string 'family'");
  }
  const std::string family = j.at("family").get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (!params.is_object()) parse_error("'params' must be an object");

  if (family == "coherent") return Coherent{complex_field(params, "beta")};
  if (family == "thermal") return Thermal{number(params, "nbar")};
  if (family == "fock") return Fock{integer(params, "k")};
  if (family == "gaussian") {
    Gaussian g;
    g.nbar = number_or(params, "nbar", 0.0);
    g.r = number_or(params, "r", 0.0);
    g.theta = number_or(params, "theta", 0.0);
    if (params.contains("xi")) g.xi = complex_field(params, "xi");
    return g;
  }
  if (family == "photon_added_thermal") {
    PhotonAddedThermal p;
    p.k = params.contains("k") ? integer(params, "k") : 1;
    p.nbar = number(params, "nbar");
    return p;
  }
  if (family == "photon_added_coherent") return PhotonAddedCoherent{complex_field(params, "beta")};
  if (family == "cat") return Cat{complex_field(params, "beta"), number_or(params, "phi", 0.0)};
  if (family == "coherent_mixture") return CoherentMixture{complex_field(params, "beta")};
  if (family == "phase_averaged_coherent") {
    return PhaseAveragedCoherent{number(params, "beta_mod")};
  }
  if (family == "fock_matrix") return fock_matrix_from(params);
  parse_error("unknown state family '" + family + "'");
}

json state_spec_to_json(const StateSpec& spec) {
  json params = std::visit(
      Overloaded{
          [](const Coherent& c) { return json{{"beta", complex_to_json(c.beta)}}; },
          [](const Thermal& t) { return json{{"nbar", t.nbar}}; },
          [](const Fock& f) { return json{{"k", f.k}}; },
          [](const Gaussian& g) {
            return json{{"nbar", g.nbar}, {"r", g.r}, {"theta", g.theta},
                        {"xi", complex_to_json(g.xi)}};
          },
          [](const PhotonAddedThermal& p) { return json{{"k", p.k}, {"nbar", p.nbar}}; },
          [](const PhotonAddedCoherent& p) { return json{{"beta", complex_to_json(p.beta)}}; },
          [](const Cat& c) { return json{{"beta", complex_to_json(c.beta)}, {"phi", c.phi}}; },
          [](const CoherentMixture& m) { return json{{"beta", complex_to_json(m.beta)}}; },
          [](const PhaseAveragedCoherent& p) { return json{{"beta_mod", p.beta_mod}}; },
          [](const FockMatrix& m) {
            json re = json::array();
            json im = json::array();
            for (int i = 0; i < m.dim(); ++i) {
              json rr = json::array();
              json ii = json::array();
              for (int j = 0; j < m.dim(); ++j) {
                rr.push_back(m.rho(i, j).real());
                ii.push_back(m.rho(i, j).imag());
              }
              re.push_back(std::move(rr));
              im.push_back(std::move(ii));
            }
            return json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
          },
      },
      spec);
  return json{{"family", std::string(family_name(spec))}, {"params", std::move(params)}};
}

StateSpec parse_state_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  return state_spec_from_json(j);
}

}  // namespace phasecx
