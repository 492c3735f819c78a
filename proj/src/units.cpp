// Copyright (c) 2026 the cpgraphene developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpg/units.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cpg {

const Constants& Constants::codata2018() {
  static const Constants c{
      1.054571817e-34,      // hbar
      299792458.0,          // c (exact)
      1.380649e-23,         // k_B (exact)
      7.2973525693e-3,      // alpha_fs
      1.2020569031595943,   // zeta(3)
      0.529177210903e-10,   // bohr radius
  };
  return c;
}

ThermalGeometry make_thermal_geometry(double a, double T, const GrapheneModel& g,
                                      const Constants& c) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw invalid_geometry_error("separation must be positive and finite");
  if (!(T >= 0.0) || !std::isfinite(T))
    throw invalid_temperature_error("temperature must be nonnegative and finite");
  ThermalGeometry tg;
  tg.a = a;
  tg.T = T;
  tg.T_eff = c.hbar * c.c / (2.0 * a * c.k_B);
  tg.T_eff_g = g.v_tilde * tg.T_eff;
  tg.tau = 2.0 * M_PI * T / tg.T_eff;  // equals 4 pi a k_B T / (hbar c)
  return tg;
}

double matsubara_zeta(long l, const ThermalGeometry& tg) {
  if (l < 0) throw std::invalid_argument("Matsubara index must be nonnegative");
  return tg.tau * static_cast<double>(l);
}

double alpha0_from_atomic_units(double value, const Constants& c) {
  if (!(value >= 0.0) || !std::isfinite(value))
    throw invalid_atom_error("polarizability in atomic units must be nonnegative");
  const double b3 = c.bohr_radius * c.bohr_radius * c.bohr_radius;
  return value * b3;
}

AtomSpec make_atom(double alpha0_m3, double beta0_m3, std::string name) {
  if (!(alpha0_m3 >= 0.0) || !std::isfinite(alpha0_m3))
    throw invalid_atom_error("alpha0 must be nonnegative");
  if (!(beta0_m3 >= 0.0) || !std::isfinite(beta0_m3))
    throw invalid_atom_error("beta0 must be nonnegative");
  return AtomSpec{alpha0_m3, beta0_m3, std::move(name)};
}

std::vector<AtomSpec> parse_atom_table(const std::string& json_text, const Constants& c) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_atom_error(std::string("atom table is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw invalid_atom_error("atom table must be a JSON array");

  std::vector<AtomSpec> atoms;
  for (const auto& entry : doc) {
    if (!entry.is_object()) throw invalid_atom_error("atom table entries must be objects");
    for (const auto& [key, value] : entry.items()) {
      if (key == "dynamic_table")
        // reserved hook for per-frequency polarizability tables; everything
        // downstream is static-only, so ingestion refuses it outright
        throw invalid_atom_error(
            "dynamic polarizability tables are recognized but not enabled");
      if (key != "name" && key != "alpha0_au" && key != "beta0_au")
        throw invalid_atom_error("unknown key in atom table entry: " + key);
    }
    if (!entry.contains("name") || !entry["name"].is_string())
      throw invalid_atom_error("atom table entry missing string \"name\"");
    if (!entry.contains("alpha0_au") || !entry["alpha0_au"].is_number())
      throw invalid_atom_error("atom table entry missing numeric \"alpha0_au\"");
    if (!entry.contains("beta0_au") || !entry["beta0_au"].is_number())
      throw invalid_atom_error("atom table entry missing numeric \"beta0_au\"");
    const double a_au = entry["alpha0_au"].get<double>();
    const double b_au = entry["beta0_au"].get<double>();
    atoms.push_back(make_atom(alpha0_from_atomic_units(a_au, c),
                              alpha0_from_atomic_units(b_au, c),
                              entry["name"].get<std::string>()));
  }
  return atoms;
}

std::vector<AtomSpec> load_atom_file(const std::string& path, const Constants& c) {
  std::ifstream in(path);
  if (!in) throw invalid_atom_error("cannot open atom file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_atom_table(ss.str(), c);
}

}  // namespace cpg
