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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cpg {

/// Fundamental constants, CODATA 2018. Frozen in one table so that results
/// are reproducible across platforms and math libraries.
struct Constants {
  double hbar;         // J s
  double c;            // m/s
  double k_B;          // J/K
  double alpha_fs;     // fine-structure constant e^2/(hbar c), Gaussian
  double zeta3;        // Riemann zeta(3)
  double bohr_radius;  // m

  static const Constants& codata2018();
};

/// Dirac-model graphene sheet: Fermi velocity in units of c, plus the choice
/// between the exact and the small-v form of the g function entering the
/// polarization tensor.
struct GrapheneModel {
  double v_tilde = 1.0 / 300.0;
  bool use_exact_gtilde = false;
};

/// Static atomic response. Both values are stored as Gaussian volumes (m^3);
/// they enter the dimensionless Lifshitz kernel only through alpha0/a^3 and
/// beta0/a^3.
struct AtomSpec {
  double alpha0 = 0.0;  // m^3, static electric polarizability
  double beta0 = 0.0;   // m^3, static magnetic susceptibility
  std::string name;
};

/// Separation/temperature pair with the derived dimensionless temperature
/// parameter and the two effective temperatures.
struct ThermalGeometry {
  double a = 0.0;        // m
  double T = 0.0;        // K
  double tau = 0.0;      // 4 pi a k_B T / (hbar c)
  double T_eff = 0.0;    // K, k_B T_eff = hbar c / (2a)
  double T_eff_g = 0.0;  // K, k_B T_eff_g = hbar v_F / (2a)
};

struct invalid_geometry_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct invalid_temperature_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct invalid_atom_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

ThermalGeometry make_thermal_geometry(double a, double T, const GrapheneModel& g,
                                      const Constants& c = Constants::codata2018());

/// zeta_l = tau * l, the dimensionless Matsubara frequency.
double matsubara_zeta(long l, const ThermalGeometry& tg);

/// Converts a polarizability in atomic units to m^3 (cube of the Bohr radius).
double alpha0_from_atomic_units(double value,
                                const Constants& c = Constants::codata2018());

AtomSpec make_atom(double alpha0_m3, double beta0_m3, std::string name = {});

/// Parses an atom table: a JSON array of {"name", "alpha0_au", "beta0_au"}
/// objects. Unknown keys and negative values are rejected.
std::vector<AtomSpec> parse_atom_table(const std::string& json_text,
                                       const Constants& c = Constants::codata2018());
std::vector<AtomSpec> load_atom_file(const std::string& path,
                                     const Constants& c = Constants::codata2018());

}  // namespace cpg
