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

#include "cpg/numerics.hpp"
#include "cpg/units.hpp"

namespace cpg::poltensor {

/// One evaluation point of the dimensionless polarization tensor: Matsubara
/// frequency zeta (>= 0), momentum variable y (>= zeta), and the temperature
/// parameter tau (>= 0, with tau > 0 required for thermal corrections).
struct TensorPoint {
  double zeta = 0.0;
  double y = 0.0;
  double tau = 0.0;
};

/// Both tensor components split into the zero-temperature part and the
/// thermal correction, plus the quadrature error of the corrections.
struct TensorValues {
  double pi00_zero = 0.0;
  double pi_zero = 0.0;
  double dpi00 = 0.0;
  double dpi = 0.0;
  double dpi00_error = 0.0;
  double dpi_error = 0.0;
  long evaluations = 0;

  double pi00() const { return pi00_zero + dpi00; }
  double pi() const { return pi_zero + dpi; }
};

void validate_point(const TensorPoint& p);

/// g(zeta, y): exact form sqrt(v^2 y^2 + (1 - v^2) zeta^2) or the small-v
/// form sqrt(v^2 y^2 + zeta^2), selected by the model flag.
double g_tilde(const TensorPoint& p, const GrapheneModel& g);

/// Zero-temperature 00 component, pi alpha (y^2 - zeta^2) / g.
double pi00_zero_t(const TensorPoint& p, const GrapheneModel& g,
                   const Constants& c = Constants::codata2018());

/// Zero-temperature trace combination, pi alpha (y^2 - zeta^2) g.
double pi_zero_t(const TensorPoint& p, const GrapheneModel& g,
                 const Constants& c = Constants::codata2018());

/// Thermal corrections to both components from the Fermi-factor u-integrals,
/// evaluated in one pass over shared panels split at the Fermi scale 1/B and
/// at the branch kink u = 1. Requires tau > 0.
TensorValues thermal_corrections(const TensorPoint& p, const GrapheneModel& g,
                                 double rel_tol,
                                 const Constants& c = Constants::codata2018());

double delta_pi00(const TensorPoint& p, const GrapheneModel& g, double rel_tol,
                  const Constants& c = Constants::codata2018());
double delta_pi(const TensorPoint& p, const GrapheneModel& g, double rel_tol,
                const Constants& c = Constants::codata2018());

/// Zero-frequency thermal corrections in the closed x-integral form
/// (the log/Fermi integrals over x in [0,1] with the sin^2 substitution):
///   dpi00(0,y) = (8 alpha tau / (pi v^2)) int_0^1 ln[1+e^(-By sqrt(x(1-x)))] dx
///   dpi(0,y)   = -16 alpha v y^3 int_0^1 sqrt(x(1-x)) / (e^(By sqrt(x(1-x)))+1) dx
/// with B = T_eff_g / T = 2 pi v / tau.
double delta_pi00_zero_freq(double y, double tau, const GrapheneModel& g, double rel_tol,
                            const Constants& c = Constants::codata2018());
double delta_pi_zero_freq(double y, double tau, const GrapheneModel& g, double rel_tol,
                          const Constants& c = Constants::codata2018());

/// Both zero-frequency corrections in a single pass over the shared
/// x-integral nodes; the per-y workhorse for the l = 0 Matsubara term.
struct ZeroFreqCorrections {
  double dpi00 = 0.0;
  double dpi = 0.0;
  double dpi00_error = 0.0;
  double dpi_error = 0.0;
  long evaluations = 0;
};
ZeroFreqCorrections zero_freq_corrections(double y, double tau, const GrapheneModel& g,
                                          double rel_tol,
                                          const Constants& c = Constants::codata2018());

}  // namespace cpg::poltensor
