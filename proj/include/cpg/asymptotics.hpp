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

#include <utility>

#include "cpg/lifshitz.hpp"
#include "cpg/poltensor.hpp"
#include "cpg/units.hpp"

namespace cpg::asymptotics {

/// Coefficients of the closed-form low-temperature expansion, all built from
/// the scaled polarizabilities alpha0/a^3 and beta0/a^3 (dimensionless).
struct LowTCoefficients {
  double c_tm = 0.0;
  double c_te = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

LowTCoefficients coefficients(const AtomSpec& atom, double a, const GrapheneModel& g,
                              const Constants& c = Constants::codata2018());

/// Implicit-correction closed form, -pi^3 (k T)^4 (C_tm + C_te) / (15 (hbar c)^3).
double delta1_asymptotic(const AtomSpec& atom, double a, double T, const GrapheneModel& g,
                         const Constants& c = Constants::codata2018());

/// Dominant explicit-correction closed form,
/// -48 zeta(3) alpha (k T)^3 (Q1 + Q2) / (v^2 (hbar c)^2 a).
double delta2_lgeq1_asymptotic(const AtomSpec& atom, double a, double T,
                               const GrapheneModel& g,
                               const Constants& c = Constants::codata2018());

/// Zero-frequency correction closed form,
/// 96 alpha zeta(3) (k T)^4 (R1 + R2) ln(2 a k T / (hbar v c)) / (v^2 (hbar c)^3);
/// the log argument is T / T_eff_g, below one in the validity regime.
double delta2_l0_asymptotic(const AtomSpec& atom, double a, double T,
                            const GrapheneModel& g,
                            const Constants& c = Constants::codata2018());

/// E(a) plus the dominant cubic correction.
double free_energy_low_t(const AtomSpec& atom, double a, double T, const GrapheneModel& g,
                         const lifshitz::EvalOptions& opts = {},
                         const Constants& c = Constants::codata2018());

/// Quadratic low-temperature entropy law,
/// 144 zeta(3) alpha k_B (k T)^2 (Q1 + Q2) / (v^2 (hbar c)^2 a).
double entropy_low_t(const AtomSpec& atom, double a, double T, const GrapheneModel& g,
                     const Constants& c = Constants::codata2018());

/// Magnitude of the next entropy term, k_B R1 (k T)^3 |ln(T/T_eff_g)| / (hbar c)^3;
/// an order estimate only, no sign claim.
double entropy_next_order_magnitude(const AtomSpec& atom, double a, double T,
                                    const GrapheneModel& g,
                                    const Constants& c = Constants::codata2018());

/// I_k(b) = int_0^1 dx / (b + sqrt(x(1-x)))^k for k = 2, 3. Closed forms on
/// 0 < b < 0.45; direct quadrature beyond, where the closed forms degenerate.
double i2(double b);
double i3(double b);

/// Low-temperature tensor-correction ratios at a Matsubara point:
///   first:  48 zeta(3)/(pi g^3) (T/T_eff)^3
///   second: 96 zeta(3)/(pi g^3) (T/T_eff)^3 (3 zeta^2/(2 g^2) - 1)
std::pair<double, double> pol_ratio_asymptotics(const poltensor::TensorPoint& p,
                                                const GrapheneModel& g,
                                                const Constants& c = Constants::codata2018());

}  // namespace cpg::asymptotics
