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

#include <string>
#include <vector>

#include "cpg/units.hpp"

namespace cpg::lifshitz {

struct EvalOptions {
  double rel_tol = 1e-9;                 // accepted range [1e-12, 1e-4]
  long l_max = 200000;                   // Matsubara truncation cap
  bool use_exact_gtilde = false;         // exact vs small-v g form
  bool first_order_coefficients = false; // r0 + dr split instead of full coefficients
  int threads = 0;                       // 0 = hardware concurrency
};

void validate_options(const EvalOptions& opts);

/// All pieces of the free energy at one (a, T) point, in joules. The
/// decomposed total is E0 + d1 + d2_lgeq1 + d2_l0; the numeric total comes
/// from the full Matsubara sum with unexpanded reflection coefficients.
/// kT_eff (= hbar c / 2a) is carried along for unit-free ratios. A field
/// whose computation failed is NaN and leaves a note in flags.
struct FreeEnergyBreakdown {
  double E0 = 0.0;
  double d1 = 0.0;
  double d2_lgeq1 = 0.0;
  double d2_l0 = 0.0;
  double F_total_numeric = 0.0;
  double F_total_decomposed = 0.0;
  double kT_eff = 0.0;
  std::vector<std::string> flags;
};

/// Kernel of the zero-temperature coefficient sum: the y-integral
///   int_zeta^inf dy e^(-y) { [2 y^2 A - zeta^2 (A+B)] r_tm0
///                          + [2 y^2 B - zeta^2 (A+B)] r_te0 }
/// with A = alpha0/a^3 and B = beta0/a^3. Dimensionless.
double phi(double zeta, const AtomSpec& atom, double a, const GrapheneModel& g,
           double rel_tol, const Constants& c = Constants::codata2018());

/// Casimir-Polder energy at T = 0:  -(hbar c / 32 pi a^4) int_0^inf Phi.
double energy_zero_t(const AtomSpec& atom, double a, const GrapheneModel& g,
                     const EvalOptions& opts = {},
                     const Constants& c = Constants::codata2018());

/// Full finite-temperature free energy from the Matsubara sum with complete
/// reflection coefficients (thermal tensor corrections at every frequency,
/// the l = 0 term through the zero-frequency representations). T > 0.
double free_energy_full(const AtomSpec& atom, const ThermalGeometry& tg,
                        const GrapheneModel& g, const EvalOptions& opts = {},
                        const Constants& c = Constants::codata2018());

/// Implicit thermal correction: the zero-T-coefficient Matsubara sum minus
/// its T -> 0 integral limit, realized as sum-minus-integral.
double delta1_implicit(const AtomSpec& atom, const ThermalGeometry& tg,
                       const GrapheneModel& g, const EvalOptions& opts = {},
                       const Constants& c = Constants::codata2018());

/// Explicit thermal correction from the l >= 1 Matsubara terms, first order
/// in the reflection-coefficient corrections driven by the exact tensor.
double delta2_lgeq1(const AtomSpec& atom, const ThermalGeometry& tg,
                    const GrapheneModel& g, const EvalOptions& opts = {},
                    const Constants& c = Constants::codata2018());

/// Explicit thermal correction of the zero-frequency term.
double delta2_l0(const AtomSpec& atom, const ThermalGeometry& tg,
                 const GrapheneModel& g, const EvalOptions& opts = {},
                 const Constants& c = Constants::codata2018());

FreeEnergyBreakdown free_energy_breakdown(const AtomSpec& atom, const ThermalGeometry& tg,
                                          const GrapheneModel& g,
                                          const EvalOptions& opts = {},
                                          const Constants& c = Constants::codata2018());

/// S = -dF/dT by Richardson-extrapolated central differences on the full
/// free energy; step T/50, floored at 1e-4 T.
double entropy(const AtomSpec& atom, double a, double T, const GrapheneModel& g,
               const EvalOptions& opts = {},
               const Constants& c = Constants::codata2018());

}  // namespace cpg::lifshitz
