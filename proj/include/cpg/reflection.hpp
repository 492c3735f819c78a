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

#include "cpg/poltensor.hpp"
#include "cpg/units.hpp"

namespace cpg::reflection {

using poltensor::TensorPoint;

/// TM/TE reflection coefficients at an imaginary-frequency point. For every
/// valid point 0 <= r_tm < 1 and -1 < r_te <= 0.
struct ReflectionPair {
  double r_tm = 0.0;
  double r_te = 0.0;
};

/// Zero-temperature coefficients:
///   r_tm = a pi y / (a pi y + 2 g),   r_te = -a pi g / (a pi g + 2 y).
ReflectionPair reflection_zero_t(const TensorPoint& p, const GrapheneModel& g,
                                 const Constants& c = Constants::codata2018());

/// Coefficients built from the full tensor (zero-T part plus thermal
/// correction at every point). tau = 0 falls back to the zero-T tensor.
/// Requires y > zeta; the light cone y = zeta is rejected.
ReflectionPair reflection_full(const TensorPoint& p, const GrapheneModel& g,
                               double rel_tol,
                               const Constants& c = Constants::codata2018());

/// First-order thermal corrections to the coefficients, driven by the exact
/// tensor corrections:
///   d r_tm = +2 a pi y g/(a pi y + 2g)^2 * dPi00/Pi00(0)
///   d r_te = -2 a pi y g/(a pi g + 2y)^2 * dPi/Pi(0)
ReflectionPair reflection_thermal_correction(const TensorPoint& p,
                                             const GrapheneModel& g, double rel_tol,
                                             const Constants& c = Constants::codata2018());

/// Zero-frequency full coefficients from the x-integral representations.
ReflectionPair reflection_full_zero_freq(double y, double tau, const GrapheneModel& g,
                                         double rel_tol,
                                         const Constants& c = Constants::codata2018());

/// Zero-frequency first-order corrections (the l = 0 analogue of
/// reflection_thermal_correction).
ReflectionPair reflection_thermal_correction_zero_freq(
    double y, double tau, const GrapheneModel& g, double rel_tol,
    const Constants& c = Constants::codata2018());

}  // namespace cpg::reflection
