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

#include "cpg/reflection.hpp"

#include <cmath>

namespace cpg::reflection {

ReflectionPair reflection_zero_t(const TensorPoint& p, const GrapheneModel& g,
                                 const Constants& c) {
  poltensor::validate_point(p);
  if (p.y == 0.0 && p.zeta == 0.0)
    throw std::domain_error("reflection coefficients are singular at the origin");
  const double gt = poltensor::g_tilde(p, g);
  const double ap = c.alpha_fs * M_PI;
  return {ap * p.y / (ap * p.y + 2.0 * gt), -ap * gt / (ap * gt + 2.0 * p.y)};
}

ReflectionPair reflection_full(const TensorPoint& p, const GrapheneModel& g,
                               double rel_tol, const Constants& c) {
  poltensor::validate_point(p);
  if (!(p.y > p.zeta))
    throw std::domain_error("reflection_full requires y > zeta (off the light cone)");
  if (p.tau == 0.0) return reflection_zero_t(p, g, c);

  const auto t = poltensor::thermal_corrections(p, g, rel_tol, c);
  const double pi00 = t.pi00();
  const double pi_tr = t.pi();
  const double yz2 = (p.y - p.zeta) * (p.y + p.zeta);
  ReflectionPair r;
  r.r_tm = p.y * pi00 / (p.y * pi00 + 2.0 * yz2);
  r.r_te = -pi_tr / (pi_tr + 2.0 * p.y * yz2);
  return r;
}

ReflectionPair reflection_thermal_correction(const TensorPoint& p,
                                             const GrapheneModel& g, double rel_tol,
                                             const Constants& c) {
  poltensor::validate_point(p);
  if (!(p.tau > 0.0))
    throw std::invalid_argument("reflection_thermal_correction requires tau > 0");
  const auto t = poltensor::thermal_corrections(p, g, rel_tol, c);
  const double gt = poltensor::g_tilde(p, g);
  const double ap = c.alpha_fs * M_PI;
  // ratios dPi/Pi(0); the (y^2 - zeta^2) factors cancel analytically, so the
  // quotient stays finite toward the light cone
  const double ratio00 = t.dpi00 / t.pi00_zero;
  const double ratio_tr = t.dpi / t.pi_zero;
  const double dtm =
      2.0 * ap * p.y * gt / ((ap * p.y + 2.0 * gt) * (ap * p.y + 2.0 * gt)) * ratio00;
  const double dte =
      -2.0 * ap * p.y * gt / ((ap * gt + 2.0 * p.y) * (ap * gt + 2.0 * p.y)) * ratio_tr;
  return {dtm, dte};
}

ReflectionPair reflection_full_zero_freq(double y, double tau, const GrapheneModel& g,
                                         double rel_tol, const Constants& c) {
  if (!(y > 0.0)) throw std::domain_error("zero-frequency reflection requires y > 0");
  const double v = g.v_tilde;
  const double ap = c.alpha_fs * M_PI;
  const auto d = poltensor::zero_freq_corrections(y, tau, g, rel_tol, c);
  const double pi00 = ap * y / v + d.dpi00;
  const double pi_tr = ap * v * y * y * y + d.dpi;
  ReflectionPair r;
  r.r_tm = pi00 / (pi00 + 2.0 * y);
  r.r_te = -pi_tr / (pi_tr + 2.0 * y * y * y);
  return r;
}

ReflectionPair reflection_thermal_correction_zero_freq(double y, double tau,
                                                       const GrapheneModel& g,
                                                       double rel_tol,
                                                       const Constants& c) {
  if (!(y > 0.0)) throw std::domain_error("zero-frequency reflection requires y > 0");
  const double v = g.v_tilde;
  const double ap = c.alpha_fs * M_PI;
  const auto d = poltensor::zero_freq_corrections(y, tau, g, rel_tol, c);
  const double ratio00 = d.dpi00 / (ap * y / v);
  const double ratio_tr = d.dpi / (ap * v * y * y * y);
  const double dtm = 2.0 * ap * v / ((ap + 2.0 * v) * (ap + 2.0 * v)) * ratio00;
  const double dte = -2.0 * ap * v / ((ap * v + 2.0) * (ap * v + 2.0)) * ratio_tr;
  return {dtm, dte};
}

}  // namespace cpg::reflection
