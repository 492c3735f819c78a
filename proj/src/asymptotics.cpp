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

#include "cpg/asymptotics.hpp"

#include <cmath>

#include "cpg/numerics.hpp"

namespace cpg::asymptotics {

namespace {

struct Scaled {
  double A, B;
};

Scaled scale(const AtomSpec& atom, double a) {
  if (!(a > 0.0)) throw invalid_geometry_error("separation must be positive");
  const double a3 = a * a * a;
  return {atom.alpha0 / a3, atom.beta0 / a3};
}

double ik_quadrature(double b, int k) {
  // x = sin^2(theta) removes the sqrt endpoint behavior of the kernel
  auto f = [&](double x) {
    const double s = std::sqrt(x * (1.0 - x));
    return 1.0 / std::pow(b + s, k);
  };
  return numerics::integrate_finite(f, 0.0, 1.0, 1e-12, /*endpoint_sqrt=*/true).value;
}

// Shared log combination of the closed forms, computed without cancellation
// for small b:
//   L = ln[(1-s)/(1+s)] - ln[(1+2b-s)/(1+2b+s)],  s = sqrt(1-4b^2)
//     = ln[ b (1+2b+s)^2 / ((1+s)^2 (1+2b)) ]
// using 1 - s = 4b^2/(1+s) and 1+2b-s = 4b(1+2b)/(1+2b+s).
double log_combination(double b, double s) {
  const double u = (1.0 + 2.0 * b + s) / (1.0 + s);
  return std::log(b * u * u / (1.0 + 2.0 * b));
}

}  // namespace

LowTCoefficients coefficients(const AtomSpec& atom, double a, const GrapheneModel& g,
                              const Constants& c) {
  const Scaled s = scale(atom, a);
  const double v = g.v_tilde;
  const double ap = c.alpha_fs * M_PI;
  const double w = ap + 2.0 * v;
  LowTCoefficients out;
  out.c_tm = 2.0 * ap * s.A / (v * w * w * w) + (s.A + 3.0 * s.B) / (3.0 * w);
  out.c_te = ap * v * s.A / 2.0 - ap * s.B / (2.0 * v);
  out.q1 = (3.0 * s.A - s.B) / (2.0 * w * w);
  out.q2 = -(s.A - 3.0 * s.B) / 4.0;
  out.r1 = s.A / (w * w);
  out.r2 = s.B / 4.0;
  return out;
}

double delta1_asymptotic(const AtomSpec& atom, double a, double T, const GrapheneModel& g,
                         const Constants& c) {
  if (T == 0.0) return 0.0;
  const auto k = coefficients(atom, a, g, c);
  const double kt = c.k_B * T;
  const double hc = c.hbar * c.c;
  const double a3 = a * a * a;
  return -std::pow(M_PI, 3) * std::pow(kt, 4) * (k.c_tm + k.c_te) * a3 /
         (15.0 * hc * hc * hc);
}

double delta2_lgeq1_asymptotic(const AtomSpec& atom, double a, double T,
                               const GrapheneModel& g, const Constants& c) {
  if (T == 0.0) return 0.0;
  const auto k = coefficients(atom, a, g, c);
  const double kt = c.k_B * T;
  const double hc = c.hbar * c.c;
  const double v = g.v_tilde;
  // the a^3 of the scaled coefficients against the 1/a of the law
  return -48.0 * c.zeta3 * c.alpha_fs * kt * kt * kt * (k.q1 + k.q2) * a * a /
         (v * v * hc * hc);
}

double delta2_l0_asymptotic(const AtomSpec& atom, double a, double T,
                            const GrapheneModel& g, const Constants& c) {
  if (T == 0.0) return 0.0;
  const auto k = coefficients(atom, a, g, c);
  const double kt = c.k_B * T;
  const double hc = c.hbar * c.c;
  const double v = g.v_tilde;
  const double log_arg = 2.0 * a * kt / (c.hbar * v * c.c);  // T / T_eff_g
  const double a3 = a * a * a;
  return 96.0 * c.alpha_fs * c.zeta3 * std::pow(kt, 4) * (k.r1 + k.r2) * a3 *
         std::log(log_arg) / (v * v * hc * hc * hc);
}

double free_energy_low_t(const AtomSpec& atom, double a, double T, const GrapheneModel& g,
                         const lifshitz::EvalOptions& opts, const Constants& c) {
  const double e0 = lifshitz::energy_zero_t(atom, a, g, opts, c);
  if (T == 0.0) return e0;
  return e0 + delta2_lgeq1_asymptotic(atom, a, T, g, c);
}

double entropy_low_t(const AtomSpec& atom, double a, double T, const GrapheneModel& g,
                     const Constants& c) {
  if (T == 0.0) return 0.0;
  const auto k = coefficients(atom, a, g, c);
  const double kt = c.k_B * T;
  const double hc = c.hbar * c.c;
  const double v = g.v_tilde;
  return 144.0 * c.zeta3 * c.alpha_fs * c.k_B * kt * kt * (k.q1 + k.q2) * a * a /
         (v * v * hc * hc);
}

double entropy_next_order_magnitude(const AtomSpec& atom, double a, double T,
                                    const GrapheneModel& g, const Constants& c) {
  if (T == 0.0) return 0.0;
  const auto k = coefficients(atom, a, g, c);
  const double kt = c.k_B * T;
  const double hc = c.hbar * c.c;
  const double log_arg = 2.0 * a * kt / (c.hbar * g.v_tilde * c.c);
  const double a3 = a * a * a;
  return std::abs(c.k_B * k.r1 * a3 * kt * kt * kt * std::log(log_arg) /
                  (hc * hc * hc));
}

double i2(double b) {
  if (!(b > 0.0)) throw std::domain_error("i2 requires b > 0");
  if (b >= 0.45) return ik_quadrature(b, 2);
  const double q = 1.0 - 4.0 * b * b;
  const double s = std::sqrt(q);
  return -4.0 / q * (1.0 + log_combination(b, s) / s);
}

double i3(double b) {
  if (!(b > 0.0)) throw std::domain_error("i3 requires b > 0");
  if (b >= 0.45) return ik_quadrature(b, 3);
  const double q = 1.0 - 4.0 * b * b;
  const double s = std::sqrt(q);
  return 4.0 / (q * q) *
         ((1.0 + 8.0 * b * b) / (2.0 * b) + 6.0 * b * log_combination(b, s) / s);
}

std::pair<double, double> pol_ratio_asymptotics(const poltensor::TensorPoint& p,
                                                const GrapheneModel& g,
                                                const Constants& c) {
  poltensor::validate_point(p);
  const double gt = poltensor::g_tilde(p, g);
  const double x = p.tau / (2.0 * M_PI);  // T / T_eff
  const double base = 48.0 * c.zeta3 / (M_PI * gt * gt * gt) * x * x * x;
  const double second =
      2.0 * base * (1.5 * p.zeta * p.zeta / (gt * gt) - 1.0);
  return {base, second};
}

}  // namespace cpg::asymptotics
