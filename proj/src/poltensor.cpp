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

#include "cpg/poltensor.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cpg::poltensor {

namespace {

double fermi(double x) {
  // 1/(e^x + 1) without overflow; x >= 0 in all uses here.
  if (x > 708.0) return 0.0;
  return 1.0 / (std::exp(x) + 1.0);
}

// Integrand pieces shared by both thermal corrections. The caller passes
// 1 - u^2 exactly (cos^2 from the trigonometric substitution on [0, 1],
// the difference of exact factors beyond), which keeps every combination
// below free of cancellation:
//   S = sqrt((1+u^2)^2 - 4 m u^2) = sqrt((1-u^2)^2 + 4(1-m) u^2)
//   G = sqrt((S + 1 - u^2)/2)
//   1 - G = 2 m u^2 / ((1 + u^2 + S)(1 + G))
//   S^2 - G^2 = 4(1-m) u^2 - (1-u^2) u^2 - (S - (1-u^2))/2
// with m = v^2 (y^2 - zeta^2)/g^2 in [0, 1]. At m = 1 and u >= 1 both G and
// the trace brace vanish identically, which is the real branch of the square
// root; these forms reproduce that limit without special casing.
struct BraceParts {
  double one_minus_G;
  double S;
  double S2_minus_G2;
};

inline BraceParts brace_parts(double u2, double omu2, double m) {
  const double D2 = 4.0 * (1.0 - m) * u2;
  const double S = std::sqrt(omu2 * omu2 + D2);
  const double G2 = 0.5 * (S + omu2);
  const double G = std::sqrt(std::max(G2, 0.0));
  const double one_minus_G = 2.0 * m * u2 / (((1.0 + u2) + S) * (1.0 + G));
  const double SmO = (omu2 >= 0.0) ? (S + omu2 > 0.0 ? D2 / (S + omu2) : 0.0)
                                   : S - omu2;
  const double S2_minus_G2 = D2 - omu2 * u2 - 0.5 * SmO;
  return {one_minus_G, S, S2_minus_G2};
}

}  // namespace

void validate_point(const TensorPoint& p) {
  if (!(p.zeta >= 0.0) || !(p.y >= p.zeta) || !(p.tau >= 0.0))
    throw std::invalid_argument("tensor point must satisfy y >= zeta >= 0, tau >= 0");
}

double g_tilde(const TensorPoint& p, const GrapheneModel& g) {
  validate_point(p);
  const double v = g.v_tilde;
  if (g.use_exact_gtilde)
    return std::sqrt(v * v * p.y * p.y + (1.0 - v * v) * p.zeta * p.zeta);
  return std::hypot(v * p.y, p.zeta);
}

double pi00_zero_t(const TensorPoint& p, const GrapheneModel& g, const Constants& c) {
  validate_point(p);
  if (p.y == 0.0 && p.zeta == 0.0)
    throw std::domain_error("pi00_zero_t is singular at y = zeta = 0");
  const double gt = g_tilde(p, g);
  return M_PI * c.alpha_fs * (p.y - p.zeta) * (p.y + p.zeta) / gt;
}

double pi_zero_t(const TensorPoint& p, const GrapheneModel& g, const Constants& c) {
  validate_point(p);
  const double gt = g_tilde(p, g);
  return M_PI * c.alpha_fs * (p.y - p.zeta) * (p.y + p.zeta) * gt;
}

TensorValues thermal_corrections(const TensorPoint& p, const GrapheneModel& g,
                                 double rel_tol, const Constants& c) {
  validate_point(p);
  if (!(p.tau > 0.0)) throw std::invalid_argument("thermal corrections require tau > 0");

  TensorValues out;
  const double gt = g_tilde(p, g);
  out.pi00_zero = (p.y == 0.0 && p.zeta == 0.0)
                      ? 0.0
                      : M_PI * c.alpha_fs * (p.y - p.zeta) * (p.y + p.zeta) / gt;
  out.pi_zero = M_PI * c.alpha_fs * (p.y - p.zeta) * (p.y + p.zeta) * gt;
  if (gt == 0.0) return out;  // origin, everything vanishes

  const double v = g.v_tilde;
  const double B = M_PI * gt / p.tau;
  const double g2 = gt * gt;
  double m = v * v * (p.y - p.zeta) * (p.y + p.zeta) / g2;
  if (m > 1.0 + 1e-12) throw std::logic_error("branch argument went negative: m > 1");
  m = std::min(m, 1.0);

  // The brace constant cancels exactly at u = 0 for the exact g form, which
  // is the light-cone zero of the correction; the same grouping is kept for
  // the small-v form (the raw -zeta^2 there would leave a residue of order
  // v^2 zeta^2 whose ratio to the vanishing zero-T part blows up at the
  // light cone and corrupts the frequency sum).
  auto eval = [&](double u, double u2, double omu2) -> std::array<double, 2> {
    const double f = fermi(B * u);
    if (f == 0.0) return {0.0, 0.0};
    const BraceParts bp = brace_parts(u2, omu2, m);
    const double G = 1.0 - bp.one_minus_G;
    const double SmG = bp.S2_minus_G2 / (bp.S + G);
    const double trace_brace = g2 * (m * SmG / bp.S - bp.one_minus_G);
    return {f * bp.one_minus_G, f * trace_brace};
  };

  std::array<double, 2> total{0.0, 0.0}, toterr{0.0, 0.0};
  long evals = 0;
  auto accumulate = [&](const numerics::QuadratureResultN<2>& r) {
    for (int j = 0; j < 2; ++j) {
      total[j] += r.value[j];
      toterr[j] += r.abs_error[j];
    }
    evals += r.evaluations;
  };

  // u in [0, 1] via u = sin(phi): the trace integrand's 1/sqrt(1-u^2)
  // endpoint behavior at m -> 1 becomes smooth in phi, and cos^2(phi)
  // provides 1 - u^2 without cancellation.
  auto eval_phi = [&](double phi) -> std::array<double, 2> {
    const double sn = std::sin(phi);
    const double cs = std::cos(phi);
    auto r = eval(sn, sn * sn, cs * cs);
    return {r[0] * cs, r[1] * cs};
  };
  const double ustar = 1.0 / B;
  const double phi_star = std::asin(std::min(ustar, 1.0));
  if (phi_star < M_PI / 2.0 * 0.999) {
    accumulate(numerics::integrate_pair(eval_phi, 0.0, phi_star, rel_tol, 800));
    accumulate(numerics::integrate_pair(eval_phi, phi_star, M_PI / 2.0, rel_tol, 800));
  } else {
    accumulate(numerics::integrate_pair(eval_phi, 0.0, M_PI / 2.0, rel_tol, 800));
  }

  // tail u > 1: geometric panels on the Fermi decay scale
  {
    auto eval_tail = [&](double u) {
      return eval(u, u * u, (1.0 - u) * (1.0 + u));
    };
    double a = 1.0;
    double len = std::max(ustar, 0.5);
    int quiet = 0;
    bool done = false;
    for (int k = 0; k < 80 && !done; ++k) {
      const double seg_abs =
          0.1 * rel_tol * std::min(std::abs(total[0]), std::abs(total[1]));
      auto r = numerics::integrate_pair(eval_tail, a, a + len, rel_tol, 800, seg_abs);
      accumulate(r);
      double mag = 0.0;
      for (int j = 0; j < 2; ++j)
        mag = std::max(mag, std::abs(r.value[j]) /
                                std::max(std::abs(total[j]), numerics::kAbsFloor));
      if (mag < 0.25 * rel_tol) {
        if (++quiet >= 2) done = true;
      } else {
        quiet = 0;
      }
      a += len;
      len *= 2.0;
    }
    if (!done)
      throw numerics::numeric_error("thermal_corrections: tail not negligible", total[0],
                                    toterr[0]);
  }

  const double pref = 8.0 * c.alpha_fs * gt / (v * v);
  out.dpi00 = pref * total[0];
  out.dpi = pref * total[1];
  out.dpi00_error = pref * toterr[0];
  out.dpi_error = pref * toterr[1];
  out.evaluations = evals;
  return out;
}

double delta_pi00(const TensorPoint& p, const GrapheneModel& g, double rel_tol,
                  const Constants& c) {
  return thermal_corrections(p, g, rel_tol, c).dpi00;
}

double delta_pi(const TensorPoint& p, const GrapheneModel& g, double rel_tol,
                const Constants& c) {
  return thermal_corrections(p, g, rel_tol, c).dpi;
}

namespace {

// Both zero-frequency x-integrals in one pass. The integrands depend on x
// only through s = sqrt(x(1-x)), so the integral is twice the [0, 1/2] half;
// x = sin^2(theta) turns that into a smooth integral over [0, pi/4] with an
// extra split where the exponent By*s reaches ~45.
struct ZeroFreqIntegrals {
  double j_log = 0.0;    // int_0^1 ln[1 + e^(-By s)] dx
  double j_fermi = 0.0;  // int_0^1 s / (e^(By s) + 1) dx
  double err_log = 0.0;
  double err_fermi = 0.0;
  long evaluations = 0;
};

ZeroFreqIntegrals zero_freq_integrals(double y, double Bt, double rel_tol) {
  auto eval = [&](double th) -> std::array<double, 2> {
    const double s = 0.5 * std::sin(2.0 * th);  // sin(th) cos(th)
    const double w = std::sin(2.0 * th);        // dx = sin(2 th) d(th)
    const double e = Bt * y * s;
    if (e > 708.0) return {0.0, 0.0};
    const double x = std::exp(-e);
    return {std::log1p(x) * w, s * x / (1.0 + x) * w};
  };
  ZeroFreqIntegrals out;
  auto accumulate = [&](const numerics::QuadratureResultN<2>& r) {
    out.j_log += 2.0 * r.value[0];
    out.j_fermi += 2.0 * r.value[1];
    out.err_log += 2.0 * r.abs_error[0];
    out.err_fermi += 2.0 * r.abs_error[1];
    out.evaluations += r.evaluations;
  };
  const double bye = Bt * y;
  double th_star = M_PI / 4.0;
  if (bye > 180.0) th_star = 0.5 * std::asin(std::min(90.0 / bye, 1.0));
  if (th_star < M_PI / 4.0 * 0.999) {
    accumulate(numerics::integrate_pair(eval, 0.0, th_star, rel_tol, 600));
    accumulate(numerics::integrate_pair(eval, th_star, M_PI / 4.0, rel_tol, 600));
  } else {
    accumulate(numerics::integrate_pair(eval, 0.0, M_PI / 4.0, rel_tol, 600));
  }
  return out;
}

}  // namespace

double delta_pi00_zero_freq(double y, double tau, const GrapheneModel& g, double rel_tol,
                            const Constants& c) {
  if (!(y > 0.0) || !(tau > 0.0))
    throw std::invalid_argument("delta_pi00_zero_freq requires y > 0 and tau > 0");
  const double v = g.v_tilde;
  const double Bt = 2.0 * M_PI * v / tau;  // T_eff_g / T
  const auto q = zero_freq_integrals(y, Bt, rel_tol);
  return 8.0 * c.alpha_fs * tau / (M_PI * v * v) * q.j_log;
}

double delta_pi_zero_freq(double y, double tau, const GrapheneModel& g, double rel_tol,
                          const Constants& c) {
  if (!(y > 0.0) || !(tau > 0.0))
    throw std::invalid_argument("delta_pi_zero_freq requires y > 0 and tau > 0");
  const double v = g.v_tilde;
  const double Bt = 2.0 * M_PI * v / tau;
  const auto q = zero_freq_integrals(y, Bt, rel_tol);
  return -16.0 * c.alpha_fs * v * y * y * y * q.j_fermi;
}

ZeroFreqCorrections zero_freq_corrections(double y, double tau, const GrapheneModel& g,
                                          double rel_tol, const Constants& c) {
  if (!(y > 0.0) || !(tau > 0.0))
    throw std::invalid_argument("zero_freq_corrections requires y > 0 and tau > 0");
  const double v = g.v_tilde;
  const double Bt = 2.0 * M_PI * v / tau;
  const auto q = zero_freq_integrals(y, Bt, rel_tol);
  ZeroFreqCorrections out;
  const double pref00 = 8.0 * c.alpha_fs * tau / (M_PI * v * v);
  const double pref_tr = -16.0 * c.alpha_fs * v * y * y * y;
  out.dpi00 = pref00 * q.j_log;
  out.dpi = pref_tr * q.j_fermi;
  out.dpi00_error = pref00 * q.err_log;
  out.dpi_error = std::abs(pref_tr) * q.err_fermi;
  out.evaluations = q.evaluations;
  return out;
}

}  // namespace cpg::poltensor
