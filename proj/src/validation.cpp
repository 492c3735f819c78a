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

#include "cpg/validation.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "cpg/asymptotics.hpp"
#include "cpg/cli.hpp"
#include "cpg/lifshitz.hpp"
#include "cpg/numerics.hpp"
#include "cpg/poltensor.hpp"
#include "cpg/reflection.hpp"
#include "cpg/units.hpp"

namespace cpg::validation {

namespace {

constexpr double kSeparation = 2e-7;  // 200 nm reference point

const Constants& C() { return Constants::codata2018(); }

GrapheneModel model() { return GrapheneModel{1.0 / 300.0, false}; }

AtomSpec test_atom() {
  const double a0 = alpha0_from_atomic_units(100.0);
  return make_atom(a0, a0, "check");
}

ThermalGeometry geometry_for_tau(double tau) {
  const auto probe = make_thermal_geometry(kSeparation, 1.0, model());
  return make_thermal_geometry(kSeparation, tau * probe.T_eff / (2.0 * M_PI), model());
}

struct Ctx {
  std::ostream* progress;
  int threads;
  std::vector<CheckResult> results;

  void note(const std::string& s) {
    if (progress) *progress << "[validate] " << s << std::endl;
  }
  void record(int id, const std::string& name, bool pass, const std::string& detail) {
    results.push_back({id, name, pass, detail});
    note("criterion " + std::to_string(id) + (pass ? " PASS" : " FAIL"));
  }
  void guarded(int id, const std::string& name, const std::function<void()>& body) {
    note("criterion " + std::to_string(id) + ": " + name);
    try {
      body();
    } catch (const std::exception& e) {
      record(id, name, false, std::string("exception: ") + e.what());
    }
  }
};

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(4);
  ss << v;
  return ss.str();
}

// 1. The two zero-frequency representations of the thermal tensor
// corrections agree pointwise.
void check_representations(Ctx& ctx) {
  ctx.guarded(1, "zero-frequency representation equivalence", [&] {
    const auto g = model();
    double worst = 0.0;
    for (double y : {0.5, 1.0, 5.0})
      for (double Bt : {2.0, 10.0, 100.0}) {
        const double tau = 2.0 * M_PI * g.v_tilde / Bt;
        const auto u_route = poltensor::thermal_corrections({0.0, y, tau}, g, 1e-11);
        const double x00 = poltensor::delta_pi00_zero_freq(y, tau, g, 1e-11);
        const double xtr = poltensor::delta_pi_zero_freq(y, tau, g, 1e-11);
        worst = std::max(worst, std::abs(u_route.dpi00 / x00 - 1.0));
        worst = std::max(worst, std::abs(u_route.dpi / xtr - 1.0));
      }
    ctx.record(1, "zero-frequency representation equivalence", worst <= 1e-8,
               "max rel diff " + fmt(worst) + ", required <= 1e-8");
  });
}

// 2. Closed forms of the I integrals against direct quadrature, plus bounded
// small-b expansion remainders.
void check_i_integrals(Ctx& ctx) {
  ctx.guarded(2, "I-integral closed forms and expansions", [&] {
    double worst = 0.0;
    for (double b : {0.05, 0.1, 0.25, 0.4}) {
      for (int k : {2, 3}) {
        const double closed = (k == 2) ? asymptotics::i2(b) : asymptotics::i3(b);
        const double quad =
            numerics::integrate_finite(
                [&](double x) {
                  return 1.0 / std::pow(b + std::sqrt(x * (1.0 - x)), k);
                },
                0.0, 1.0, 1e-12, /*endpoint_sqrt=*/true)
                .value;
        worst = std::max(worst, std::abs(closed / quad - 1.0));
      }
    }
    bool remainders_ok = true;
    for (double b : {1e-2, 1e-3, 1e-4}) {
      const double r2 = asymptotics::i2(b) + 4.0 * std::log(b);
      const double r2c = asymptotics::i2(2.0 * b) + 4.0 * std::log(2.0 * b);
      const double r3 = asymptotics::i3(b) - 2.0 / b - 24.0 * b * std::log(b);
      const double r3c =
          asymptotics::i3(2.0 * b) - 1.0 / b - 48.0 * b * std::log(2.0 * b);
      remainders_ok = remainders_ok && std::abs(r2) <= std::abs(r2c) + 0.1 &&
                      std::abs(r3) <= std::abs(r3c) + 0.1;
    }
    ctx.record(2, "I-integral closed forms and expansions",
               worst <= 1e-9 && remainders_ok,
               "max rel diff " + fmt(worst) + " (<= 1e-9), remainders " +
                   (remainders_ok ? "bounded" : "unbounded"));
  });
}

// 3. Sum-integral identity for the exponential family.
void check_abel_plana(Ctx& ctx) {
  ctx.guarded(3, "Abel-Plana identity residual", [&] {
    double worst = 0.0;
    for (double s : {0.5, 1.0, 5.0})
      worst = std::max(worst, numerics::abel_plana_residual(s));
    ctx.record(3, "Abel-Plana identity residual", worst <= 1e-10,
               "max residual " + fmt(worst) + ", required <= 1e-10");
  });
}

// 4. Implicit correction against its quartic closed form.
void check_implicit_correction(Ctx& ctx) {
  ctx.guarded(4, "implicit correction vs T^4 closed form", [&] {
    const auto atom = test_atom();
    const auto g = model();
    lifshitz::EvalOptions o;
    o.rel_tol = 1e-10;
    o.threads = ctx.threads;
    bool pass = true;
    std::string detail = "ratios";
    for (double tau : {0.02, 0.01, 0.005}) {
      const auto tg = geometry_for_tau(tau);
      const double num = lifshitz::delta1_implicit(atom, tg, g, o);
      const double asym = asymptotics::delta1_asymptotic(atom, kSeparation, tg.T, g);
      const double ratio = num / asym;
      detail += " " + fmt(ratio);
      pass = pass && std::abs(ratio - 1.0) <= 0.03;
    }
    ctx.record(4, "implicit correction vs T^4 closed form", pass,
               detail + ", each required within 3% of 1");
  });
}

// 5. Dominant explicit correction against its cubic closed form.
void check_explicit_correction(Ctx& ctx) {
  ctx.guarded(5, "l >= 1 explicit correction vs T^3 closed form", [&] {
    const auto atom = test_atom();
    const auto g = model();
    lifshitz::EvalOptions o;
    o.rel_tol = 1e-9;
    o.threads = ctx.threads;
    bool pass = true;
    std::string detail = "ratios";
    for (double tau : {4e-3, 2e-3, 1e-3}) {
      const auto tg = geometry_for_tau(tau);
      const double num = lifshitz::delta2_lgeq1(atom, tg, g, o);
      const double asym =
          asymptotics::delta2_lgeq1_asymptotic(atom, kSeparation, tg.T, g);
      const double ratio = num / asym;
      detail += " " + fmt(ratio);
      pass = pass && std::abs(ratio - 1.0) <= 0.02;
    }
    ctx.record(5, "l >= 1 explicit correction vs T^3 closed form", pass,
               detail + ", each required within 2% of 1");
  });
}

// 6. Zero-frequency correction: two-parameter log fit recovers the closed
// form's log coefficient.
void check_zero_freq_fit(Ctx& ctx) {
  ctx.guarded(6, "l = 0 correction log-coefficient fit", [&] {
    const auto atom = test_atom();
    const auto g = model();
    lifshitz::EvalOptions o;
    o.rel_tol = 1e-10;
    o.threads = ctx.threads;
    const auto k = asymptotics::coefficients(atom, kSeparation, g);
    const double v = g.v_tilde;
    // target log coefficient in kT_eff units per (tau/2pi)^4 ln(T/T_eff_g)
    const double A_target = 12.0 * C().zeta3 * C().alpha_fs * (k.r1 + k.r2) / (v * v);
    double s_xx = 0, s_xy = 0, s_yy = 0, s_xz = 0, s_yz = 0;
    for (int i = 0; i < 7; ++i) {
      const double tau = 1e-3 * std::pow(10.0, i / 6.0);
      const auto tg = geometry_for_tau(tau);
      const double d =
          lifshitz::delta2_l0(atom, tg, g, o) / (C().k_B * tg.T_eff);
      const double t4 = std::pow(tau / (2.0 * M_PI), 4);
      const double x = t4 * std::log(tau / (2.0 * M_PI * v));
      const double y = t4;
      s_xx += x * x;
      s_xy += x * y;
      s_yy += y * y;
      s_xz += x * d;
      s_yz += y * d;
    }
    const double det = s_xx * s_yy - s_xy * s_xy;
    const double A_fit = (s_xz * s_yy - s_yz * s_xy) / det;
    const double ratio = A_fit / A_target;
    ctx.record(6, "l = 0 correction log-coefficient fit",
               std::abs(ratio - 1.0) <= 0.10,
               "fit/target = " + fmt(ratio) + ", required within 10% of 1");
  });
}

// 7. Nernst behavior: positive entropy, quadratic slope, and the closed-form
// entropy coefficient.
void check_nernst(Ctx& ctx) {
  ctx.guarded(7, "Nernst: S > 0, slope 2, coefficient", [&] {
    const auto atom = test_atom();
    const auto g = model();
    lifshitz::EvalOptions o;
    o.rel_tol = 1e-9;
    o.threads = ctx.threads;
    const int n = 6;
    bool positive = true;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double lowest_T = 0.0, lowest_S = 0.0;
    for (int i = 0; i < n; ++i) {
      // one decade of tau, descending
      const double tau = 1.1e-2 * std::pow(0.1, i / static_cast<double>(n - 1));
      const auto tg = geometry_for_tau(tau);
      const double S = lifshitz::entropy(atom, kSeparation, tg.T, g, o);
      positive = positive && S > 0.0;
      const double lx = std::log(tg.T), ly = std::log(std::abs(S));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      lowest_T = tg.T;
      lowest_S = S;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double coef_ratio =
        lowest_S / asymptotics::entropy_low_t(atom, kSeparation, lowest_T, g);
    const bool pass = positive && std::abs(slope - 2.0) <= 0.1 &&
                      std::abs(coef_ratio - 1.0) <= 0.05;
    ctx.record(7, "Nernst: S > 0, slope 2, coefficient", pass,
               std::string("S ") + (positive ? "> 0" : "NOT > 0") + ", slope " +
                   fmt(slope) + " (2.0 +- 0.1), S/T^2 ratio " + fmt(coef_ratio) +
                   " (within 5%)");
  });
}

// 8. Decomposition consistency: the linearization residual shrinks by at
// least 1.6 per tau halving.
void check_decomposition(Ctx& ctx) {
  ctx.guarded(8, "decomposition consistency under tau halving", [&] {
    const auto atom = test_atom();
    const auto g = model();
    lifshitz::EvalOptions o;
    o.rel_tol = 1e-10;
    o.threads = ctx.threads;
    std::vector<double> eps;
    for (double tau : {8e-3, 4e-3, 2e-3, 1e-3}) {
      const auto tg = geometry_for_tau(tau);
      const auto b = lifshitz::free_energy_breakdown(atom, tg, g, o);
      eps.push_back(std::abs(b.F_total_decomposed - b.F_total_numeric) /
                    std::abs(b.F_total_numeric - b.E0));
    }
    bool pass = true;
    std::string detail = "halving factors";
    for (size_t i = 1; i < eps.size(); ++i) {
      const double factor = eps[i - 1] / eps[i];
      detail += " " + fmt(factor);
      pass = pass && factor >= 1.6;
    }
    ctx.record(8, "decomposition consistency under tau halving", pass,
               detail + ", each required >= 1.6");
  });
}

// 9. Coefficient-ratio arithmetic.
void check_q_ratio(Ctx& ctx) {
  ctx.guarded(9, "Q1/Q2 coefficient ratio", [&] {
    const auto k = asymptotics::coefficients(test_atom(), kSeparation, model());
    const double ratio = k.q1 / k.q2;
    ctx.record(9, "Q1/Q2 coefficient ratio", std::abs(ratio - 2283.9) <= 0.5,
               "ratio = " + fmt(ratio) + ", required 2283.9 +- 0.5");
  });
}

// 10. The cubic TM-correction coefficient: 96 zeta(3), not 92 zeta(3). A
// Richardson step in tau removes the residual Fermi-integral corrections so
// that the two candidate coefficients separate cleanly.
void check_tm_coefficient(Ctx& ctx) {
  ctx.guarded(10, "TM correction coefficient adjudication (96 vs 92)", [&] {
    const auto g = model();
    const double ap = C().alpha_fs * M_PI;
    auto ratio_to_96 = [&](double tau, double y) {
      const poltensor::TensorPoint p{tau, y, tau};  // l = 1
      const auto dr = reflection::reflection_thermal_correction(p, g, 1e-11);
      const double gt = poltensor::g_tilde(p, g);
      const double x = tau / (2.0 * M_PI);
      const double law96 = 96.0 * C().zeta3 * C().alpha_fs * y /
                           (gt * gt * (ap * y + 2.0 * gt) * (ap * y + 2.0 * gt)) * x *
                           x * x;
      return dr.r_tm / law96;
    };
    bool pass = true;
    std::string detail;
    for (double y : {0.5, 1.0, 2.0}) {
      const double raw = ratio_to_96(1e-3, y);
      const double r2 = ratio_to_96(5e-4, y);
      const double r3 = ratio_to_96(2.5e-4, y);
      const double extrap = (4.0 * r3 - r2) / 3.0;
      const double vs92 = extrap * 96.0 / 92.0;
      detail += " y=" + fmt(y) + ": " + fmt(raw) + "/" + fmt(extrap);
      pass = pass && std::abs(raw - 1.0) <= 0.05 && std::abs(extrap - 1.0) <= 0.02 &&
             std::abs(vs92 - 1.0) >= 0.03;
    }
    ctx.record(10, "TM correction coefficient adjudication (96 vs 92)", pass,
               "ratio to the 96-form (raw at tau=1e-3 / tau-extrapolated):" + detail +
                   "; raw required within 5%, extrapolated within 2% and away from "
                   "the 92-form by 3%");
  });
}

// 11. Reflection-coefficient bounds over the Matsubara grid; the tensor's
// branch-argument assertion must never fire.
void check_reflection_bounds(Ctx& ctx) {
  ctx.guarded(11, "reflection bounds on the frequency grid", [&] {
    const auto g = model();
    bool pass = true;
    long points = 0;
    for (double tau : {1e-3, 5e-2}) {
      for (long l = 0; l <= 200 && pass; ++l) {
        const double z = tau * static_cast<double>(l);
        for (double frac : {1e-7, 1e-4, 1e-2, 0.1, 0.3, 0.6, 0.9, 1.0}) {
          const double y = (l == 0) ? std::max(frac * 40.0, 1e-6)
                                    : z + frac * (40.0 - z);
          if (y <= z && l > 0) continue;
          reflection::ReflectionPair r;
          if (l == 0)
            r = reflection::reflection_full_zero_freq(y, tau, g, 1e-8);
          else
            r = reflection::reflection_full({z, y, tau}, g, 1e-8);
          ++points;
          if (!(r.r_tm >= 0.0 && r.r_tm < 1.0 && r.r_te <= 0.0 && r.r_te > -1.0)) {
            pass = false;
            break;
          }
        }
      }
    }
    ctx.record(11, "reflection bounds on the frequency grid", pass,
               std::to_string(points) + " grid points, bounds " +
                   (pass ? "all satisfied" : "violated") + ", branch assertion quiet");
  });
}

// 12. Byte-identical repeated sweeps.
void check_determinism(Ctx& ctx) {
  ctx.guarded(12, "sweep output determinism", [&] {
    cli::RunRequest req;
    req.command = cli::Command::sweep;
    req.atom = test_atom();
    req.opts.rel_tol = 1e-6;
    req.opts.threads = ctx.threads;
    for (double T : {30.0, 100.0, 300.0}) req.grid.emplace_back(kSeparation, T);
    std::ostringstream s1, s2, err;
    const int rc1 = cli::run(req, s1, err);
    const int rc2 = cli::run(req, s2, err);
    const bool pass = rc1 == 0 && rc2 == 0 && s1.str() == s2.str();
    ctx.record(12, "sweep output determinism", pass,
               pass ? "two runs byte-identical"
                    : "outputs differ or a record failed");
  });
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(std::ostream* progress, int threads) {
  Ctx ctx{progress, threads, {}};
  check_representations(ctx);
  check_i_integrals(ctx);
  check_abel_plana(ctx);
  check_implicit_correction(ctx);
  check_explicit_correction(ctx);
  check_zero_freq_fit(ctx);
  check_nernst(ctx);
  check_decomposition(ctx);
  check_q_ratio(ctx);
  check_tm_coefficient(ctx);
  check_reflection_bounds(ctx);
  check_determinism(ctx);
  return ctx.results;
}

}  // namespace cpg::validation
