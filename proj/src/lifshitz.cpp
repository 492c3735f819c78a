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

#include "cpg/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cpg/numerics.hpp"
#include "cpg/poltensor.hpp"
#include "cpg/reflection.hpp"

namespace cpg::lifshitz {

namespace {

using numerics::QuadratureResult;
using poltensor::TensorPoint;
using reflection::ReflectionPair;

GrapheneModel effective_model(const GrapheneModel& g, const EvalOptions& opts) {
  GrapheneModel eg = g;
  eg.use_exact_gtilde = opts.use_exact_gtilde;
  return eg;
}

// practical floor of the kinked tensor-correction quadratures
double inner_tol(const EvalOptions& opts) {
  return std::max(opts.rel_tol * 0.3, 1e-11);
}

struct ScaledAtom {
  double A;  // alpha0 / a^3
  double B;  // beta0 / a^3
};

ScaledAtom scale_atom(const AtomSpec& atom, double a) {
  if (!(a > 0.0)) throw invalid_geometry_error("separation must be positive");
  if (atom.alpha0 < 0.0 || atom.beta0 < 0.0)
    throw invalid_atom_error("polarizabilities must be nonnegative");
  const double a3 = a * a * a;
  return {atom.alpha0 / a3, atom.beta0 / a3};
}

double kernel(double y, double zeta, const ScaledAtom& s, const ReflectionPair& r) {
  const double z2 = zeta * zeta;
  return std::exp(-y) * ((2.0 * y * y * s.A - z2 * (s.A + s.B)) * r.r_tm +
                         (2.0 * y * y * s.B - z2 * (s.A + s.B)) * r.r_te);
}

// Upper bound on |dPi/Pi(0)| over y >= zeta_l, from the small-argument form
// of the Fermi integrals with g >= zeta_l. Used to skip the expensive tensor
// corrections at frequencies where they cannot matter.
double correction_ratio_bound(long l, double tau, double zeta3) {
  const double x = tau / (2.0 * M_PI);
  const double zl = tau * static_cast<double>(l);
  return 96.0 * zeta3 * x * x * x / (M_PI * zl * zl * zl);
}

// Deterministic block-parallel primed Matsubara sum. Terms are computed in
// index blocks (possibly in parallel) and reduced strictly in order. The
// sum stops once three consecutive terms fall below rel_tol of the running
// value AND the estimated tail is itself below that threshold; the second
// condition matters because the slowly decaying frequency sums would
// otherwise leave a truncated tail of order rel_tol/tau rather than
// rel_tol, which is large enough to bias F - E0 and to act as noise when
// the free energy is differentiated. Throws if l_max is reached first.
struct BlockSum {
  double value = 0.0;
  long terms = 0;
  double tail_bound = 0.0;
};

template <typename TermFn>
BlockSum primed_block_sum(const TermFn& term, double half_term0, double rel_tol,
                          long l_max, int threads) {
  BlockSum out;
  out.value = half_term0;
  out.terms = 1;
  const long block = std::max<long>(64, 16L * std::max(threads, 1));
  int streak = 0;
  double t_prev = 0.0, t_prev2 = 0.0, tail = 0.0;
  std::vector<double> vals;
  for (long start = 1; start <= l_max; start += block) {
    const long n = std::min(block, l_max - start + 1);
    numerics::parallel_map(
        n, [&](long i) { return term(start + i); }, vals, threads);
    for (long i = 0; i < n; ++i) {
      const long l = start + i;
      const double t = vals[static_cast<size_t>(i)];
      out.value += t;
      ++out.terms;
      const double thresh =
          rel_tol * std::max(std::abs(out.value), numerics::kAbsFloor);
      streak = (std::abs(t) < thresh) ? streak + 1 : 0;
      if (streak >= 3) {
        double r = 0.0;
        if (std::abs(t_prev) > 0.0) r = std::abs(t) / std::abs(t_prev);
        if (std::abs(t_prev2) > 0.0)
          r = std::max(r, std::abs(t_prev) / std::abs(t_prev2));
        tail = std::abs(t) * static_cast<double>(l);
        if (r > 0.0 && r < 0.999) tail = std::min(tail, std::abs(t) * r / (1.0 - r));
        if (tail <= thresh) {
          out.tail_bound = tail;
          return out;
        }
        streak = 2;
      }
      t_prev2 = t_prev;
      t_prev = t;
    }
  }
  throw numerics::numeric_error("Matsubara sum unconverged at l_max", out.value, tail);
}

double phi_impl(double zeta, const ScaledAtom& s, const GrapheneModel& g, double rel_tol,
                const Constants& c) {
  auto f = [&](double y) {
    const TensorPoint p{zeta, y, 0.0};
    return kernel(y, zeta, s, reflection::reflection_zero_t(p, g, c));
  };
  return numerics::integrate_decaying(f, zeta, rel_tol, 1.0).value;
}

// int_0^inf Phi(zeta) dzeta; the integrand varies on the v and alpha*pi
// scales near zero, so the first panel is kept short.
double phi_integral(const ScaledAtom& s, const GrapheneModel& g, double rel_tol,
                    const Constants& c) {
  auto f = [&](double z) { return phi_impl(z, s, g, rel_tol * 0.3, c); };
  return numerics::integrate_decaying(f, 0.0, rel_tol, 0.05).value;
}

// Matsubara term of the full free energy at l >= 1. Falls back to the
// zero-temperature coefficients when the thermal correction is provably
// below the requested tolerance.
double full_term(long l, double tau, const ScaledAtom& s, const GrapheneModel& g,
                 const EvalOptions& opts, const Constants& c) {
  const double zl = tau * static_cast<double>(l);
  const bool need_delta =
      correction_ratio_bound(l, tau, c.zeta3) > 0.02 * opts.rel_tol;
  auto f = [&](double y) {
    const TensorPoint p{zl, y, tau};
    ReflectionPair r;
    if (!need_delta) {
      r = reflection::reflection_zero_t(p, g, c);
    } else if (opts.first_order_coefficients) {
      const auto r0 = reflection::reflection_zero_t(p, g, c);
      const auto dr = reflection::reflection_thermal_correction(p, g, inner_tol(opts), c);
      r = {r0.r_tm + dr.r_tm, r0.r_te + dr.r_te};
    } else {
      r = reflection::reflection_full(p, g, inner_tol(opts), c);
    }
    return kernel(y, zl, s, r);
  };
  return numerics::integrate_decaying(f, zl, opts.rel_tol * 0.5, 1.0).value;
}

double zero_freq_term(double tau, const ScaledAtom& s, const GrapheneModel& g,
                      const EvalOptions& opts, const Constants& c) {
  // the primed 1/2 against the kernel's 2 y^2 leaves y^2
  auto f = [&](double y) {
    ReflectionPair r;
    if (opts.first_order_coefficients) {
      const TensorPoint p{0.0, y, tau};
      const auto r0 = reflection::reflection_zero_t(p, g, c);
      const auto dr = reflection::reflection_thermal_correction_zero_freq(
          y, tau, g, inner_tol(opts), c);
      r = {r0.r_tm + dr.r_tm, r0.r_te + dr.r_te};
    } else {
      r = reflection::reflection_full_zero_freq(y, tau, g, inner_tol(opts), c);
    }
    return std::exp(-y) * y * y * (s.A * r.r_tm + s.B * r.r_te);
  };
  return numerics::integrate_decaying(f, 0.0, opts.rel_tol * 0.5, 1.0).value;
}

void require_positive_temperature(const ThermalGeometry& tg, const char* who) {
  if (!(tg.T > 0.0))
    throw invalid_temperature_error(std::string(who) +
                                    " requires T > 0; use energy_zero_t at T = 0");
}

}  // namespace

void validate_options(const EvalOptions& opts) {
  if (!(opts.rel_tol >= 1e-12 && opts.rel_tol <= 1e-4))
    throw std::invalid_argument("rel_tol must lie in [1e-12, 1e-4]");
  if (opts.l_max < 16) throw std::invalid_argument("l_max must be at least 16");
}

double phi(double zeta, const AtomSpec& atom, double a, const GrapheneModel& g,
           double rel_tol, const Constants& c) {
  if (!(zeta >= 0.0)) throw std::invalid_argument("phi requires zeta >= 0");
  return phi_impl(zeta, scale_atom(atom, a), g, rel_tol, c);
}

double energy_zero_t(const AtomSpec& atom, double a, const GrapheneModel& g,
                     const EvalOptions& opts, const Constants& c) {
  validate_options(opts);
  const ScaledAtom s = scale_atom(atom, a);
  if (s.A == 0.0 && s.B == 0.0) return 0.0;
  const GrapheneModel eg = effective_model(g, opts);
  const double I = phi_integral(s, eg, std::min(opts.rel_tol, 1e-11), c);
  return -c.hbar * c.c / (32.0 * M_PI * a) * I;
}

double free_energy_full(const AtomSpec& atom, const ThermalGeometry& tg,
                        const GrapheneModel& g, const EvalOptions& opts,
                        const Constants& c) {
  validate_options(opts);
  require_positive_temperature(tg, "free_energy_full");
  const ScaledAtom s = scale_atom(atom, tg.a);
  if (s.A == 0.0 && s.B == 0.0) return 0.0;
  const GrapheneModel eg = effective_model(g, opts);
  const double tau = tg.tau;

  // zero_freq_term already folds the primed 1/2 into its y^2 kernel
  const double t0 = zero_freq_term(tau, s, eg, opts, c);
  const auto sum = primed_block_sum(
      [&](long l) { return full_term(l, tau, s, eg, opts, c); }, t0, opts.rel_tol,
      opts.l_max, opts.threads);
  return -c.k_B * tg.T / 8.0 * sum.value;
}

double delta1_implicit(const AtomSpec& atom, const ThermalGeometry& tg,
                       const GrapheneModel& g, const EvalOptions& opts,
                       const Constants& c) {
  validate_options(opts);
  require_positive_temperature(tg, "delta1_implicit");
  const ScaledAtom s = scale_atom(atom, tg.a);
  if (s.A == 0.0 && s.B == 0.0) return 0.0;
  const GrapheneModel eg = effective_model(g, opts);
  const double tau = tg.tau;
  const double tol = std::min(opts.rel_tol, 1e-12);

  const auto sum = primed_block_sum(
      [&](long l) {
        return phi_impl(tau * static_cast<double>(l), s, eg, tol, c);
      },
      0.5 * phi_impl(0.0, s, eg, tol, c), tol, opts.l_max, opts.threads);
  const double I = phi_integral(s, eg, tol, c);
  return -c.k_B * tg.T / 8.0 * (sum.value - I / tau);
}

double delta2_lgeq1(const AtomSpec& atom, const ThermalGeometry& tg,
                    const GrapheneModel& g, const EvalOptions& opts, const Constants& c) {
  validate_options(opts);
  require_positive_temperature(tg, "delta2_lgeq1");
  const ScaledAtom s = scale_atom(atom, tg.a);
  if (s.A == 0.0 && s.B == 0.0) return 0.0;
  const GrapheneModel eg = effective_model(g, opts);
  const double tau = tg.tau;

  auto term = [&](long l) {
    const double zl = tau * static_cast<double>(l);
    auto f = [&](double y) {
      const TensorPoint p{zl, y, tau};
      const auto dr =
          reflection::reflection_thermal_correction(p, eg, inner_tol(opts), c);
      return kernel(y, zl, s, {dr.r_tm, dr.r_te});
    };
    return numerics::integrate_decaying(f, zl, opts.rel_tol * 0.5, 1.0).value;
  };
  const auto sum = primed_block_sum(term, 0.0, opts.rel_tol, opts.l_max, opts.threads);
  return -c.k_B * tg.T / 8.0 * sum.value;
}

double delta2_l0(const AtomSpec& atom, const ThermalGeometry& tg, const GrapheneModel& g,
                 const EvalOptions& opts, const Constants& c) {
  validate_options(opts);
  require_positive_temperature(tg, "delta2_l0");
  const ScaledAtom s = scale_atom(atom, tg.a);
  if (s.A == 0.0 && s.B == 0.0) return 0.0;
  const GrapheneModel eg = effective_model(g, opts);
  const double tau = tg.tau;

  auto f = [&](double y) {
    const auto dr = reflection::reflection_thermal_correction_zero_freq(
        y, tau, eg, inner_tol(opts), c);
    return std::exp(-y) * y * y * (s.A * dr.r_tm + s.B * dr.r_te);
  };
  const double val = numerics::integrate_decaying(f, 0.0, opts.rel_tol * 0.5, 1.0).value;
  return -c.k_B * tg.T / 8.0 * val;
}

FreeEnergyBreakdown free_energy_breakdown(const AtomSpec& atom, const ThermalGeometry& tg,
                                          const GrapheneModel& g, const EvalOptions& opts,
                                          const Constants& c) {
  validate_options(opts);
  require_positive_temperature(tg, "free_energy_breakdown");
  const ScaledAtom s = scale_atom(atom, tg.a);
  FreeEnergyBreakdown out;
  out.kT_eff = c.k_B * tg.T_eff;
  const GrapheneModel eg = effective_model(g, opts);
  const double tau = tg.tau;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  if (s.A == 0.0 && s.B == 0.0) return out;

  // E0 and d1 share one evaluation of the Phi integral so that the
  // decomposed total E0 + d1 reduces exactly to the coefficient sum.
  const double tol = std::min(opts.rel_tol, 1e-12);
  double I = nan;
  try {
    I = phi_integral(s, eg, tol, c);
    out.E0 = -c.hbar * c.c / (32.0 * M_PI * tg.a) * I;
  } catch (const numerics::numeric_error& e) {
    out.E0 = nan;
    out.flags.push_back(std::string("E0: ") + e.what());
  }
  try {
    const auto sum = primed_block_sum(
        [&](long l) { return phi_impl(tau * static_cast<double>(l), s, eg, tol, c); },
        0.5 * phi_impl(0.0, s, eg, tol, c), tol, opts.l_max, opts.threads);
    out.d1 = -c.k_B * tg.T / 8.0 * (sum.value - I / tau);
  } catch (const numerics::numeric_error& e) {
    out.d1 = nan;
    out.flags.push_back(std::string("d1: ") + e.what());
  }
  try {
    out.d2_lgeq1 = delta2_lgeq1(atom, tg, g, opts, c);
  } catch (const numerics::numeric_error& e) {
    out.d2_lgeq1 = nan;
    out.flags.push_back(std::string("d2_lgeq1: ") + e.what());
  }
  try {
    out.d2_l0 = delta2_l0(atom, tg, g, opts, c);
  } catch (const numerics::numeric_error& e) {
    out.d2_l0 = nan;
    out.flags.push_back(std::string("d2_l0: ") + e.what());
  }
  try {
    out.F_total_numeric = free_energy_full(atom, tg, g, opts, c);
  } catch (const numerics::numeric_error& e) {
    out.F_total_numeric = nan;
    out.flags.push_back(std::string("F_numeric: ") + e.what());
  }
  out.F_total_decomposed = out.E0 + out.d1 + out.d2_lgeq1 + out.d2_l0;
  return out;
}

double entropy(const AtomSpec& atom, double a, double T, const GrapheneModel& g,
               const EvalOptions& opts, const Constants& c) {
  validate_options(opts);
  if (!(T > 0.0)) throw invalid_temperature_error("entropy requires T > 0");
  // differencing the full free energy needs far tighter evaluations than the
  // caller's tolerance suggests: the thermal part being differentiated can
  // sit many orders below the zero-temperature energy
  EvalOptions eff = opts;
  eff.rel_tol = std::min(opts.rel_tol, 1e-9);
  auto deriv = [&]() {
    auto F = [&](double temp) {
      const auto tg = make_thermal_geometry(a, temp, g, c);
      return free_energy_full(atom, tg, g, eff, c);
    };
    return numerics::derivative_central(F, T, T / 50.0, 1e-4 * T);
  };
  try {
    return -deriv();
  } catch (const numerics::numeric_error&) {
    // retry once with the evaluations pinned near the precision floor
    eff.rel_tol = 1e-10;
    return -deriv();
  }
}

}  // namespace cpg::lifshitz
