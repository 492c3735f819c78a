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

#include <doctest.h>

#include <cmath>

#include "cpg/asymptotics.hpp"
#include "cpg/lifshitz.hpp"
#include "cpg/reflection.hpp"

using namespace cpg;
using namespace cpg::lifshitz;

namespace {

const GrapheneModel kG{1.0 / 300.0, false};
const Constants& kC = Constants::codata2018();
const double kA = 2e-7;  // 200 nm reference separation

// atom with alpha0/a^3 = beta0/a^3 = 1 at the reference separation, so that
// dimensionless anchors can be frozen directly
AtomSpec unit_atom() { return make_atom(kA * kA * kA, kA * kA * kA, "unit"); }

ThermalGeometry geom_from_tau(double tau) {
  const auto probe = make_thermal_geometry(kA, 1.0, kG);
  return make_thermal_geometry(kA, tau * probe.T_eff / (2.0 * M_PI), kG);
}

EvalOptions fast() {
  EvalOptions o;
  o.rel_tol = 1e-9;
  return o;
}

}  // namespace

TEST_CASE("phi") {
  const auto atom = unit_atom();
  SUBCASE("closed form at zero frequency") {
    // both coefficients are y-independent at zeta = 0 and int y^2 e^-y = 2
    const auto r = reflection::reflection_zero_t({0.0, 1.0, 0.0}, kG);
    const double expected = 4.0 * (r.r_tm + r.r_te);
    CHECK(phi(0.0, atom, kA, kG, 1e-11) == doctest::Approx(expected).epsilon(1e-9));
  }
  SUBCASE("empty atom") {
    CHECK(phi(0.7, make_atom(0.0, 0.0), kA, kG, 1e-10) == 0.0);
  }
  SUBCASE("large-zeta suppression") {
    CHECK(std::abs(phi(30.0, atom, kA, kG, 1e-10)) < 1e-10 * phi(0.0, atom, kA, kG, 1e-10));
  }
}

TEST_CASE("energy_zero_t") {
  SUBCASE("zeros and linearity") {
    CHECK(energy_zero_t(make_atom(0.0, 0.0), kA, kG) == 0.0);
    const double a0 = alpha0_from_atomic_units(100.0);
    const double e1 = energy_zero_t(make_atom(a0, 0.0), kA, kG);
    const double e2 = energy_zero_t(make_atom(2.0 * a0, 0.0), kA, kG);
    CHECK(e1 < 0.0);
    CHECK(e2 == doctest::Approx(2.0 * e1).epsilon(1e-10));
  }
  SUBCASE("frozen dimensionless value") {
    // E0 * 16 pi / kT_eff = -int Phi = -0.50593938 for the unit atom
    const auto tg = make_thermal_geometry(kA, 1.0, kG);
    const double e0 = energy_zero_t(unit_atom(), kA, kG);
    const double dimless = e0 * 16.0 * M_PI / (kC.k_B * tg.T_eff);
    CHECK(dimless == doctest::Approx(-0.5059393828).epsilon(2e-7));
  }
}

TEST_CASE("free_energy_full basics") {
  const auto atom = unit_atom();
  SUBCASE("T = 0 is routed away") {
    auto tg = make_thermal_geometry(kA, 0.0, kG);
    CHECK_THROWS_AS(free_energy_full(atom, tg, kG), invalid_temperature_error);
  }
  SUBCASE("empty atom gives zero") {
    const auto tg = geom_from_tau(0.01);
    CHECK(free_energy_full(make_atom(0.0, 0.0), tg, kG, fast()) == 0.0);
  }
  SUBCASE("attractive for a purely electric atom") {
    const auto tg = geom_from_tau(0.02);
    const double f =
        free_energy_full(make_atom(alpha0_from_atomic_units(100.0), 0.0), tg, kG, fast());
    CHECK(f < 0.0);
  }
  SUBCASE("joint linearity in the polarizabilities") {
    const auto tg = geom_from_tau(0.01);
    EvalOptions o = fast();
    const double f1 = free_energy_full(atom, tg, kG, o);
    AtomSpec twice = make_atom(2.0 * atom.alpha0, 2.0 * atom.beta0);
    const double f2 = free_energy_full(twice, tg, kG, o);
    CHECK(f2 == doctest::Approx(2.0 * f1).epsilon(1e-12));
  }
}

TEST_CASE("free energy converges to the zero-T energy") {
  // Richardson extrapolation in tau^3 over a falling tau sequence
  const auto atom = unit_atom();
  EvalOptions o;
  o.rel_tol = 1e-10;
  const double e0 = energy_zero_t(atom, kA, kG, o);
  const double f2 = free_energy_full(atom, geom_from_tau(5e-3), kG, o);
  const double f3 = free_energy_full(atom, geom_from_tau(2.5e-3), kG, o);
  const double extrap = f3 + (f3 - f2) / 7.0;
  CHECK(std::abs(extrap - e0) <= 1e-4 * std::abs(e0));

  // and the raw distance is within the sum of closed-form correction scales
  const auto tg = geom_from_tau(5e-3);
  const double budget = std::abs(asymptotics::delta1_asymptotic(atom, kA, tg.T, kG)) +
                        std::abs(asymptotics::delta2_lgeq1_asymptotic(atom, kA, tg.T, kG)) +
                        std::abs(asymptotics::delta2_l0_asymptotic(atom, kA, tg.T, kG));
  CHECK(std::abs(f2 - e0) <= budget);
}

TEST_CASE("delta1_implicit") {
  const auto atom = unit_atom();
  SUBCASE("frozen dimensionless references") {
    // D = -8 d1 / (k_B T) for the unit atom
    for (auto [tau, expected] : std::initializer_list<std::pair<double, double>>{
             {0.02, 0.052141051}, {0.01, 0.013102857}, {0.005, 0.0025382977}}) {
      const auto tg = geom_from_tau(tau);
      const double d1 = delta1_implicit(atom, tg, kG);
      const double D = -8.0 * d1 / (kC.k_B * tg.T);
      CHECK(D == doctest::Approx(expected).epsilon(2e-5));
    }
  }
  SUBCASE("sign and decay") {
    const double d1a = delta1_implicit(atom, geom_from_tau(0.02), kG);
    const double d1b = delta1_implicit(atom, geom_from_tau(0.005), kG);
    CHECK(d1a < 0.0);
    CHECK(std::abs(d1b) < std::abs(d1a) / 3.0);
  }
  SUBCASE("purely electric atom stays negative") {
    const auto tg = geom_from_tau(0.01);
    CHECK(delta1_implicit(make_atom(alpha0_from_atomic_units(50.0), 0.0), tg, kG) < 0.0);
  }
}

TEST_CASE("delta2_lgeq1 frozen reference") {
  const auto atom = unit_atom();
  const auto tg = geom_from_tau(4e-3);
  EvalOptions o;
  o.rel_tol = 1e-9;
  const double d2 = delta2_lgeq1(atom, tg, kG, o);
  const double dimless = -8.0 * d2 / (kC.k_B * tg.T);
  CHECK(dimless == doctest::Approx(1.275121e-2).epsilon(5e-4));
}

TEST_CASE("delta2_l0") {
  const auto atom = unit_atom();
  SUBCASE("frozen reference at tau = 1e-3") {
    const auto tg = geom_from_tau(1e-3);
    const double d = delta2_l0(atom, tg, kG, fast());
    CHECK(d / (kC.k_B * tg.T_eff) == doctest::Approx(-1.3945155e-8).epsilon(1e-4));
  }
  SUBCASE("purely electric atom uses only the TM branch") {
    const auto tg = geom_from_tau(1e-3);
    const auto a_only = make_atom(unit_atom().alpha0, 0.0);
    const auto b_only = make_atom(0.0, unit_atom().beta0);
    const double da = delta2_l0(a_only, tg, kG, fast());
    const double db = delta2_l0(b_only, tg, kG, fast());
    const double dab = delta2_l0(unit_atom(), tg, kG, fast());
    CHECK(da + db == doctest::Approx(dab).epsilon(1e-10));
    CHECK(std::abs(db) < 1e-2 * std::abs(da));
  }
  SUBCASE("log-coefficient of the deep low-T law") {
    // two-parameter fit of d(T) = A T^4 ln(T/T_eff_g) + B T^4 over the
    // genuinely asymptotic window tau in [1e-5, 1e-4], in kT_eff units
    const auto coef = asymptotics::coefficients(unit_atom(), kA, kG);
    const double v = kG.v_tilde;
    const double A54 =
        12.0 * kC.zeta3 * kC.alpha_fs * (coef.r1 + coef.r2) / (v * v);
    double s_xx = 0, s_xy = 0, s_yy = 0, s_xz = 0, s_yz = 0;
    for (int i = 0; i < 7; ++i) {
      const double tau = 1e-5 * std::pow(10.0, i / 6.0);
      const auto tg = geom_from_tau(tau);
      const double d = delta2_l0(atom, tg, kG, fast()) / (kC.k_B * tg.T_eff);
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
    CHECK(A_fit == doctest::Approx(A54).epsilon(0.02));
  }
}

TEST_CASE("breakdown composition and ordering") {
  const auto atom = unit_atom();
  EvalOptions o;
  o.rel_tol = 1e-10;
  const auto tg = geom_from_tau(1e-3);
  const auto b = free_energy_breakdown(atom, tg, kG, o);
  CHECK(b.flags.empty());
  CHECK(b.F_total_decomposed ==
        doctest::Approx(b.E0 + b.d1 + b.d2_lgeq1 + b.d2_l0).epsilon(1e-14));
  // low-temperature ordering of the three corrections
  CHECK(std::abs(b.d2_lgeq1) > std::abs(b.d2_l0));
  CHECK(std::abs(b.d2_l0) > std::abs(b.d1));
  // decomposed and numeric totals agree better than the correction size;
  // the linearization residual shrinks fast under tau-halving, which the
  // acceptance suite measures
  CHECK(std::abs(b.F_total_decomposed - b.F_total_numeric) <
        0.2 * std::abs(b.F_total_numeric - b.E0));

  SUBCASE("empty atom gives an all-zero record") {
    const auto z = free_energy_breakdown(make_atom(0.0, 0.0), tg, kG, o);
    CHECK(z.E0 == 0.0);
    CHECK(z.d1 == 0.0);
    CHECK(z.d2_lgeq1 == 0.0);
    CHECK(z.d2_l0 == 0.0);
    CHECK(z.F_total_numeric == 0.0);
  }
}

TEST_CASE("entropy") {
  const auto atom = unit_atom();
  SUBCASE("empty atom") {
    CHECK(entropy(make_atom(0.0, 0.0), kA, 2.0, kG, fast()) == 0.0);
  }
  SUBCASE("positive at low temperature and consistent with a crude slope") {
    EvalOptions o = fast();
    const auto tg = geom_from_tau(2e-3);
    const double T = tg.T;
    const double s = entropy(atom, kA, T, kG, o);
    CHECK(s > 0.0);
    const double f1 = free_energy_full(atom, geom_from_tau(1.9e-3), kG, o);
    const double f2 = free_energy_full(atom, geom_from_tau(2.1e-3), kG, o);
    const double T1 = geom_from_tau(1.9e-3).T;
    const double T2 = geom_from_tau(2.1e-3).T;
    const double crude = -(f2 - f1) / (T2 - T1);
    CHECK(s == doctest::Approx(crude).epsilon(0.02));
  }
}
